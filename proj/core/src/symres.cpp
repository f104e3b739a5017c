#include "qrep/symres.hpp"

#include <algorithm>

namespace qrep {

namespace {

void require_connected_acyclic(const Quiver& q) {
    Diagnostics d = validate(q);
    if (!d.acyclic) throw CyclicQuiverError();
    if (!d.connected) throw NotConnectedError();
}

}  // namespace

std::string ExtNat::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinite: return "infinite";
        case Kind::Unknown: return "unknown";
    }
    return "unknown";
}

ExtNat ExtNat::parse(const std::string& text) {
    if (text == "infinite") return infinite();
    if (text == "unknown") return unknown();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("expected a number, 'infinite' or 'unknown', got '" + text + "'");
    }
    return finite(std::stoull(text));
}

RingProfile::RingProfile(std::string name, std::vector<InjTerm> inj_terms, bool exact_length,
                         ExtNat dom_dim, std::optional<bool> gorenstein_all_k,
                         std::map<std::uint64_t, bool> gorenstein, bool self_injective)
    : name_(std::move(name)),
      inj_terms_(std::move(inj_terms)),
      exact_length_(exact_length),
      dom_dim_(dom_dim),
      gorenstein_all_k_(gorenstein_all_k),
      gorenstein_(std::move(gorenstein)),
      self_injective_(self_injective) {
    if (self_injective_) {
        bool ok = exact_length_ && inj_terms_.size() == 1 && inj_terms_[0].fd == ExtNat::finite(0);
        if (!ok) {
            throw InputError("self-injective profile must list exactly I^0 with fd 0 and exact length");
        }
    }
}

RingProfile RingProfile::field() {
    return RingProfile("K", {InjTerm{ExtNat::finite(0)}}, true, ExtNat::infinite(), true, {}, true);
}

RingProfile RingProfile::dual_numbers() {
    return RingProfile("K[x]/(x^2)", {InjTerm{ExtNat::finite(0)}}, true, ExtNat::infinite(), true,
                       {}, true);
}

RingProfile RingProfile::generic_open_ended(std::string name) {
    return RingProfile(std::move(name), {}, false, ExtNat::unknown(), std::nullopt, {}, false);
}

bool RingProfile::has_term(std::uint64_t i) const {
    return !exact_length_ || i < inj_terms_.size();
}

ExtNat RingProfile::fd(std::uint64_t i) const {
    if (i < inj_terms_.size()) return inj_terms_[i].fd;
    if (exact_length_) return ExtNat::finite(0);  // the zero module is flat
    return ExtNat::unknown();
}

std::optional<bool> RingProfile::k_gorenstein(std::uint64_t k) const {
    auto it = gorenstein_.find(k);
    if (it != gorenstein_.end()) return it->second;
    if (gorenstein_all_k_.has_value() && *gorenstein_all_k_) return true;
    return std::nullopt;
}

void FormalInjective::add(VertexId vertex, std::uint64_t degree, std::uint64_t multiplicity) {
    if (multiplicity == 0) return;
    auto key_less = [](const Entry& e, std::pair<VertexId, std::uint64_t> key) {
        return e.vertex != key.first ? e.vertex < key.first : e.degree < key.second;
    };
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(vertex, degree),
                               key_less);
    if (it != entries_.end() && it->vertex == vertex && it->degree == degree) {
        it->multiplicity += multiplicity;
    } else {
        entries_.insert(it, Entry{vertex, degree, multiplicity});
    }
}

FormalInjective& FormalInjective::operator+=(const FormalInjective& rhs) {
    for (const Entry& e : rhs.entries_) add(e.vertex, e.degree, e.multiplicity);
    return *this;
}

std::uint64_t FormalInjective::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const Entry& e : entries_) total += e.multiplicity;
    return total;
}

std::optional<std::uint64_t> FormalInjective::multiplicity_of(VertexId vertex,
                                                              std::uint64_t degree) const {
    for (const Entry& e : entries_) {
        if (e.vertex == vertex && e.degree == degree) return e.multiplicity;
    }
    return std::nullopt;
}

FormalInjective j_term(const Quiver& q, VertexId v, std::uint64_t i, const RingProfile& profile) {
    require_connected_acyclic(q);
    if (v >= q.vertex_count()) throw UnknownVertexError("j_term: vertex out of range");
    auto counts = path_count_table(q);
    FormalInjective term;
    for (VertexId x = 0; x < q.vertex_count(); ++x) {
        if (q.is_sink(x)) {
            if (counts[v][x] > 0 && profile.has_term(i)) term.add(x, i, counts[v][x]);
        } else if (i >= 1 && profile.has_term(i - 1)) {
            // |Q''(v,x)| = sum over out-arrows of |Q(v, t(a))| minus |Q(v,x)|;
            // independent of the arrow choice.
            std::uint64_t q_prime_count = 0;
            for (ArrowId a : q.out_arrows(x)) q_prime_count += counts[v][q.arrow(a).target];
            std::uint64_t q_pp = q_prime_count - counts[v][x];
            if (q_pp > 0) term.add(x, i - 1, q_pp);
        }
    }
    return term;
}

std::vector<FormalInjective> algebra_resolution(const Quiver& q, const RingProfile& profile,
                                                std::uint64_t up_to) {
    require_connected_acyclic(q);
    std::vector<FormalInjective> terms;
    for (std::uint64_t i = 0; i <= up_to; ++i) {
        FormalInjective sum;
        for (VertexId v = 0; v < q.vertex_count(); ++v) sum += j_term(q, v, i, profile);
        terms.push_back(std::move(sum));
    }
    return terms;
}

ExtNat fd_bound(const Quiver& q, const FormalInjective& term, const RingProfile& profile) {
    bool linear = is_linear(q);
    bool saw_unknown = false;
    std::uint64_t best = 0;
    for (const auto& entry : term.entries()) {
        ExtNat base = profile.fd(entry.degree);
        if (base.is_infinite()) return ExtNat::infinite();
        if (base.is_unknown()) {
            saw_unknown = true;
            continue;
        }
        bool exact_at_sink = linear && q.is_sink(entry.vertex);
        std::uint64_t bound = base.value + (exact_at_sink ? 0 : 1);
        best = std::max(best, bound);
    }
    if (saw_unknown) return ExtNat::unknown();
    return ExtNat::finite(best);
}

bool is_k_gorenstein(const Quiver& q, bool r_is_k_gorenstein, std::uint64_t k) {
    require_connected_acyclic(q);
    if (k == 0) throw InputError("k must be at least 1");
    return is_linear(q) && r_is_k_gorenstein;
}

std::string to_string(TriBool t) {
    switch (t) {
        case TriBool::True: return "true";
        case TriBool::False: return "false";
        case TriBool::Unknown: return "unknown";
    }
    return "unknown";
}

TriBool is_quasi_k_gorenstein_sufficient(const Quiver& q, const RingProfile& profile,
                                         std::uint64_t k) {
    require_connected_acyclic(q);
    if (k == 0) throw InputError("k must be at least 1");
    bool saw_unknown = false;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (!profile.has_term(i)) continue;  // zero term, flat
        ExtNat fd_i = profile.fd(i);
        if (fd_i.is_infinite()) return TriBool::False;
        if (fd_i.is_unknown()) {
            saw_unknown = true;
            continue;
        }
        if (fd_i.value > i) return TriBool::False;
    }
    return saw_unknown ? TriBool::Unknown : TriBool::True;
}

DomDimResult dominant_dimension(const Quiver& q, ExtNat dom_dim_r) {
    require_connected_acyclic(q);
    if (dom_dim_r.is_unknown()) throw InputError("dom.dim R must be a number or infinite");
    if (q.vertex_count() == 1) return DomDimResult{dom_dim_r, true};
    bool nonzero = !(dom_dim_r == ExtNat::finite(0));
    if (is_linear(q) && nonzero) return DomDimResult{ExtNat::finite(1), false};
    return DomDimResult{ExtNat::finite(0), false};
}

GncLocation gnc_summand_locator(const Quiver& q, VertexId v, std::uint64_t i) {
    require_connected_acyclic(q);
    if (v >= q.vertex_count()) throw UnknownVertexError("gnc locator: vertex out of range");
    GncLocation loc{v, i};
    if (!q.is_sink(v)) {
        VertexId successor = q.arrow(q.out_arrows(v).front()).target;
        for (ArrowId a : q.out_arrows(v)) successor = std::min(successor, q.arrow(a).target);
        loc = GncLocation{successor, i + 1};
    }
    RingProfile open = RingProfile::generic_open_ended();
    FormalInjective located = j_term(q, loc.vertex, loc.degree, open);
    auto mult = located.multiplicity_of(v, i);
    if (!mult || *mult == 0) {
        throw InternalError("located resolution term does not contain the requested summand");
    }
    return loc;
}

std::vector<FormalInjective> specialize_to_field(const Quiver& q, std::uint64_t up_to) {
    return algebra_resolution(q, RingProfile::field(), up_to);
}

Representation materialize_at_field(std::shared_ptr<const Quiver> q, const Field& f,
                                    const FormalInjective& term) {
    Representation result = Representation::zero(q, f);
    for (const auto& entry : term.entries()) {
        if (entry.degree != 0) {
            throw NonFieldError("formal term references I^" + std::to_string(entry.degree) +
                                "; only the field profile can be made concrete");
        }
        result = direct_sum(result, e_rho(q, f, entry.vertex, entry.multiplicity));
    }
    return result;
}

bool field_cross_check(const Quiver& q, VertexId v, std::uint64_t up_to) {
    require_connected_acyclic(q);
    auto qp = std::make_shared<Quiver>(q);
    auto counts = path_count_table(q);
    Field f = Field::rationals();
    auto concrete = min_injective_resolution(e_lambda(qp, f, v, 1), up_to);
    for (std::uint64_t i = 0; i <= up_to; ++i) {
        FormalInjective symbolic = j_term(q, v, i, RingProfile::field());
        for (VertexId w = 0; w < q.vertex_count(); ++w) {
            std::uint64_t expected = 0;
            for (const auto& entry : symbolic.entries()) {
                expected += entry.multiplicity * counts[w][entry.vertex];
            }
            if (concrete[i].term.dim(w) != expected) return false;
        }
    }
    return true;
}

}  // namespace qrep
