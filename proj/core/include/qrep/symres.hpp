#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrep/quiver.hpp"
#include "qrep/rep.hpp"

namespace qrep {

// A natural number extended by "infinite" and "unknown"; used for flat
// dimensions and dominant dimensions of abstract rings.
struct ExtNat {
    enum class Kind { Finite, Infinite, Unknown };

    static ExtNat finite(std::uint64_t v) { return ExtNat{Kind::Finite, v}; }
    static ExtNat infinite() { return ExtNat{Kind::Infinite, 0}; }
    static ExtNat unknown() { return ExtNat{Kind::Unknown, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_unknown() const { return kind == Kind::Unknown; }

    bool operator==(const ExtNat& rhs) const {
        return kind == rhs.kind && (kind != Kind::Finite || value == rhs.value);
    }
    bool operator!=(const ExtNat& rhs) const { return !(*this == rhs); }

    std::string to_string() const;
    // Accepts a decimal number, "infinite" or "unknown".
    static ExtNat parse(const std::string& text);

    Kind kind = Kind::Finite;
    std::uint64_t value = 0;
};

// Declarative description of a base ring R: the symbols I^0, I^1, ... of its
// minimal injective resolution with flat-dimension data, plus dominant
// dimension and Gorenstein flags. Profiles are supplied, never derived.
class RingProfile {
public:
    struct InjTerm {
        ExtNat fd;
    };

    RingProfile(std::string name, std::vector<InjTerm> inj_terms, bool exact_length,
                ExtNat dom_dim, std::optional<bool> gorenstein_all_k,
                std::map<std::uint64_t, bool> gorenstein, bool self_injective);

    // The base field K: one projective-injective term.
    static RingProfile field();
    // K[x]/(x^2): self-injective, Auslander, dominant dimension infinite.
    static RingProfile dual_numbers();
    // Open-ended profile with all data unknown; every symbol I^i exists.
    static RingProfile generic_open_ended(std::string name = "R");

    const std::string& name() const noexcept { return name_; }
    std::size_t listed_terms() const noexcept { return inj_terms_.size(); }
    bool exact_length() const noexcept { return exact_length_; }
    bool self_injective() const noexcept { return self_injective_; }

    // Whether I^i is (possibly) nonzero. Beyond an exact-length profile the
    // terms are zero; open-ended profiles have all terms.
    bool has_term(std::uint64_t i) const;
    // fd(I^i); Unknown when the profile does not list it.
    ExtNat fd(std::uint64_t i) const;

    const ExtNat& dom_dim() const noexcept { return dom_dim_; }
    // Whether R is k-Gorenstein, when the profile knows.
    std::optional<bool> k_gorenstein(std::uint64_t k) const;
    std::optional<bool> gorenstein_all_k() const noexcept { return gorenstein_all_k_; }
    const std::map<std::uint64_t, bool>& gorenstein_map() const noexcept { return gorenstein_; }

    static RingProfile from_json(const std::string& text, const std::string& source_name);
    static RingProfile from_json_file(const std::string& path);
    std::string to_json() const;

private:
    std::string name_;
    std::vector<InjTerm> inj_terms_;
    bool exact_length_;
    ExtNat dom_dim_;
    std::optional<bool> gorenstein_all_k_;
    std::map<std::uint64_t, bool> gorenstein_;
    bool self_injective_;
};

// A finite direct sum (+)_x e_rho^x((+)_mult I^degree), kept as a canonically
// ordered, merged multiset of (vertex, degree, multiplicity) entries.
class FormalInjective {
public:
    struct Entry {
        VertexId vertex;
        std::uint64_t degree;
        std::uint64_t multiplicity;

        bool operator==(const Entry& rhs) const {
            return vertex == rhs.vertex && degree == rhs.degree && multiplicity == rhs.multiplicity;
        }
    };

    FormalInjective() = default;

    void add(VertexId vertex, std::uint64_t degree, std::uint64_t multiplicity);
    FormalInjective& operator+=(const FormalInjective& rhs);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    std::uint64_t total_multiplicity() const;
    std::optional<std::uint64_t> multiplicity_of(VertexId vertex, std::uint64_t degree) const;

    bool operator==(const FormalInjective& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const FormalInjective& rhs) const { return !(*this == rhs); }

private:
    std::vector<Entry> entries_;  // sorted by (vertex, degree)
};

// Degree-i term of the minimal injective resolution of e_lambda^v(R): path
// multiplicities of I^i at sinks, Q''-multiplicities of I^{i-1} elsewhere.
FormalInjective j_term(const Quiver& q, VertexId v, std::uint64_t i, const RingProfile& profile);

// Terms of the minimal injective resolution of the path algebra RQ itself:
// degree-i output is the multiset sum of j_term over all vertices.
std::vector<FormalInjective> algebra_resolution(const Quiver& q, const RingProfile& profile,
                                                std::uint64_t up_to);

// Upper bound on the flat dimension of a formal term: fd(e_rho^x(I^j)) is at
// most fd_j + 1, with equality fd_j at the sink of a linear quiver. Returns
// the max over entries (a bound, not an exact value).
ExtNat fd_bound(const Quiver& q, const FormalInjective& term, const RingProfile& profile);

// RQ is k-Gorenstein iff the quiver is linear and R is k-Gorenstein.
bool is_k_gorenstein(const Quiver& q, bool r_is_k_gorenstein, std::uint64_t k);

enum class TriBool { True, False, Unknown };

std::string to_string(TriBool t);

// Sufficient test: certified when the profile shows fd_i <= i for all
// 0 <= i < k; False means the certificate fails, not a refutation.
TriBool is_quasi_k_gorenstein_sufficient(const Quiver& q, const RingProfile& profile,
                                         std::uint64_t k);

struct DomDimResult {
    ExtNat value;
    // n = 1 falls outside the covered statement; the value returned there is
    // dom.dim R itself.
    bool beyond_stated_range;
};

DomDimResult dominant_dimension(const Quiver& q, ExtNat dom_dim_r);

struct GncLocation {
    VertexId vertex;
    std::uint64_t degree;
};

// Where e_rho^v(I^i) appears as a summand in the algebra resolution: (v, i)
// at sinks, (successor, i+1) elsewhere. The containment is re-verified.
GncLocation gnc_summand_locator(const Quiver& q, VertexId v, std::uint64_t i);

// Algebra resolution at the field profile.
std::vector<FormalInjective> specialize_to_field(const Quiver& q, std::uint64_t up_to);

// Builds the concrete representation (+) e_rho^x(K^mult) of a formal term
// whose symbols are all I^0 over a field profile.
Representation materialize_at_field(std::shared_ptr<const Quiver> q, const Field& f,
                                    const FormalInjective& term);

// Compares j_term at the field profile against the concrete minimal injective
// resolution of e_lambda^v(K), per-vertex dimensions, degrees 0..up_to.
bool field_cross_check(const Quiver& q, VertexId v, std::uint64_t up_to = 3);

std::string formal_injective_to_json(const Quiver& q, const FormalInjective& term);

}  // namespace qrep
