#include "qrep/quiver.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

namespace qrep {

VertexId Quiver::add_vertex(const std::string& name) {
    if (name.empty()) throw InputError("empty vertex id");
    if (find_vertex(name)) throw InputError("duplicate vertex id '" + name + "'");
    vertex_names_.push_back(name);
    out_.emplace_back();
    in_.emplace_back();
    return static_cast<VertexId>(vertex_names_.size() - 1);
}

ArrowId Quiver::add_arrow(const std::string& name, VertexId source, VertexId target) {
    if (name.empty()) throw InputError("empty arrow id");
    if (find_arrow(name)) throw InputError("duplicate arrow id '" + name + "'");
    if (source >= vertex_count() || target >= vertex_count()) {
        throw UnknownVertexError("arrow '" + name + "' references an unknown vertex");
    }
    arrows_.push_back(Arrow{name, source, target});
    ArrowId id = static_cast<ArrowId>(arrows_.size() - 1);
    out_[source].push_back(id);
    in_[target].push_back(id);
    return id;
}

ArrowId Quiver::add_arrow(const std::string& name, const std::string& source,
                          const std::string& target) {
    return add_arrow(name, vertex(source), vertex(target));
}

std::optional<VertexId> Quiver::find_vertex(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
        if (vertex_names_[i] == name) return static_cast<VertexId>(i);
    }
    return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (arrows_[i].name == name) return static_cast<ArrowId>(i);
    }
    return std::nullopt;
}

VertexId Quiver::vertex(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw UnknownVertexError("unknown vertex '" + name + "'");
    return *v;
}

bool Quiver::operator==(const Quiver& rhs) const {
    if (name_ != rhs.name_ || vertex_names_ != rhs.vertex_names_ ||
        arrows_.size() != rhs.arrows_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (arrows_[i].name != rhs.arrows_[i].name || arrows_[i].source != rhs.arrows_[i].source ||
            arrows_[i].target != rhs.arrows_[i].target) {
            return false;
        }
    }
    return true;
}

std::string Quiver::to_text() const {
    std::ostringstream os;
    os << "quiver " << (name_.empty() ? "unnamed" : name_) << "\n";
    if (!vertex_names_.empty()) {
        os << "vertices";
        for (const auto& v : vertex_names_) os << " " << v;
        os << "\n";
    }
    for (const auto& a : arrows_) {
        os << "arrow " << a.name << " " << vertex_names_[a.source] << " " << vertex_names_[a.target]
           << "\n";
    }
    return os.str();
}

Path::Path(const Quiver& q, std::vector<ArrowId> arrows) : source_(0), target_(0), arrows_(std::move(arrows)) {
    if (arrows_.empty()) throw InputError("use Path(VertexId) for trivial paths");
    for (std::size_t i = 0; i + 1 < arrows_.size(); ++i) {
        if (q.arrow(arrows_[i]).target != q.arrow(arrows_[i + 1]).source) {
            throw InputError("path arrows do not compose");
        }
    }
    source_ = q.arrow(arrows_.front()).source;
    target_ = q.arrow(arrows_.back()).target;
}

Path Path::extended_by(const Quiver& q, ArrowId a) const {
    if (q.arrow(a).source != target_) throw InputError("arrow does not extend path");
    Path p(*this);
    p.arrows_.push_back(a);
    p.target_ = q.arrow(a).target;
    return p;
}

Path Path::prefixed_by(const Quiver& q, ArrowId a) const {
    if (q.arrow(a).target != source_) throw InputError("arrow does not prefix path");
    Path p(source_);
    p.arrows_.reserve(arrows_.size() + 1);
    p.arrows_.push_back(a);
    p.arrows_.insert(p.arrows_.end(), arrows_.begin(), arrows_.end());
    p.source_ = q.arrow(a).source;
    p.target_ = target_;
    return p;
}

bool Path::operator<(const Path& rhs) const {
    if (arrows_.size() != rhs.arrows_.size()) return arrows_.size() < rhs.arrows_.size();
    if (arrows_ != rhs.arrows_) return arrows_ < rhs.arrows_;
    return source_ < rhs.source_;
}

std::string Path::to_text(const Quiver& q) const {
    if (is_trivial()) return "e_" + q.vertex_name(source_);
    std::string s;
    for (std::size_t i = arrows_.size(); i-- > 0;) {
        s += q.arrow(arrows_[i]).name;
        if (i != 0) s += " ";
    }
    return s;
}

Relation::Relation(const Quiver& q, std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InputError("relation has no terms");
    VertexId s = terms_.front().path.source();
    VertexId t = terms_.front().path.target();
    for (const auto& term : terms_) {
        if (term.path.length() < 2) {
            throw InputError("relation term '" + term.path.to_text(q) + "' has length < 2");
        }
        if (term.path.source() != s || term.path.target() != t) {
            throw InputError("relation terms do not share source and target");
        }
        if (term.coefficient == 0) throw InputError("relation term with zero coefficient");
    }
}

std::string Relation::to_text(const Quiver& q) const {
    std::string s = "relation ";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += "; ";
        s += terms_[i].coefficient.get_str() + " " + terms_[i].path.to_text(q);
    }
    return s;
}

namespace {

// Kahn peeling by out-degree; returns level_of, or nullopt when cyclic.
std::optional<std::vector<std::size_t>> sink_levels(const Quiver& q) {
    std::size_t n = q.vertex_count();
    std::vector<std::size_t> out_degree(n), level(n, 0);
    std::deque<VertexId> ready;
    for (VertexId v = 0; v < n; ++v) {
        out_degree[v] = q.out_arrows(v).size();
        if (out_degree[v] == 0) ready.push_back(v);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        VertexId v = ready.front();
        ready.pop_front();
        ++seen;
        for (ArrowId a : q.in_arrows(v)) {
            VertexId u = q.arrow(a).source;
            level[u] = std::max(level[u], level[v] + 1);
            if (--out_degree[u] == 0) ready.push_back(u);
        }
    }
    if (seen != n) return std::nullopt;
    return level;
}

bool underlying_connected(const Quiver& q) {
    std::size_t n = q.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        auto visit = [&](VertexId u) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                queue.push_back(u);
            }
        };
        for (ArrowId a : q.out_arrows(v)) visit(q.arrow(a).target);
        for (ArrowId a : q.in_arrows(v)) visit(q.arrow(a).source);
    }
    return count == n;
}

}  // namespace

Diagnostics validate(const Quiver& q) {
    Diagnostics d;
    d.acyclic = sink_levels(q).has_value();
    d.connected = underlying_connected(q);
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        if (q.is_sink(v)) d.sinks.push_back(v);
        if (q.is_source(v)) d.sources.push_back(v);
    }
    return d;
}

VertexPartition vertex_partition(const Quiver& q) {
    auto levels = sink_levels(q);
    if (!levels) throw CyclicQuiverError();
    VertexPartition p;
    p.level_of = *levels;
    std::size_t max_level = 0;
    for (std::size_t l : p.level_of) max_level = std::max(max_level, l);
    if (q.vertex_count() > 0) p.levels.resize(max_level + 1);
    for (VertexId v = 0; v < q.vertex_count(); ++v) p.levels[p.level_of[v]].push_back(v);
    return p;
}

std::vector<Path> enumerate_paths(const Quiver& q, VertexId v, VertexId w) {
    if (v >= q.vertex_count() || w >= q.vertex_count()) throw UnknownVertexError("path endpoint out of range");
    if (!sink_levels(q)) throw CyclicQuiverError();
    std::vector<Path> result;
    // Frontier of all paths of the current length from v, in lexicographic
    // order; extending in order preserves it, and lengths grow monotonically.
    std::vector<Path> frontier{Path(v)};
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            if (p.target() == w) result.push_back(p);
            for (ArrowId a : q.out_arrows(p.target())) next.push_back(p.extended_by(q, a));
        }
        frontier = std::move(next);
    }
    return result;
}

std::vector<Path> q_prime(const Quiver& q, VertexId v, VertexId w) {
    if (w >= q.vertex_count()) throw UnknownVertexError("vertex out of range");
    if (!sink_levels(q)) throw CyclicQuiverError();
    std::vector<Path> result;
    for (ArrowId a : q.out_arrows(w)) {
        std::vector<Path> block = enumerate_paths(q, v, q.arrow(a).target);
        result.insert(result.end(), block.begin(), block.end());
    }
    return result;
}

ArrowId default_arrow_choice(const Quiver& q, VertexId /*v*/, VertexId w) {
    return q.out_arrows(w).front();
}

std::vector<Path> q_double_prime(const Quiver& q, VertexId v, VertexId w,
                                 const ArrowChoice& choose) {
    if (w >= q.vertex_count()) throw UnknownVertexError("vertex out of range");
    if (!sink_levels(q)) throw CyclicQuiverError();
    if (q.is_sink(w)) {
        throw SinkVertexError("Q''(v,w) requires an out-arrow at '" + q.vertex_name(w) + "'");
    }
    ArrowId chosen = choose ? choose(q, v, w) : default_arrow_choice(q, v, w);
    const auto& out = q.out_arrows(w);
    if (std::find(out.begin(), out.end(), chosen) == out.end()) {
        throw InputError("chosen arrow does not start at the given vertex");
    }
    std::vector<Path> result;
    for (ArrowId a : out) {
        for (Path& p : enumerate_paths(q, v, q.arrow(a).target)) {
            // In the chosen block, drop exactly the paths of the form a·p
            // with p from v to w: those ending with the chosen arrow.
            if (a == chosen && !p.is_trivial() && p.arrows().back() == chosen) continue;
            result.push_back(std::move(p));
        }
    }
    return result;
}

bool is_linear(const Quiver& q) {
    if (!underlying_connected(q)) return false;
    if (!sink_levels(q)) return false;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        if (q.out_arrows(v).size() > 1 || q.in_arrows(v).size() > 1) return false;
    }
    return true;
}

std::size_t longest_path_length(const Quiver& q) {
    auto levels = sink_levels(q);
    if (!levels) throw CyclicQuiverError();
    std::size_t m = 0;
    for (std::size_t l : *levels) m = std::max(m, l);
    return m;
}

Matrix path_count_matrix(const Quiver& q) {
    std::size_t max_len = longest_path_length(q);  // throws on cycles
    std::size_t n = q.vertex_count();
    Field f = Field::rationals();
    Matrix adjacency(f, n, n);
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        auto& e = adjacency.at(q.arrow(a).source, q.arrow(a).target);
        e += Scalar::one(f);
    }
    Matrix total = Matrix::identity(f, n);
    Matrix power = Matrix::identity(f, n);
    for (std::size_t k = 1; k <= max_len; ++k) {
        power = power * adjacency;
        total = total + power;
    }
    return total;
}

std::vector<std::vector<std::uint64_t>> path_count_table(const Quiver& q) {
    Matrix m = path_count_matrix(q);
    std::vector<std::vector<std::uint64_t>> table(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) table[i][j] = m.at(i, j).to_uint64();
    }
    return table;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

Path parse_path_tokens(const Quiver& q, const std::vector<std::string>& tokens, std::size_t begin,
                       std::size_t end, const std::string& file, std::size_t line_no) {
    // Tokens are written rightmost-first: the last token is applied first.
    std::vector<ArrowId> arrows;
    for (std::size_t i = end; i-- > begin;) {
        auto a = q.find_arrow(tokens[i]);
        if (!a) throw ParseError(file, line_no, tokens[i], "unknown arrow in relation");
        arrows.push_back(*a);
    }
    if (arrows.empty()) throw ParseError(file, line_no, "", "empty path in relation");
    try {
        return Path(q, std::move(arrows));
    } catch (const InputError& e) {
        throw ParseError(file, line_no, tokens[begin], e.what());
    }
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

}  // namespace

BoundQuiver parse_bound_quiver(std::istream& in, const std::string& source_name) {
    Quiver q;
    bool named = false;
    std::vector<std::string> relation_lines;
    std::vector<std::size_t> relation_line_numbers;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];
        if (directive == "quiver") {
            if (named) throw ParseError(source_name, line_no, directive, "repeated quiver line");
            if (tokens.size() != 2) throw ParseError(source_name, line_no, directive, "expected: quiver <name>");
            q = Quiver(tokens[1]);
            named = true;
        } else if (directive == "vertices") {
            if (!named) throw ParseError(source_name, line_no, directive, "quiver line must come first");
            if (tokens.size() < 2) throw ParseError(source_name, line_no, directive, "expected at least one vertex id");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                try {
                    q.add_vertex(tokens[i]);
                } catch (const InputError& e) {
                    throw ParseError(source_name, line_no, tokens[i], e.what());
                }
            }
        } else if (directive == "arrow") {
            if (!named) throw ParseError(source_name, line_no, directive, "quiver line must come first");
            if (tokens.size() != 4) {
                throw ParseError(source_name, line_no, directive, "expected: arrow <id> <src> <dst>");
            }
            try {
                q.add_arrow(tokens[1], tokens[2], tokens[3]);
            } catch (const Error& e) {
                throw ParseError(source_name, line_no, tokens[1], e.what());
            }
        } else if (directive == "relation") {
            // defer until all arrows are known
            std::string rest = line;
            rest.erase(0, rest.find("relation") + std::string("relation").size());
            relation_lines.push_back(rest);
            relation_line_numbers.push_back(line_no);
        } else {
            throw ParseError(source_name, line_no, directive, "unknown directive");
        }
    }
    if (!named) throw ParseError(source_name, line_no, "", "missing quiver line");

    BoundQuiver result{std::move(q), {}};
    for (std::size_t r = 0; r < relation_lines.size(); ++r) {
        std::size_t rline = relation_line_numbers[r];
        std::vector<Relation::Term> terms;
        for (const std::string& segment : split_on(relation_lines[r], ';')) {
            std::vector<std::string> tokens = tokenize(segment);
            if (tokens.empty()) {
                throw ParseError(source_name, rline, ";", "empty relation term");
            }
            Rational coeff;
            try {
                coeff = Rational(tokens[0], 10);
                if (coeff.get_den() == 0) throw std::invalid_argument("zero denominator");
                coeff.canonicalize();
            } catch (const std::invalid_argument&) {
                throw ParseError(source_name, rline, tokens[0], "expected a coefficient");
            }
            Path p = parse_path_tokens(result.quiver, tokens, 1, tokens.size(), source_name, rline);
            terms.push_back(Relation::Term{coeff, p});
        }
        try {
            result.relations.emplace_back(result.quiver, std::move(terms));
        } catch (const InputError& e) {
            throw ParseError(source_name, rline, "relation", e.what());
        }
    }
    return result;
}

BoundQuiver parse_bound_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open quiver file '" + path + "'");
    return parse_bound_quiver(in, path);
}

std::string bound_quiver_to_text(const Quiver& q, const std::vector<Relation>& relations) {
    std::string text = q.to_text();
    for (const auto& r : relations) text += r.to_text(q) + "\n";
    return text;
}

}  // namespace qrep
