#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qrep/matrix.hpp"
#include "qrep/scalar.hpp"

namespace qrep {

// Vertices and arrows are addressed by their position in the quiver's ordered
// sets; the declared name tokens are kept for i/o. All canonical orderings
// (arrow choices, path comparison, direct-sum block layout) follow these
// positions.
using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
    std::string name;
    VertexId source;
    VertexId target;
};

class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::string name) : name_(std::move(name)) {}

    VertexId add_vertex(const std::string& name);
    ArrowId add_arrow(const std::string& name, VertexId source, VertexId target);
    ArrowId add_arrow(const std::string& name, const std::string& source, const std::string& target);

    const std::string& name() const noexcept { return name_; }
    std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<ArrowId> find_arrow(const std::string& name) const;
    // Throws UnknownVertexError when absent.
    VertexId vertex(const std::string& name) const;

    // Arrow ids in ascending (declaration) order.
    const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
    const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

    bool is_sink(VertexId v) const { return out_.at(v).empty(); }
    bool is_source(VertexId v) const { return in_.at(v).empty(); }

    // Structural equality, names included.
    bool operator==(const Quiver& rhs) const;
    bool operator!=(const Quiver& rhs) const { return !(*this == rhs); }

    std::string to_text() const;

private:
    std::string name_;
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<ArrowId>> out_;
    std::vector<std::vector<ArrowId>> in_;
};

// A composable arrow sequence. arrows()[0] is applied first; the composite
// written in operator order is arrows()[n-1] ... arrows()[0]. An empty
// sequence is the trivial path e_v at source() == target().
class Path {
public:
    explicit Path(VertexId v) : source_(v), target_(v) {}
    Path(const Quiver& q, std::vector<ArrowId> arrows);

    VertexId source() const noexcept { return source_; }
    VertexId target() const noexcept { return target_; }
    std::size_t length() const noexcept { return arrows_.size(); }
    bool is_trivial() const noexcept { return arrows_.empty(); }
    const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }

    // The composite a∘p: follow this path, then arrow a (requires
    // q.arrow(a).source == target()).
    Path extended_by(const Quiver& q, ArrowId a) const;
    // The composite p∘a: arrow a first, then this path (requires
    // q.arrow(a).target == source()).
    Path prefixed_by(const Quiver& q, ArrowId a) const;

    bool operator==(const Path& rhs) const {
        return source_ == rhs.source_ && arrows_ == rhs.arrows_;
    }
    bool operator!=(const Path& rhs) const { return !(*this == rhs); }

    // (length, lexicographic arrow sequence), then source as a tie-break for
    // trivial paths at different vertices.
    bool operator<(const Path& rhs) const;

    // Arrow names in operator order (rightmost applied first); trivial paths
    // render as "e_<vertex>".
    std::string to_text(const Quiver& q) const;

private:
    VertexId source_;
    VertexId target_;
    std::vector<ArrowId> arrows_;
};

// Formal linear combination of parallel paths of length >= 2 with a common
// source and target; coefficients are exact rationals mapped into the working
// field on evaluation.
class Relation {
public:
    struct Term {
        Rational coefficient;
        Path path;
    };

    Relation(const Quiver& q, std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    VertexId source() const { return terms_.front().path.source(); }
    VertexId target() const { return terms_.front().path.target(); }

    std::string to_text(const Quiver& q) const;

private:
    std::vector<Term> terms_;
};

struct Diagnostics {
    bool acyclic = false;
    bool connected = false;
    std::vector<VertexId> sinks;
    std::vector<VertexId> sources;
};

// Pure report; never throws.
Diagnostics validate(const Quiver& q);

// Levels of the sink-distance layering: levels[0] is the sink set and
// level_of[v] is the longest directed path length from v to a sink.
struct VertexPartition {
    std::vector<std::vector<VertexId>> levels;
    std::vector<std::size_t> level_of;
};

VertexPartition vertex_partition(const Quiver& q);

// All paths from v to w ordered by (length, lexicographic arrow sequence);
// contains e_v iff v == w.
std::vector<Path> enumerate_paths(const Quiver& q, VertexId v, VertexId w);

// Q'(v,w): the disjoint union of Q(v, t(a)) over out-arrows a of w, flattened
// block by block in arrow order. Duplicate paths across blocks are kept.
std::vector<Path> q_prime(const Quiver& q, VertexId v, VertexId w);

// Picks the distinguished out-arrow of w used to carve Q''(v,w).
using ArrowChoice = std::function<ArrowId(const Quiver&, VertexId v, VertexId w)>;

// Default choice: the least out-arrow of w.
ArrowId default_arrow_choice(const Quiver& q, VertexId v, VertexId w);

// Q''(v,w) = Q'(v,w) minus the chosen block's copies a·Q(v,w). Requires w not
// a sink. |Q''| == |Q'| - |Q| for every choice.
std::vector<Path> q_double_prime(const Quiver& q, VertexId v, VertexId w,
                                 const ArrowChoice& choose = {});

// Connected, acyclic, and every in/out degree at most one.
bool is_linear(const Quiver& q);

std::size_t longest_path_length(const Quiver& q);

// Entry (i, j) counts the paths from vertex i to vertex j; computed over the
// rationals as sum of adjacency-matrix powers.
Matrix path_count_matrix(const Quiver& q);

// The counts of path_count_matrix as plain integers.
std::vector<std::vector<std::uint64_t>> path_count_table(const Quiver& q);

// Quiver text format plus optional `relation` lines.
struct BoundQuiver {
    Quiver quiver;
    std::vector<Relation> relations;
};

BoundQuiver parse_bound_quiver(std::istream& in, const std::string& source_name);
BoundQuiver parse_bound_quiver_file(const std::string& path);

std::string bound_quiver_to_text(const Quiver& q, const std::vector<Relation>& relations);

}  // namespace qrep
