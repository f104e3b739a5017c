#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qrep/quiver.hpp"
#include "qrep/rep.hpp"

namespace qrep {

// The tensor product quiver: vertices V x V', arrows (V x E') u (E x V'),
// carrying the lifted factor relations plus one commutativity difference per
// arrow pair. Provenance maps composite cells back to the factors.
struct TensorQuiver {
    std::shared_ptr<const Quiver> product;
    std::vector<Relation> relations;

    // the factors themselves, for provenance
    std::shared_ptr<const Quiver> first;
    std::shared_ptr<const Quiver> second;

    // factor coordinates of each product vertex
    std::vector<std::pair<VertexId, VertexId>> vertex_origin;

    VertexId product_vertex(VertexId a, VertexId b) const;
    // (a, beta): the copy of beta sitting at first-factor vertex a.
    ArrowId vertical_arrow(VertexId a, ArrowId beta) const;
    // (alpha, b): the copy of alpha sitting at second-factor vertex b.
    ArrowId horizontal_arrow(ArrowId alpha, VertexId b) const;

    std::string to_text() const;
};

TensorQuiver tensor_product(const Quiver& q, std::span<const Relation> relations_q,
                            const Quiver& qp, std::span<const Relation> relations_qp);

// A representation of the product quiver, reorganized along the first factor:
// one representation of the second factor per first-factor vertex, and one
// natural transformation per first-factor arrow.
struct FlattenedRep {
    std::vector<Representation> vertex_reps;
    std::vector<RepMorphism> arrow_maps;
};

// Requires the box relations to hold; throws RelationsViolatedError naming
// the first failing relation otherwise.
FlattenedRep flatten(const TensorQuiver& t, const Representation& m);

Representation unflatten(const TensorQuiver& t, const FlattenedRep& f);

// K(Q (x) Q') is k-Gorenstein over a field iff both factors are linear.
bool tensor_gorenstein(const Quiver& q, const Quiver& qp, std::uint64_t k);

}  // namespace qrep
