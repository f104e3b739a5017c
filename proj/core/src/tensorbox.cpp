#include "qrep/tensorbox.hpp"

namespace qrep {

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

void require_connected_acyclic(const Quiver& q) {
    Diagnostics d = validate(q);
    if (!d.acyclic) throw CyclicQuiverError();
    if (!d.connected) throw NotConnectedError();
}

}  // namespace

VertexId TensorQuiver::product_vertex(VertexId a, VertexId b) const {
    return static_cast<VertexId>(a * second->vertex_count() + b);
}

ArrowId TensorQuiver::vertical_arrow(VertexId a, ArrowId beta) const {
    return static_cast<ArrowId>(a * second->arrow_count() + beta);
}

ArrowId TensorQuiver::horizontal_arrow(ArrowId alpha, VertexId b) const {
    return static_cast<ArrowId>(first->vertex_count() * second->arrow_count() +
                                alpha * second->vertex_count() + b);
}

std::string TensorQuiver::to_text() const {
    return bound_quiver_to_text(*product, relations);
}

TensorQuiver tensor_product(const Quiver& q, std::span<const Relation> relations_q,
                            const Quiver& qp, std::span<const Relation> relations_qp) {
    TensorQuiver t;
    t.first = std::make_shared<const Quiver>(q);
    t.second = std::make_shared<const Quiver>(qp);

    Quiver product(q.name().empty() && qp.name().empty() ? std::string("tensor")
                                                         : q.name() + "x" + qp.name());
    for (VertexId a = 0; a < q.vertex_count(); ++a) {
        for (VertexId b = 0; b < qp.vertex_count(); ++b) {
            product.add_vertex(pair_name(q.vertex_name(a), qp.vertex_name(b)));
            t.vertex_origin.emplace_back(a, b);
        }
    }
    // vertical block (V x E') first, then horizontal (E x V'); the index
    // helpers above mirror this layout.
    for (VertexId a = 0; a < q.vertex_count(); ++a) {
        for (ArrowId beta = 0; beta < qp.arrow_count(); ++beta) {
            const Arrow& br = qp.arrow(beta);
            product.add_arrow(pair_name(q.vertex_name(a), br.name),
                              static_cast<VertexId>(a * qp.vertex_count() + br.source),
                              static_cast<VertexId>(a * qp.vertex_count() + br.target));
        }
    }
    for (ArrowId alpha = 0; alpha < q.arrow_count(); ++alpha) {
        const Arrow& ar = q.arrow(alpha);
        for (VertexId b = 0; b < qp.vertex_count(); ++b) {
            product.add_arrow(pair_name(ar.name, qp.vertex_name(b)),
                              static_cast<VertexId>(ar.source * qp.vertex_count() + b),
                              static_cast<VertexId>(ar.target * qp.vertex_count() + b));
        }
    }
    t.product = std::make_shared<const Quiver>(std::move(product));
    const Quiver& pq = *t.product;

    // lifted relations of the first factor, one copy per second-factor vertex
    for (const Relation& rel : relations_q) {
        for (VertexId b = 0; b < qp.vertex_count(); ++b) {
            std::vector<Relation::Term> terms;
            for (const auto& term : rel.terms()) {
                std::vector<ArrowId> arrows;
                for (ArrowId alpha : term.path.arrows()) arrows.push_back(t.horizontal_arrow(alpha, b));
                terms.push_back(Relation::Term{term.coefficient, Path(pq, std::move(arrows))});
            }
            t.relations.emplace_back(pq, std::move(terms));
        }
    }
    // lifted relations of the second factor, one copy per first-factor vertex
    for (VertexId a = 0; a < q.vertex_count(); ++a) {
        for (const Relation& rel : relations_qp) {
            std::vector<Relation::Term> terms;
            for (const auto& term : rel.terms()) {
                std::vector<ArrowId> arrows;
                for (ArrowId beta : term.path.arrows()) arrows.push_back(t.vertical_arrow(a, beta));
                terms.push_back(Relation::Term{term.coefficient, Path(pq, std::move(arrows))});
            }
            t.relations.emplace_back(pq, std::move(terms));
        }
    }
    // commutativity differences, one per arrow pair
    for (ArrowId alpha = 0; alpha < q.arrow_count(); ++alpha) {
        const Arrow& ar = q.arrow(alpha);
        for (ArrowId beta = 0; beta < qp.arrow_count(); ++beta) {
            const Arrow& br = qp.arrow(beta);
            Path up_then_across(pq, {t.vertical_arrow(ar.source, beta),
                                     t.horizontal_arrow(alpha, br.target)});
            Path across_then_up(pq, {t.horizontal_arrow(alpha, br.source),
                                     t.vertical_arrow(ar.target, beta)});
            t.relations.emplace_back(
                pq, std::vector<Relation::Term>{Relation::Term{Rational(1), up_then_across},
                                                Relation::Term{Rational(-1), across_then_up}});
        }
    }
    return t;
}

FlattenedRep flatten(const TensorQuiver& t, const Representation& m) {
    if (m.quiver() != *t.product) {
        throw QuiverMismatchError("representation does not live on the product quiver");
    }
    if (auto bad = first_violated_relation(m, t.relations)) {
        throw RelationsViolatedError(*bad, t.relations[*bad].to_text(*t.product));
    }

    FlattenedRep result;
    for (VertexId a = 0; a < t.first->vertex_count(); ++a) {
        std::vector<std::size_t> dims;
        for (VertexId b = 0; b < t.second->vertex_count(); ++b) {
            dims.push_back(m.dim(t.product_vertex(a, b)));
        }
        std::vector<Matrix> mats;
        for (ArrowId beta = 0; beta < t.second->arrow_count(); ++beta) {
            mats.push_back(m.mat(t.vertical_arrow(a, beta)));
        }
        result.vertex_reps.emplace_back(t.second, m.field(), std::move(dims), std::move(mats));
    }
    for (ArrowId alpha = 0; alpha < t.first->arrow_count(); ++alpha) {
        const Arrow& ar = t.first->arrow(alpha);
        std::vector<Matrix> comps;
        for (VertexId b = 0; b < t.second->vertex_count(); ++b) {
            comps.push_back(m.mat(t.horizontal_arrow(alpha, b)));
        }
        // the box relations make each of these a natural transformation
        result.arrow_maps.emplace_back(result.vertex_reps[ar.source], result.vertex_reps[ar.target],
                                       std::move(comps));
    }
    return result;
}

Representation unflatten(const TensorQuiver& t, const FlattenedRep& f) {
    if (f.vertex_reps.size() != t.first->vertex_count() ||
        f.arrow_maps.size() != t.first->arrow_count()) {
        throw DimensionMismatchError("flattened data does not match the tensor structure");
    }
    const Field field = f.vertex_reps.empty() ? Field::rationals() : f.vertex_reps[0].field();
    std::vector<std::size_t> dims(t.product->vertex_count(), 0);
    for (VertexId a = 0; a < t.first->vertex_count(); ++a) {
        if (f.vertex_reps[a].field() != field) throw FieldMismatchError("mixed fields in flattened data");
        if (f.vertex_reps[a].quiver() != *t.second) {
            throw QuiverMismatchError("vertex data does not live on the second factor");
        }
        for (VertexId b = 0; b < t.second->vertex_count(); ++b) {
            dims[t.product_vertex(a, b)] = f.vertex_reps[a].dim(b);
        }
    }
    std::vector<Matrix> mats(t.product->arrow_count(), Matrix(field, 0, 0));
    for (VertexId a = 0; a < t.first->vertex_count(); ++a) {
        for (ArrowId beta = 0; beta < t.second->arrow_count(); ++beta) {
            mats[t.vertical_arrow(a, beta)] = f.vertex_reps[a].mat(beta);
        }
    }
    for (ArrowId alpha = 0; alpha < t.first->arrow_count(); ++alpha) {
        const RepMorphism& h = f.arrow_maps[alpha];
        const Arrow& ar = t.first->arrow(alpha);
        if (h.source() != f.vertex_reps[ar.source] || h.target() != f.vertex_reps[ar.target]) {
            throw DimensionMismatchError("arrow map endpoints disagree with the vertex data");
        }
        for (VertexId b = 0; b < t.second->vertex_count(); ++b) {
            mats[t.horizontal_arrow(alpha, b)] = h.comp(b);
        }
    }
    return Representation(t.product, field, std::move(dims), std::move(mats));
}

bool tensor_gorenstein(const Quiver& q, const Quiver& qp, std::uint64_t k) {
    require_connected_acyclic(q);
    require_connected_acyclic(qp);
    if (k == 0) throw InputError("k must be at least 1");
    return is_linear(q) && is_linear(qp);
}

}  // namespace qrep
