#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "qrep/tensorbox.hpp"

using namespace qrep;

TEST_SUITE_BEGIN("tensorbox");

namespace {

TensorQuiver square() {
    auto a2 = testing::linear_quiver(2);
    return tensor_product(*a2, {}, *a2, {});
}

// random representation of the square satisfying the box relation, built by
// unflattening genuinely random natural data
Representation random_commuting_square_rep(const TensorQuiver& t, const Field& f,
                                           std::size_t budget, testing::Rng& rng) {
    FlattenedRep flat;
    flat.vertex_reps.push_back(testing::random_representation(t.second, f, budget / 2, rng));
    flat.vertex_reps.push_back(testing::random_representation(t.second, f, budget / 2, rng));
    flat.arrow_maps.push_back(testing::random_hom(flat.vertex_reps[0], flat.vertex_reps[1], rng));
    return unflatten(t, flat);
}

}  // namespace

TEST_CASE("the square: counts, names and incidence") {
    TensorQuiver t = square();
    CHECK(t.product->vertex_count() == 4);
    CHECK(t.product->arrow_count() == 4);
    CHECK(t.relations.size() == 1);

    // source/target law
    for (VertexId a = 0; a < 2; ++a) {
        const Arrow& vertical = t.product->arrow(t.vertical_arrow(a, 0));
        CHECK(vertical.source == t.product_vertex(a, 0));
        CHECK(vertical.target == t.product_vertex(a, 1));
    }
    for (VertexId b = 0; b < 2; ++b) {
        const Arrow& horizontal = t.product->arrow(t.horizontal_arrow(0, b));
        CHECK(horizontal.source == t.product_vertex(0, b));
        CHECK(horizontal.target == t.product_vertex(1, b));
    }
    CHECK(t.product->vertex_name(t.product_vertex(0, 1)) == "(1,2)");
    CHECK(t.product->arrow(t.vertical_arrow(1, 0)).name == "(2,a1)");
    CHECK(t.product->arrow(t.horizontal_arrow(0, 1)).name == "(a1,2)");
}

TEST_CASE("tensor counting formula and factor swap symmetry") {
    auto a3 = testing::linear_quiver(3);
    auto a2 = testing::linear_quiver(2);
    TensorQuiver t = tensor_product(*a3, {}, *a2, {});
    CHECK(t.product->vertex_count() == 6);
    CHECK(t.product->arrow_count() == 3 * 1 + 2 * 2);  // |V||E'| + |E||V'|
    CHECK(t.relations.size() == 2);

    for (const auto& left : {testing::linear_quiver(2), testing::vee_quiver()}) {
        for (const auto& right : {testing::linear_quiver(3), testing::wedge_quiver()}) {
            TensorQuiver ab = tensor_product(*left, {}, *right, {});
            TensorQuiver ba = tensor_product(*right, {}, *left, {});
            CHECK(ab.product->vertex_count() == ba.product->vertex_count());
            CHECK(ab.product->arrow_count() == ba.product->arrow_count());
            CHECK(ab.relations.size() == ba.relations.size());
        }
    }
}

TEST_CASE("tensor with a point changes nothing") {
    auto a1 = testing::linear_quiver(1);
    auto vee = testing::vee_quiver();
    TensorQuiver t = tensor_product(*a1, {}, *vee, {});
    CHECK(t.product->vertex_count() == vee->vertex_count());
    CHECK(t.product->arrow_count() == vee->arrow_count());
    CHECK(t.relations.empty());
    for (ArrowId a = 0; a < vee->arrow_count(); ++a) {
        CHECK(t.product->arrow(a).source == vee->arrow(a).source);
        CHECK(t.product->arrow(a).target == vee->arrow(a).target);
    }
}

TEST_CASE("generated relations are parallel two-term differences of length two") {
    auto da = testing::double_arrow_quiver();
    auto a3 = testing::linear_quiver(3);
    TensorQuiver t = tensor_product(*da, {}, *a3, {});
    CHECK(t.relations.size() == da->arrow_count() * a3->arrow_count());
    for (const Relation& rel : t.relations) {
        REQUIRE(rel.terms().size() == 2);
        CHECK(rel.terms()[0].coefficient == Rational(1));
        CHECK(rel.terms()[1].coefficient == Rational(-1));
        CHECK(rel.terms()[0].path.length() == 2);
        CHECK(rel.terms()[1].path.length() == 2);
        CHECK(rel.terms()[0].path.source() == rel.terms()[1].path.source());
        CHECK(rel.terms()[0].path.target() == rel.terms()[1].path.target());
    }
}

TEST_CASE("factor relations lift to every copy of the factor") {
    // commutative square with its box relation, tensored with A_2
    auto sq_quiver = std::make_shared<const Quiver>([] {
        Quiver q("sq");
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_vertex("3");
        q.add_vertex("4");
        q.add_arrow("a", "1", "2");
        q.add_arrow("b", "1", "3");
        q.add_arrow("c", "2", "4");
        q.add_arrow("d", "3", "4");
        return q;
    }());
    Relation box(*sq_quiver, {Relation::Term{Rational(1), Path(*sq_quiver, {0, 2})},
                              Relation::Term{Rational(-1), Path(*sq_quiver, {1, 3})}});
    auto a2 = testing::linear_quiver(2);
    TensorQuiver t = tensor_product(*sq_quiver, std::vector<Relation>{box}, *a2, {});
    // one lifted copy per A_2 vertex plus one box relation per arrow pair
    CHECK(t.relations.size() == 2 + 4 * 1);
}

TEST_CASE("flatten on the identity square and a broken square") {
    TensorQuiver t = square();
    Field f = Field::rationals();

    std::vector<std::size_t> dims{1, 1, 1, 1};
    auto make = [&](long long va, long long vb, long long ha, long long hb) {
        std::vector<Matrix> mats;
        mats.push_back(Matrix::from_rows(f, {{va}}));  // (1,a1)
        mats.push_back(Matrix::from_rows(f, {{vb}}));  // (2,a1)
        mats.push_back(Matrix::from_rows(f, {{ha}}));  // (a1,1)
        mats.push_back(Matrix::from_rows(f, {{hb}}));  // (a1,2)
        return Representation(t.product, f, dims, mats);
    };

    Representation good = make(1, 1, 1, 1);
    FlattenedRep flat = flatten(t, good);
    REQUIRE(flat.vertex_reps.size() == 2);
    REQUIRE(flat.arrow_maps.size() == 1);
    CHECK(flat.vertex_reps[0].dims() == std::vector<std::size_t>{1, 1});
    CHECK(flat.arrow_maps[0].comp(0).is_identity());
    CHECK(unflatten(t, flat) == good);

    Representation broken = make(1, 1, 1, 0);
    CHECK_THROWS_AS(flatten(t, broken), RelationsViolatedError);
}

TEST_CASE("flatten/unflatten round-trips on random commuting data") {
    TensorQuiver t = square();
    Field f2 = Field::prime(2);
    testing::Rng rng(0xb0b);
    for (int trial = 0; trial < 30; ++trial) {
        Representation m = random_commuting_square_rep(t, f2, 8, rng);
        REQUIRE(check_relations(m, t.relations));
        FlattenedRep flat = flatten(t, m);
        CHECK(unflatten(t, flat) == m);
        // and the other composition order
        FlattenedRep again = flatten(t, unflatten(t, flat));
        CHECK(unflatten(t, again) == m);
    }
}

TEST_CASE("tensor text serialization parses back") {
    TensorQuiver t = square();
    std::istringstream in(t.to_text());
    BoundQuiver parsed = parse_bound_quiver(in, "tensor.qv");
    CHECK(parsed.quiver == *t.product);
    CHECK(parsed.relations.size() == t.relations.size());
    CHECK(parsed.relations[0].to_text(parsed.quiver) == t.relations[0].to_text(*t.product));
}

TEST_CASE("tensor Gorenstein decision") {
    auto a2 = testing::linear_quiver(2);
    auto a3 = testing::linear_quiver(3);
    auto a1 = testing::linear_quiver(1);
    auto vee = testing::vee_quiver();
    CHECK(tensor_gorenstein(*a2, *a3, 3));
    CHECK(tensor_gorenstein(*a1, *a1, 1));
    CHECK_FALSE(tensor_gorenstein(*a2, *vee, 1));
    CHECK_FALSE(tensor_gorenstein(*vee, *a2, 2));
    Quiver split("split");
    split.add_vertex("1");
    split.add_vertex("2");
    CHECK_THROWS_AS(tensor_gorenstein(split, *a2, 1), NotConnectedError);
}

TEST_SUITE_END();
