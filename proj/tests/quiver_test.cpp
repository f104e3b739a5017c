#include <doctest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "qrep/quiver.hpp"

using namespace qrep;

TEST_SUITE_BEGIN("quiver");

namespace {

// independent longest-path-to-sink oracle (memoized DFS)
std::size_t longest_to_sink(const Quiver& q, VertexId v, std::vector<int>& memo) {
    if (memo[v] >= 0) return static_cast<std::size_t>(memo[v]);
    std::size_t best = 0;
    for (ArrowId a : q.out_arrows(v)) {
        best = std::max(best, 1 + longest_to_sink(q, q.arrow(a).target, memo));
    }
    memo[v] = static_cast<int>(best);
    return best;
}

// independent recursive path enumeration (counts only)
std::size_t count_paths_dfs(const Quiver& q, VertexId v, VertexId w) {
    std::size_t total = v == w ? 1 : 0;
    for (ArrowId a : q.out_arrows(v)) total += count_paths_dfs(q, q.arrow(a).target, w);
    return total;
}

std::set<std::vector<ArrowId>> as_arrow_multiset(const std::vector<Path>& paths) {
    std::set<std::vector<ArrowId>> s;
    for (const Path& p : paths) s.insert(p.arrows());
    return s;
}

}  // namespace

TEST_CASE("validate worked examples") {
    auto a3 = testing::linear_quiver(3);
    Diagnostics d = validate(*a3);
    CHECK(d.acyclic);
    CHECK(d.connected);
    CHECK(d.sinks == std::vector<VertexId>{2});
    CHECK(d.sources == std::vector<VertexId>{0});

    Quiver single("pt");
    single.add_vertex("v");
    Diagnostics ds = validate(single);
    CHECK(ds.acyclic);
    CHECK(ds.connected);
    CHECK(ds.sinks == std::vector<VertexId>{0});
    CHECK(ds.sources == std::vector<VertexId>{0});

    Quiver loop("loop");
    loop.add_vertex("v");
    loop.add_arrow("l", "v", "v");
    CHECK_FALSE(validate(loop).acyclic);

    Quiver split("split");
    split.add_vertex("1");
    split.add_vertex("2");
    CHECK_FALSE(validate(split).connected);
}

TEST_CASE("vertex partition on worked examples") {
    auto a3 = testing::linear_quiver(3);
    VertexPartition p = vertex_partition(*a3);
    REQUIRE(p.levels.size() == 3);
    CHECK(p.levels[0] == std::vector<VertexId>{2});
    CHECK(p.levels[1] == std::vector<VertexId>{1});
    CHECK(p.levels[2] == std::vector<VertexId>{0});

    Quiver join("join");  // 1 -> 3 <- 2
    join.add_vertex("1");
    join.add_vertex("2");
    join.add_vertex("3");
    join.add_arrow("a", "1", "3");
    join.add_arrow("b", "2", "3");
    VertexPartition pj = vertex_partition(join);
    REQUIRE(pj.levels.size() == 2);
    CHECK(pj.levels[0] == std::vector<VertexId>{2});
    CHECK(pj.levels[1] == std::vector<VertexId>{0, 1});

    // 1->2, 1->3, 3->2: level(2)=0, level(3)=1, level(1)=2
    Quiver tri("tri");
    tri.add_vertex("1");
    tri.add_vertex("2");
    tri.add_vertex("3");
    tri.add_arrow("a", "1", "2");
    tri.add_arrow("b", "1", "3");
    tri.add_arrow("c", "3", "2");
    VertexPartition pt = vertex_partition(tri);
    REQUIRE(pt.levels.size() == 3);
    CHECK(pt.levels[0] == std::vector<VertexId>{1});
    CHECK(pt.levels[1] == std::vector<VertexId>{2});
    CHECK(pt.levels[2] == std::vector<VertexId>{0});

    Quiver loop("loop");
    loop.add_vertex("v");
    loop.add_arrow("l", "v", "v");
    CHECK_THROWS_AS(vertex_partition(loop), CyclicQuiverError);
}

TEST_CASE("partition levels agree with the longest-path oracle") {
    for (const auto& q : testing::random_dags(10, 4, 6, 42)) {
        VertexPartition p = vertex_partition(*q);
        std::vector<int> memo(q->vertex_count(), -1);
        for (VertexId v = 0; v < q->vertex_count(); ++v) {
            CHECK(p.level_of[v] == longest_to_sink(*q, v, memo));
        }
        // non-sinks: level = 1 + max level over successors
        for (VertexId v = 0; v < q->vertex_count(); ++v) {
            if (q->is_sink(v)) continue;
            std::size_t best = 0;
            for (ArrowId a : q->out_arrows(v)) best = std::max(best, p.level_of[q->arrow(a).target]);
            CHECK(p.level_of[v] == best + 1);
        }
        // every arrow strictly decreases the level
        for (ArrowId a = 0; a < q->arrow_count(); ++a) {
            CHECK(p.level_of[q->arrow(a).source] > p.level_of[q->arrow(a).target]);
        }
    }
}

TEST_CASE("path enumeration on worked examples") {
    auto a3 = testing::linear_quiver(3);
    auto paths = enumerate_paths(*a3, 0, 2);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length() == 2);
    CHECK(paths[0].arrows() == std::vector<ArrowId>{0, 1});  // a1 then a2

    auto trivial = enumerate_paths(*a3, 1, 1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].is_trivial());

    auto da = testing::double_arrow_quiver();
    auto two = enumerate_paths(*da, 0, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].arrows() == std::vector<ArrowId>{0, 2});  // c∘a
    CHECK(two[1].arrows() == std::vector<ArrowId>{1, 2});  // c∘b

    CHECK(enumerate_paths(*a3, 2, 0).empty());
}

TEST_CASE("paths are ordered by length then lexicographic arrows") {
    for (const auto& q : testing::acceptance_fixture_quivers()) {
        if (q->vertex_count() > 4) continue;  // sample
        for (VertexId v = 0; v < q->vertex_count(); ++v) {
            for (VertexId w = 0; w < q->vertex_count(); ++w) {
                auto paths = enumerate_paths(*q, v, w);
                for (std::size_t i = 1; i < paths.size(); ++i) {
                    CHECK(paths[i - 1] < paths[i]);
                }
            }
        }
    }
}

TEST_CASE("q_prime worked examples") {
    auto a3 = testing::linear_quiver(3);
    auto qp = q_prime(*a3, 1, 1);  // v=2, w=2 in 1-based labels
    REQUIRE(qp.size() == 1);
    CHECK(qp[0].arrows() == std::vector<ArrowId>{1});

    auto qp2 = q_prime(*a3, 1, 0);  // v=2, w=1: Q(2,2) = {e_2}
    REQUIRE(qp2.size() == 1);
    CHECK(qp2[0].is_trivial());

    auto da = testing::double_arrow_quiver();
    // two out-arrows at vertex 1, each contributing the whole of Q(1,2)
    CHECK(q_prime(*da, 0, 0).size() == 2 * enumerate_paths(*da, 0, 1).size());
    CHECK(q_prime(*da, 0, 0).size() == 4);
}

TEST_CASE("q_double_prime worked examples and cardinality identity") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto an = testing::linear_quiver(n);
        for (VertexId i = 1; i < n; ++i) {
            // v = i (0-based: vertex i), w = i-1: Q'' = {e_{i+1}} in 1-based terms
            auto qpp = q_double_prime(*an, i, i - 1);
            REQUIRE(qpp.size() == 1);
            CHECK(qpp[0].is_trivial());
            CHECK(qpp[0].source() == i);
        }
        for (VertexId j = 0; j + 1 < n; ++j) {
            CHECK(q_double_prime(*an, 0, j).empty());
        }
    }

    auto w = testing::wedge_quiver();
    CHECK(q_double_prime(*w, 0, 0).size() == 1);

    auto a2 = testing::linear_quiver(2);
    CHECK_THROWS_AS(q_double_prime(*a2, 0, 1), SinkVertexError);

    // |Q'| = |Q| + |Q''| for every fixture pair and every choice
    for (const auto& q : testing::random_dags(8, 4, 6, 7)) {
        for (VertexId v = 0; v < q->vertex_count(); ++v) {
            for (VertexId w2 = 0; w2 < q->vertex_count(); ++w2) {
                if (q->is_sink(w2)) continue;
                auto prime = q_prime(*q, v, w2);
                auto base = enumerate_paths(*q, v, w2);
                for (ArrowId choice : q->out_arrows(w2)) {
                    auto chooser = [choice](const Quiver&, VertexId, VertexId) { return choice; };
                    auto dbl = q_double_prime(*q, v, w2, chooser);
                    CHECK(prime.size() == base.size() + dbl.size());
                }
            }
        }
    }
}

TEST_CASE("is_linear") {
    CHECK(is_linear(*testing::linear_quiver(1)));
    CHECK(is_linear(*testing::linear_quiver(4)));
    CHECK_FALSE(is_linear(*testing::wedge_quiver()));
    CHECK_FALSE(is_linear(*testing::vee_quiver()));

    // linear iff one vertex per level, connected, and no surplus arrows
    // (parallel arrows and level-skipping shortcuts keep one-per-level true)
    for (const auto& q : testing::acceptance_fixture_quivers()) {
        if (q->vertex_count() > 3) continue;
        VertexPartition p = vertex_partition(*q);
        bool one_per_level = true;
        for (const auto& level : p.levels) one_per_level &= level.size() == 1;
        bool tree_count = q->arrow_count() + 1 == q->vertex_count();
        CHECK(is_linear(*q) == (one_per_level && validate(*q).connected && tree_count));
        if (is_linear(*q)) {
            CHECK(one_per_level);
            CHECK(validate(*q).connected);
        }
    }
}

TEST_CASE("path count matrix on worked examples") {
    Field f = Field::rationals();
    CHECK(path_count_matrix(*testing::linear_quiver(3)) ==
          Matrix::from_rows(f, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(path_count_matrix(*testing::linear_quiver(1)) == Matrix::from_rows(f, {{1}}));

    Quiver da("pair");
    da.add_vertex("1");
    da.add_vertex("2");
    da.add_arrow("a", "1", "2");
    da.add_arrow("b", "1", "2");
    CHECK(path_count_matrix(da) == Matrix::from_rows(f, {{1, 2}, {0, 1}}));

    CHECK(longest_path_length(*testing::linear_quiver(4)) == 3);
}

TEST_CASE("path counts agree with brute-force enumeration") {
    for (const auto& q : testing::acceptance_fixture_quivers()) {
        if (q->vertex_count() > 4 || q->arrow_count() > 5) continue;
        auto table = path_count_table(*q);
        for (VertexId v = 0; v < q->vertex_count(); ++v) {
            for (VertexId w = 0; w < q->vertex_count(); ++w) {
                CHECK(table[v][w] == count_paths_dfs(*q, v, w));
                CHECK(table[v][w] == enumerate_paths(*q, v, w).size());
            }
        }
    }
}

TEST_CASE("quiver text format round-trips") {
    std::istringstream in(
        "# chain with a comment\n"
        "quiver a3\n"
        "vertices 1 2 3\n"
        "arrow a1 1 2\n"
        "arrow a2 2 3   # trailing comment\n");
    BoundQuiver bq = parse_bound_quiver(in, "test.qv");
    CHECK(bq.quiver == *testing::linear_quiver(3));
    std::istringstream again(bq.quiver.to_text());
    CHECK(parse_bound_quiver(again, "again").quiver == bq.quiver);
}

TEST_CASE("bound quiver relations parse right-to-left") {
    std::istringstream in(
        "quiver square\n"
        "vertices 1 2 3 4\n"
        "arrow a 1 2\n"
        "arrow b 1 3\n"
        "arrow c 2 4\n"
        "arrow d 3 4\n"
        "relation 1 c a; -1 d b\n");
    BoundQuiver bq = parse_bound_quiver(in, "sq.qv");
    REQUIRE(bq.relations.size() == 1);
    const Relation& rel = bq.relations[0];
    REQUIRE(rel.terms().size() == 2);
    // "c a" applies a first
    CHECK(rel.terms()[0].path.arrows() == std::vector<ArrowId>{0, 2});
    CHECK(rel.terms()[0].coefficient == Rational(1));
    CHECK(rel.terms()[1].path.arrows() == std::vector<ArrowId>{1, 3});
    CHECK(rel.terms()[1].coefficient == Rational(-1));
    CHECK(rel.to_text(bq.quiver) == "relation 1 c a; -1 d b");
}

TEST_CASE("parse errors carry file, line and token") {
    std::istringstream in("quiver x\nvertices 1 2\nfrob a 1 2\n");
    try {
        parse_bound_quiver(in, "bad.qv");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.file() == "bad.qv");
        CHECK(e.line() == 3);
        CHECK(e.token() == "frob");
    }
    std::istringstream dup("quiver x\nvertices 1 1\n");
    CHECK_THROWS_AS(parse_bound_quiver(dup, "dup.qv"), ParseError);
    std::istringstream nameless("vertices 1 2\n");
    CHECK_THROWS_AS(parse_bound_quiver(nameless, "x.qv"), ParseError);
}

TEST_CASE("relations reject short or mismatched terms") {
    auto square = [](const std::string& rel_line) {
        std::istringstream in(
            "quiver square\nvertices 1 2 3 4\narrow a 1 2\narrow b 1 3\narrow c 2 4\narrow d 3 4\n" +
            rel_line);
        return parse_bound_quiver(in, "sq.qv");
    };
    CHECK_THROWS_AS(square("relation 1 a\n"), ParseError);          // length 1
    CHECK_THROWS_AS(square("relation 1 c a; -1 b\n"), ParseError);  // length + endpoint mismatch
    CHECK_THROWS_AS(square("relation 1 a c\n"), ParseError);        // does not compose
}

TEST_SUITE_END();
