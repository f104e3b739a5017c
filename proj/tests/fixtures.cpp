#include "fixtures.hpp"

#include <algorithm>
#include <string>

namespace qrep::testing {

namespace {

std::shared_ptr<const Quiver> freeze(Quiver q) {
    return std::make_shared<const Quiver>(std::move(q));
}

}  // namespace

std::shared_ptr<const Quiver> linear_quiver(std::size_t n) {
    Quiver q("a" + std::to_string(n));
    for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) {
        q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
    }
    return freeze(std::move(q));
}

std::shared_ptr<const Quiver> vee_quiver() {
    Quiver q("vee");
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "3", "2");
    return freeze(std::move(q));
}

std::shared_ptr<const Quiver> wedge_quiver() {
    Quiver q("wedge");
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "1", "3");
    return freeze(std::move(q));
}

std::shared_ptr<const Quiver> double_arrow_quiver() {
    Quiver q("double");
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "1", "2");
    q.add_arrow("c", "2", "3");
    return freeze(std::move(q));
}

std::shared_ptr<const Quiver> diamond_quiver() {
    Quiver q("diamond");
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_vertex("4");
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "1", "3");
    q.add_arrow("c", "2", "4");
    q.add_arrow("d", "3", "4");
    return freeze(std::move(q));
}

namespace {

// directed edge slots (i, j), i != j, in row-major order
std::vector<std::pair<std::size_t, std::size_t>> edge_slots(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) slots.emplace_back(i, j);
        }
    }
    return slots;
}

bool support_acyclic(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> outdeg(n, 0);
    std::vector<std::vector<std::size_t>> in(n);
    for (const auto& [s, t] : edges) {
        ++outdeg[s];
        in[t].push_back(s);
    }
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < n; ++v) {
        if (outdeg[v] == 0) stack.push_back(v);
    }
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (std::size_t u : in[v]) {
            if (--outdeg[u] == 0) stack.push_back(u);
        }
    }
    return seen == n;
}

bool support_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n <= 1) return true;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [s, t] : edges) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : adj[v]) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

std::shared_ptr<const Quiver> build_from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::string& name) {
    Quiver q(name);
    for (std::size_t v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        q.add_arrow("a" + std::to_string(e + 1), static_cast<VertexId>(edges[e].first),
                    static_cast<VertexId>(edges[e].second));
    }
    return freeze(std::move(q));
}

void enumerate_multisets(const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                         std::size_t slot, std::size_t remaining,
                         std::vector<std::pair<std::size_t, std::size_t>>& current,
                         std::size_t n, std::vector<std::shared_ptr<const Quiver>>& out) {
    if (slot == slots.size()) {
        if (!support_acyclic(n, current) || !support_connected(n, current)) return;
        out.push_back(build_from_edges(n, current, "g" + std::to_string(out.size())));
        return;
    }
    for (std::size_t count = 0; count <= remaining; ++count) {
        for (std::size_t c = 0; c < count; ++c) current.push_back(slots[slot]);
        enumerate_multisets(slots, slot + 1, remaining - count, current, n, out);
        for (std::size_t c = 0; c < count; ++c) current.pop_back();
    }
}

}  // namespace

std::vector<std::shared_ptr<const Quiver>> exhaustive_quivers(std::size_t max_vertices,
                                                              std::size_t max_arrows) {
    std::vector<std::shared_ptr<const Quiver>> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        auto slots = edge_slots(n);
        std::vector<std::pair<std::size_t, std::size_t>> current;
        enumerate_multisets(slots, 0, max_arrows, current, n, out);
    }
    return out;
}

std::vector<std::shared_ptr<const Quiver>> random_dags(std::size_t count, std::size_t min_vertices,
                                                       std::size_t max_vertices, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::shared_ptr<const Quiver>> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = min_vertices + rng() % (max_vertices - min_vertices + 1);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        // spanning arborescence-ish skeleton keeps the underlying graph connected
        for (std::size_t v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);
        std::size_t extra = 2 + rng() % 3;
        for (std::size_t e = 0; e < extra; ++e) {
            std::size_t a = rng() % (n - 1);
            std::size_t b = a + 1 + rng() % (n - a - 1);
            edges.emplace_back(a, b);
        }
        out.push_back(build_from_edges(n, edges, "rnd" + std::to_string(i)));
    }
    return out;
}

std::vector<std::shared_ptr<const Quiver>> acceptance_fixture_quivers() {
    auto out = exhaustive_quivers(4, 5);
    auto rnd = random_dags(20, 5, 6, 0x5eed2024);
    out.insert(out.end(), rnd.begin(), rnd.end());
    return out;
}

Representation random_representation(std::shared_ptr<const Quiver> q, const Field& f,
                                     std::size_t total_dim_budget, Rng& rng) {
    std::size_t n = q->vertex_count();
    std::vector<std::size_t> dims(n, 0);
    for (std::size_t v = 0; v < n; ++v) dims[v] = rng() % 3;
    std::size_t total = 0;
    for (std::size_t d : dims) total += d;
    while (total > total_dim_budget) {
        std::size_t v = rng() % n;
        if (dims[v] > 0) {
            --dims[v];
            --total;
        }
    }
    auto random_scalar = [&]() {
        if (f.is_prime()) {
            return Scalar::from_int(f, static_cast<long long>(rng() % f.characteristic()));
        }
        return Scalar::from_int(f, static_cast<long long>(rng() % 7) - 3);
    };
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrow(a);
        Matrix m(f, dims[ar.target], dims[ar.source]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = random_scalar();
        }
        mats.push_back(std::move(m));
    }
    return Representation(std::move(q), f, std::move(dims), std::move(mats));
}

RepMorphism random_hom(const Representation& m, const Representation& n, Rng& rng) {
    const Quiver& q = m.quiver();
    const Field& f = m.field();
    // unknowns: the entries of every component, vertex-major, row-major
    std::vector<std::size_t> offsets(q.vertex_count() + 1, 0);
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        offsets[v + 1] = offsets[v] + n.dim(v) * m.dim(v);
    }
    std::size_t unknowns = offsets.back();
    std::size_t rows = 0;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        rows += n.dim(q.arrow(a).target) * m.dim(q.arrow(a).source);
    }
    Matrix constraints(f, rows, unknowns);
    std::size_t row = 0;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        // H_{t} * M_a - N_a * H_{s} = 0, entry (r, c)
        for (std::size_t r = 0; r < n.dim(ar.target); ++r) {
            for (std::size_t c = 0; c < m.dim(ar.source); ++c) {
                for (std::size_t k = 0; k < m.dim(ar.target); ++k) {
                    constraints.at(row, offsets[ar.target] + r * m.dim(ar.target) + k) +=
                        m.mat(a).at(k, c);
                }
                for (std::size_t k = 0; k < n.dim(ar.source); ++k) {
                    constraints.at(row, offsets[ar.source] + k * m.dim(ar.source) + c) -=
                        n.mat(a).at(r, k);
                }
                ++row;
            }
        }
    }
    Matrix basis = kernel_basis(constraints);
    // random combination of the kernel basis
    Matrix combo(f, basis.cols(), 1);
    for (std::size_t i = 0; i < basis.cols(); ++i) {
        if (f.is_prime()) {
            combo.at(i, 0) = Scalar::from_int(f, static_cast<long long>(rng() % f.characteristic()));
        } else {
            combo.at(i, 0) = Scalar::from_int(f, static_cast<long long>(rng() % 5) - 2);
        }
    }
    Matrix flat = basis * combo;
    std::vector<Matrix> comps;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        Matrix h(f, n.dim(v), m.dim(v));
        for (std::size_t r = 0; r < h.rows(); ++r) {
            for (std::size_t c = 0; c < h.cols(); ++c) {
                h.at(r, c) = flat.at(offsets[v] + r * m.dim(v) + c, 0);
            }
        }
        comps.push_back(std::move(h));
    }
    return RepMorphism(m, n, std::move(comps));
}

std::vector<Representation> representation_fixtures() {
    std::vector<Representation> reps;
    Rng rng(0xf1e57u);
    std::vector<std::shared_ptr<const Quiver>> quivers = {
        linear_quiver(1), linear_quiver(2), linear_quiver(3), linear_quiver(4),
        vee_quiver(),     wedge_quiver(),  double_arrow_quiver(), diamond_quiver()};
    Field rationals = Field::rationals();
    Field f2 = Field::prime(2);
    Field f5 = Field::prime(5);
    for (const auto& q : quivers) {
        reps.push_back(Representation::zero(q, rationals));
        for (VertexId v = 0; v < q->vertex_count(); ++v) {
            reps.push_back(stalk(q, rationals, v, 1));
            reps.push_back(e_lambda(q, rationals, v, 1));
            reps.push_back(e_rho(q, rationals, v, 1));
        }
        for (int i = 0; i < 2; ++i) reps.push_back(random_representation(q, rationals, 5, rng));
        for (int i = 0; i < 2; ++i) reps.push_back(random_representation(q, f2, 5, rng));
        reps.push_back(random_representation(q, f5, 5, rng));
    }
    return reps;
}

}  // namespace qrep::testing
