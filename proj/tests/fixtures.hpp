#pragma once

#include <memory>
#include <random>
#include <vector>

#include "qrep/rep.hpp"

// Shared test inputs: small named quivers, exhaustive and random quiver
// fixtures, and random representation/morphism generators. Everything is
// deterministic given the seed.
namespace qrep::testing {

using Rng = std::mt19937_64;

// A_n with vertices "1".."n" and arrows "a1": 1->2, ..., "a<n-1>".
std::shared_ptr<const Quiver> linear_quiver(std::size_t n);
// 1 -> 2 <- 3
std::shared_ptr<const Quiver> vee_quiver();
// 1 -> 2, 1 -> 3
std::shared_ptr<const Quiver> wedge_quiver();
// a, b: 1 -> 2 and c: 2 -> 3
std::shared_ptr<const Quiver> double_arrow_quiver();
// 1 -> 2 -> 4, 1 -> 3 -> 4
std::shared_ptr<const Quiver> diamond_quiver();

// All connected acyclic quivers (labeled; parallel arrows allowed) with at
// most the given number of vertices and arrows.
std::vector<std::shared_ptr<const Quiver>> exhaustive_quivers(std::size_t max_vertices,
                                                              std::size_t max_arrows);

// Deterministic random weakly-connected DAGs.
std::vector<std::shared_ptr<const Quiver>> random_dags(std::size_t count, std::size_t min_vertices,
                                                       std::size_t max_vertices, std::uint64_t seed);

// The acceptance fixture set: exhaustive(4, 5) plus 20 random 5-6 vertex DAGs.
std::vector<std::shared_ptr<const Quiver>> acceptance_fixture_quivers();

Representation random_representation(std::shared_ptr<const Quiver> q, const Field& f,
                                     std::size_t total_dim_budget, Rng& rng);

// Uniformly random element of Hom(M, N): solves the naturality constraints
// exactly and samples a random kernel combination.
RepMorphism random_hom(const Representation& m, const Representation& n, Rng& rng);

// Stalks, e_lambda/e_rho at every vertex, and a few random representations
// over Q, F_2 and F_5 on a handful of small quivers.
std::vector<Representation> representation_fixtures();

}  // namespace qrep::testing
