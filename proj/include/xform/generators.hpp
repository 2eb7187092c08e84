#ifndef XFORM_GENERATORS_HPP
#define XFORM_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "xform/graph.hpp"

namespace xform {

enum class Family { path, cycle, complete, star, complete_bipartite, random_gnm };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

Graph make_path(int n);      // n >= 1; P1 is the one-vertex graph
Graph make_cycle(int n);     // n >= 3
Graph make_complete(int n);  // n >= 1
Graph make_star(int n);      // n >= 2; vertex 0 is the center
Graph make_complete_bipartite(int a, int b);  // parts {0..a-1} and {a..a+b-1}

// Uniform value in [0, bound) drawn from rng. Unbiased rejection-sampled
// modulus: raw 64-bit draws below 2^64 mod bound are redrawn. Part of the
// pinned corpus algorithm, so reproducible across platforms.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound);

// Seeded uniform G(n, m). The draw is fully pinned so identical seeds give
// identical graphs anywhere: a std::mt19937_64 seeded with `seed` drives
// bounded_uniform(), and the edge set is the first m entries of a partial
// Fisher-Yates shuffle of the lexicographically ordered pair list.
Graph make_random_gnm(int n, std::int64_t m, std::uint64_t seed);

}  // namespace xform

#endif
