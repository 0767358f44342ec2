#pragma once

#include <cstdint>
#include <random>

#include "orbicoh/gamma_module.hpp"
#include "orbicoh/representation.hpp"

namespace orbicoh {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

using Rng = std::mt19937_64;

Scalar random_scalar(Rng& rng, std::uint32_t p);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::uint32_t p);

/// A permutation module R X for a random G-set X of at most `max_dim`
/// points (at least one orbit of size <= max_dim is always present).
GGRep random_perm_rep(Rng& rng, GroupPtr g, std::uint32_t p, std::size_t max_dim = 8);

/// A permutation module or a
/// quotient of one by the G-span of random vectors.
GGRep random_rep(Rng& rng, GroupPtr g, std::uint32_t p, std::size_t max_dim = 8);

/// b -> b / W for W the G-span of `vectors` (columns).  pi has full row rank.
struct Surjection {
  GGRep source;
  GGRep target;
  Matrix pi;
};
Surjection quotient_by_span(const GGRep& b, const Matrix& vectors);
Surjection random_surjection(Rng& rng, GroupPtr g, std::uint32_t p, std::size_t max_dim = 8);

/// A random module over `cat`: a free, interval, fixed-point, kernel or sum
/// construction.  `depth` bounds nested constructions.
ModulePtr random_module(Rng& rng, const CatPtr& cat, std::uint32_t p, int depth = 2);

/// A support for interval_module closed under subgroups and conjugation.
std::vector<std::size_t> random_downward_support(Rng& rng, const OrbitCategory& cat);

/// A random element of Hom(M, N), as a combination of a hom_space basis.
GammaHom random_hom(Rng& rng, const ModulePtr& m, const ModulePtr& n);

}  // namespace orbicoh
