#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbicoh/group.hpp"
#include "orbicoh/linalg.hpp"

namespace orbicoh {

/// A finite-dimensional GF(p)G-module: rho[g] for every element g.
struct GGRep {
  GroupPtr group;
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<Matrix> rho;
};

/// Completes generator images to a full rho table by word enumeration and
/// verifies the homomorphism property.  Throws InvalidRepresentation.
GGRep rep_from_generators(GroupPtr group, std::uint32_t p, std::size_t dim, const std::vector<Elem>& gens,
                          const std::vector<Matrix>& images);

GGRep trivial_rep(GroupPtr group, std::uint32_t p, std::size_t dim = 1);
/// Permutation module on G/K, basis the cosets ordered by least element.
GGRep perm_rep(GroupPtr group, std::uint32_t p, const Subgroup& k);
GGRep regular_rep(GroupPtr group, std::uint32_t p);
/// R X for X = the disjoint union of G/K over the listed subgroups.
GGRep gset_rep(GroupPtr group, std::uint32_t p, const std::vector<Subgroup>& orbits);
GGRep direct_sum(const GGRep& a, const GGRep& b);
GGRep tensor(const GGRep& a, const GGRep& b);

/// Returns the first violated representation axiom, if any.
std::optional<std::string> check_rep(const GGRep& m);

/// Columns: the pivot-column basis of the H-fixed subspace.
Matrix fixed_subspace_basis(const GGRep& m, const Subgroup& h);

/// rho restricted to H, indexed by local element of `sub`.
GGRep restrict_rep(const GGRep& m, const SubgroupAsGroup& sub, GroupPtr sub_group);
/// M pulled back along the projection G -> G/N.
GGRep inflate_rep(const GGRep& m, const QuotientGroup& q, GroupPtr g);

/// True when pi * rho_B[g] = rho_C[g] * pi for every g.
bool is_equivariant(const Matrix& pi, const GGRep& b, const GGRep& c);

/// Coordinates of the G-set points of G/K, keyed by least coset element.
std::vector<Elem> coset_representatives(const FiniteGroup& g, const Subgroup& k);

}  // namespace orbicoh
