#pragma once

#include <string>
#include <vector>

#include "orbicoh/group_cohomology.hpp"

namespace orbicoh {

inline constexpr const char* kE2Banner = "E2 + edges only; differentials not computed";

struct SubquotientCheck {
  std::size_t degree = 0;
  std::size_t target = 0;  // dim H^n(G, M)
  std::size_t bound = 0;   // sum of E2 dims on the line p + q = n
  bool ok() const { return target <= bound; }
};

struct E2Page {
  std::size_t max_p = 0;
  std::size_t max_q = 0;
  std::vector<std::vector<std::size_t>> dims;  // dims[p][q]
  std::vector<std::size_t> target_dims;        // dim H^n(G, M), n = 0..max_p + max_q
  std::vector<std::size_t> limit_dims;         // dim lim_F H^q(?, M), q = 0..max_q
  std::vector<Matrix> vertical_edge;           // n = 0..max_q
  std::vector<Matrix> horizontal_edge;         // n = 0..max_p
  std::vector<std::size_t> vertical_kernel;    // n = 0..max_q
  std::vector<std::size_t> horizontal_rank;    // n = 0..max_p
  std::vector<std::size_t> relative_essential; // dim(im horizontal & ker vertical), n = 0..min
  std::vector<SubquotientCheck> subquotient;   // n = 0..min(max_p, max_q)
  std::vector<std::size_t> edge_composite_rank;  // rank(vertical o horizontal), n = 0..min
};

/// E2^{p,q} = Ext^p(R, H^q(?, M)) over `cat`, with both edge maps.  Throws
/// InternalError when a wiring invariant fails.
E2Page e2_page(CatPtr cat, const GGRep& m, std::size_t max_p, std::size_t max_q, const ResolveOptions& options = {});

/// H^n(G, M) -> lim_F H^n(?, M), rows in limit_basis coordinates.
Matrix vertical_edge(const CatPtr& cat, GroupCohomologyEngine& engine, std::size_t n);

/// Ext^n(R, M^?) -> Ext^n(R_0, M^?) = H^n(G, M), n = 0..max_deg, induced by
/// the hom R_0 -> R that is the identity at the trivial subgroup.
std::vector<Matrix> horizontal_edge(const CatPtr& cat, const GGRep& m, std::size_t max_deg,
                                    const ResolveOptions& options = {});

/// The hom R_0 -> R above.
GammaHom trivial_object_inclusion(const CatPtr& cat, std::uint32_t p);

/// Kernel dimension of the vertical edge for the family of proper subgroups.
std::vector<std::size_t> essential_dims(GroupPtr g, const GGRep& m, std::size_t max_deg,
                                        const ResolveOptions& options = {});

/// dim(im horizontal & ker vertical) for the family of proper subgroups.
std::vector<std::size_t> relative_essential_dims(GroupPtr g, const GGRep& m, std::size_t max_deg,
                                                 const ResolveOptions& options = {});

}  // namespace orbicoh
