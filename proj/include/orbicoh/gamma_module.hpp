#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbicoh/linalg.hpp"
#include "orbicoh/orbit_category.hpp"
#include "orbicoh/representation.hpp"

namespace orbicoh {

/// A contravariant functor from an orbit category to GF(p)-spaces.
/// act[f] for f: G/H -> G/K has shape dim[H] x dim[K].
struct GammaModule {
  CatPtr cat;
  std::uint32_t p = 2;
  std::vector<std::size_t> dim;
  std::vector<Matrix> act;

  std::size_t total_dim() const;
  bool operator==(const GammaModule& other) const { return cat == other.cat && dim == other.dim && act == other.act; }
};
using ModulePtr = std::shared_ptr<const GammaModule>;

/// comp[H]: source(H) -> target(H), shape dim_target[H] x dim_source[H].
struct GammaHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Matrix> comp;
};

/// Validates shapes and functoriality; throws InvalidModule.
ModulePtr make_module(CatPtr cat, std::uint32_t p, std::vector<std::size_t> dim, std::vector<Matrix> act);

ModulePtr zero_module(CatPtr cat, std::uint32_t p);
/// P_K: basis of the value at H is mor(H, K); act is precomposition.
ModulePtr free_module(CatPtr cat, std::uint32_t p, std::size_t k);
/// Value R on the listed objects and 0 elsewhere.  Throws NotDownwardClosed.
ModulePtr interval_module(CatPtr cat, std::uint32_t p, const std::vector<std::size_t>& support);
ModulePtr constant_module(CatPtr cat, std::uint32_t p);
ModulePtr fixed_point_module(CatPtr cat, const GGRep& m);
/// Columns of basis[H] span M^H inside M, as used by fixed_point_module.
std::vector<Matrix> fixed_point_bases(const OrbitCategory& cat, const GGRep& m);

struct DirectSum {
  ModulePtr module;
  std::vector<std::vector<std::size_t>> offsets;  // offsets[i][H]
  std::vector<GammaHom> inclusions;
  std::vector<GammaHom> projections;
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);

GammaHom identity_hom(const ModulePtr& m);
GammaHom zero_hom(const ModulePtr& source, const ModulePtr& target);
/// second o first.
GammaHom compose(const GammaHom& first, const GammaHom& second);
GammaHom hom_sum(const GammaHom& a, const GammaHom& b);
GammaHom hom_scaled(const GammaHom& a, Scalar s);
/// Hom from a direct sum given by components, or into one.
GammaHom hom_from_sum(const DirectSum& source, const std::vector<GammaHom>& parts, const ModulePtr& target);
GammaHom hom_into_sum(const ModulePtr& source, const std::vector<GammaHom>& parts, const DirectSum& target);

std::optional<std::string> check_functoriality(const GammaModule& m);
std::optional<std::string> check_hom(const GammaHom& h);

/// A basis of Hom(M, N) obtained by solving the naturality system.
std::vector<GammaHom> hom_space(const ModulePtr& m, const ModulePtr& n);

/// Objectwise kernel with its inclusion.  Throws InducedMapFailure.
std::pair<ModulePtr, GammaHom> kernel_module(const GammaHom& h);

ModulePtr tensor_module(const ModulePtr& m, const ModulePtr& n);

/// M along a functor given by object and morphism maps into M's category.
ModulePtr pullback_module(const ModulePtr& m, CatPtr cat, const std::vector<std::size_t>& object_map,
                          const std::vector<std::size_t>& morphism_map);
/// Pulls a hom back along the same functor.
GammaHom pullback_hom(const GammaHom& h, const ModulePtr& source, const ModulePtr& target,
                      const std::vector<std::size_t>& object_map);

/// Object and morphism maps for the inclusion Or_V(G) -> Or_W(G).  Throws
/// NotSubfamily.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> inclusion_functor(const OrbitCategory& v,
                                                                               const OrbitCategory& w);
ModulePtr restrict_to_family(const ModulePtr& m, CatPtr v);

/// lim_V^W M: value at H is the space of compatible tuples over V-objects
/// below H.  Throws NotSuperfamily.
ModulePtr two_family_limit(const ModulePtr& m, CatPtr w);

/// Columns: compatible tuples (m_K) over all objects, stacked in object order.
Matrix limit_basis(const GammaModule& m);
std::size_t limit_dim(const GammaModule& m);

}  // namespace orbicoh
