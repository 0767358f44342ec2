#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "orbicoh/homalg.hpp"
#include "orbicoh/representation.hpp"

namespace orbicoh {

/// H^q(H, M) for subgroups H of G, computed from free resolutions of the
/// trivial module over Or_{1}(H), together with the restriction and
/// conjugation maps between them.  Results are cached per subgroup.
class GroupCohomologyEngine {
 public:
  GroupCohomologyEngine(GGRep m, std::size_t max_deg, ResolveOptions options = {});

  struct Local {
    SubgroupAsGroup sub;
    GroupPtr group;
    CatPtr cat;
    ModulePtr coeff;  // M restricted to H, as a module over Or_{1}(H)
    Resolution res;
    std::vector<CohomologyBasis> bases;  // degrees 0..max_deg
  };

  const GGRep& coefficients() const noexcept { return m_; }
  std::size_t max_degree() const noexcept { return max_deg_; }
  const Local& local(const Subgroup& h);
  std::vector<std::size_t> dims(const Subgroup& h);

  /// H^q(H, M) -> H^q(K, M) for g with g^-1 K g <= H: the class of the
  /// cocycle x |-> g phi(x) on K acting through k |-> g^-1 k g.
  const Matrix& map(const Subgroup& k, const Subgroup& h, Elem g, std::size_t q);

 private:
  GGRep m_;
  std::size_t max_deg_;
  ResolveOptions options_;
  std::map<std::vector<Elem>, std::unique_ptr<Local>> locals_;
  std::map<std::tuple<std::vector<Elem>, std::vector<Elem>, Elem>, std::vector<Matrix>> maps_;
};

std::vector<std::size_t> group_cohomology_dims(const Subgroup& h, const GGRep& m, std::size_t n,
                                               const ResolveOptions& options = {});

/// H^q(?, M) as a module over `cat`.
ModulePtr cohomology_functor(CatPtr cat, GroupCohomologyEngine& engine, std::size_t q);
ModulePtr cohomology_functor(CatPtr cat, const GGRep& m, std::size_t q);

/// Augmented complex pulled back along a functor into its category.
AugmentedComplex pullback_complex(const AugmentedComplex& c, CatPtr cat, const std::vector<std::size_t>& object_map,
                                  const std::vector<std::size_t>& morphism_map);

/// inf: H^q(G/N, M) -> H^q(G, inf M) for q = 0..n.  `m` is a representation
/// of the quotient in the labeling of quotient_group(G, N).  Throws NotNormal.
std::vector<Matrix> inflation_map(GroupPtr g, const Subgroup& n, const GGRep& m, std::size_t max_deg,
                                  const ResolveOptions& options = {});

}  // namespace orbicoh
