#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbicoh/gamma_module.hpp"

namespace orbicoh {

/// Generators of a free module, in order; generator i is a copy of P_K for
/// K = objects[i].
struct FreeDecl {
  std::vector<std::size_t> objects;

  /// (object, multiplicity) pairs in object order.
  std::vector<std::pair<std::size_t, std::size_t>> multiplicities() const;
  bool operator==(const FreeDecl&) const = default;
};

/// A realized direct sum of frees.  Generator i occupies rows
/// offsets[i][H] .. offsets[i][H] + |mor(H, K_i)| of the value at H.
struct FreeModule {
  FreeDecl decl;
  ModulePtr module;
  std::vector<std::vector<std::size_t>> offsets;

  /// Row of the basis element id_{K_i} of generator i inside the value at K_i.
  std::size_t generator_row(std::size_t i) const { return offsets[i][decl.objects[i]]; }
};

FreeModule realize_free(CatPtr cat, std::uint32_t p, const FreeDecl& decl);

/// The hom F -> N sending generator i to images[i] in N(K_i).
GammaHom hom_from_free(const FreeModule& f, const ModulePtr& n, const std::vector<Matrix>& images);

/// Matrix of Hom(F, N) -> N(H), phi |-> phi(y), in Yoneda coordinates
/// (one block of dim N(K_i) per generator of F).  y is a column in F(H).
Matrix yoneda_evaluation(const FreeModule& f, const GammaModule& n, std::size_t h, const Matrix& y);

enum class HullStrategy { Minimized, FullBasis };

struct FreeHull {
  FreeModule free;
  GammaHom epi;
};
FreeHull free_hull(const ModulePtr& m, HullStrategy strategy = HullStrategy::Minimized);

/// An exact augmented complex ... -> C_1 -> C_0 -> target -> 0.
/// boundaries[i]: C_{i+1} -> C_i.
struct AugmentedComplex {
  ModulePtr target;
  std::vector<ModulePtr> terms;
  std::vector<GammaHom> boundaries;
  GammaHom augmentation;
};

struct Resolution {
  std::vector<FreeModule> free;
  AugmentedComplex complex;

  std::size_t length() const { return free.size(); }
  const ModulePtr& target() const { return complex.target; }
};

struct ResolveOptions {
  HullStrategy strategy = HullStrategy::Minimized;
  /// Degrees below this use the full-basis hull regardless of `strategy`.
  std::size_t full_basis_depth = 0;
  bool verify = true;
};

/// Free terms in degrees 0..n.  Throws DegreeBoundExceeded past the caps.
Resolution resolve(const ModulePtr& m, std::size_t n, const ResolveOptions& options = {});

/// Checks d^2 = 0, surjectivity of the augmentation and exactness at every
/// object in degrees 0..length-2.
std::optional<std::string> check_resolution(const AugmentedComplex& c);

std::size_t dimension_cap();
inline constexpr std::size_t kDegreeCap = 32;

struct CochainComplex {
  std::vector<std::size_t> dims;       // degrees 0..n+1
  std::vector<Matrix> coboundaries;    // coboundaries[q]: C^q -> C^{q+1}, q = 0..n
};

/// Hom(P_*, N) in Yoneda coordinates.
CochainComplex hom_complex(const Resolution& res, const ModulePtr& n);

/// Representatives of H^q: the RREF pivot completion of im inside ker.
struct CohomologyBasis {
  Matrix image;  // basis of im d^{q-1}
  Matrix reps;   // chosen cocycles
  std::size_t dim() const { return reps.cols(); }
  /// Coordinates of cocycles (columns) with respect to `reps`.
  Matrix coordinates(const Matrix& cocycles) const;
};
std::vector<CohomologyBasis> cohomology_bases(const CochainComplex& c);

std::vector<std::size_t> ext_dims(const ModulePtr& m, const ModulePtr& n, std::size_t max_deg,
                                  const ResolveOptions& options = {});

/// Chain map P_* -> C_* over alpha: target(P) -> target(C), degrees 0..n.
/// Only exactness of C is needed.  Throws LiftFailed.
std::vector<GammaHom> lift_chain_map(const GammaHom& alpha, const Resolution& source, const AugmentedComplex& target,
                                     std::size_t n);

/// Matrix of Hom(F', N) -> Hom(F, N), phi |-> phi o h, for h: F -> F'.
Matrix yoneda_pullback(const FreeModule& source, const FreeModule& target, const GammaHom& h, const GammaModule& n);

/// Ext^q(M', N) -> Ext^q(M, N) induced by alpha: M -> M', degrees 0..n.
std::vector<Matrix> induced_ext_map(const GammaHom& alpha, const ModulePtr& n, std::size_t max_deg,
                                    const ResolveOptions& options = {});

/// The same with resolutions supplied by the caller.
std::vector<Matrix> induced_ext_map(const GammaHom& alpha, const Resolution& res_m, const Resolution& res_m2,
                                    const ModulePtr& n, std::size_t max_deg);

}  // namespace orbicoh
