#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbicoh/homalg.hpp"
#include "orbicoh/representation.hpp"

namespace orbicoh {

/// FH^n(G, M) = Ext^n(R, M^?) over Or_F(G), degrees 0..n.
std::vector<std::size_t> relative_cohomology_dims(CatPtr cat, const GGRep& m, std::size_t n,
                                                  const ResolveOptions& options = {});

/// The same numbers from Hom_G(P_*(1), M), where P_* resolves R over Or_F(G)
/// and P_*(1) is its value at the trivial subgroup.  Hom_G is computed by
/// solving the equivariance equations, not through Yoneda.
std::vector<std::size_t> rg_side_pipeline(CatPtr cat, const GGRep& m, std::size_t n,
                                          const ResolveOptions& options = {});

/// Relative cohomology from the resolution 0 <- R <- RX <- K_0 (x) RX <- ...
/// obtained by splicing 0 -> K (x) ker(eps) -> K (x) RX -> K -> 0, where X
/// has one orbit G/H per conjugacy class of maximal members of F.
std::vector<std::size_t> tensor_construction_dims(const SubgroupFamily& f, const GGRep& m, std::size_t n);

/// 0 -> R_0 + R_0 -> R_{H_1} + R_{H_2} + R_{H_3} -> R -> 0 for a family with
/// exactly three nontrivial members H_1 < H_2 < H_3.  gamma is
/// (u, v) |-> (-u, u + v, -v) at the trivial subgroup and pi is the sum.
struct LineSequence {
  DirectSum zeros;                    // R_0 + R_0
  DirectSum lines;                    // R_{H_1} + R_{H_2} + R_{H_3}
  ModulePtr constant;
  GammaHom gamma;
  GammaHom pi;
  std::vector<GammaHom> line_inclusions;  // R_0 -> R_{H_i}
  std::vector<GammaHom> line_maps;        // R_{H_i} -> R, identity on the support
};
LineSequence line_sequence(const CatPtr& cat, std::uint32_t p);

/// dim Hom_G(V, M).
std::size_t hom_g_dim(const GGRep& v, const GGRep& m);

struct SplitVerdict {
  bool split = false;
  std::optional<Matrix> witness;  // section s with pi s = 1, H-equivariant
  std::size_t coefficient_rank = 0;  // certificate: rank of the section system
  std::size_t augmented_rank = 0;    // and of the system with its right-hand side
};

struct FSplitEntry {
  std::size_t subgroup_id = 0;  // position in all_subgroups(G)
  SplitVerdict verdict;
};

struct FSplitReport {
  std::vector<FSplitEntry> entries;
  bool split = true;
};

/// Searches for an H-equivariant section of pi: B -> C for each H in F.
/// Throws NotEquivariant or NotSurjective.
FSplitReport fsplit_check(const Matrix& pi, const GGRep& b, const GGRep& c, const SubgroupFamily& f);

/// Whether pi (x) RX has a G-equivariant section, X the union of G/K over
/// the listed subgroups.
SplitVerdict xsplit_check(const Matrix& pi, const GGRep& b, const GGRep& c, const std::vector<Subgroup>& x);

/// Section search for a single subgroup.
SplitVerdict split_over(const Matrix& pi, const GGRep& b, const GGRep& c, const Subgroup& h);

/// True when s is an H-equivariant section of pi.
bool verify_section(const Matrix& pi, const Matrix& s, const GGRep& b, const GGRep& c, const Subgroup& h);

struct PeriodicityReport {
  std::vector<std::size_t> dims;
  std::size_t window = 0;  // highest degree in dims
  std::size_t offset = 0;
  std::optional<std::size_t> period;
  bool strictly_increasing_tail = false;
  std::string verdict;
};

/// Smallest d <= window/2 with dims[i] = dims[i + d] for every i >= offset
/// inside the window.  Throws WindowTooShort unless dims.size() >= 2(offset+1).
PeriodicityReport periodicity_report(const std::vector<std::size_t>& dims, std::size_t offset = 2);

}  // namespace orbicoh
