#include "orbicoh/spectral.hpp"

#include <algorithm>

#include "orbicoh/error.hpp"
#include "orbicoh/relcoh.hpp"

namespace orbicoh {

GammaHom trivial_object_inclusion(const CatPtr& cat, std::uint32_t p) {
  auto t = cat->object_of(trivial_subgroup());
  if (!t) throw Error(ErrorCode::FamilyInvalid, "family lacks the trivial subgroup");
  const ModulePtr r0 = interval_module(cat, p, {*t});
  const ModulePtr rbar = constant_module(cat, p);
  GammaHom h = zero_hom(r0, rbar);
  h.comp[*t] = Matrix::identity(1, p);
  if (auto bad = check_hom(h)) throw Error(ErrorCode::InternalError, *bad);
  return h;
}

Matrix vertical_edge(const CatPtr& cat, GroupCohomologyEngine& engine, std::size_t n) {
  const OrbitCategory& c = *cat;
  const Subgroup g = whole_group(c.group());
  const std::size_t source_dim = engine.local(g).bases[n].dim();
  std::vector<Matrix> blocks;
  for (std::size_t x = 0; x < c.num_objects(); ++x) blocks.push_back(engine.map(c.object(x), g, 0, n));
  const Matrix stacked = Matrix::vstack(blocks, source_dim, engine.coefficients().p);
  const ModulePtr hn = cohomology_functor(cat, engine, n);
  auto v = solve(limit_basis(*hn), stacked);
  if (!v) throw Error(ErrorCode::InternalError, "restrictions do not form a compatible tuple in degree " + std::to_string(n));
  return *v;
}

std::vector<Matrix> horizontal_edge(const CatPtr& cat, const GGRep& m, std::size_t max_deg,
                                    const ResolveOptions& options) {
  const GammaHom phi = trivial_object_inclusion(cat, m.p);
  const ModulePtr coeff = fixed_point_module(cat, m);
  const Resolution res_r0 = resolve(phi.source, max_deg + 1, options);
  const Resolution res_rbar = resolve(phi.target, max_deg + 1, options);

  // Ext(R_0, M^?) is H^*(G, M): the resolution of R_0 is the one-object
  // resolution of R, placed at the trivial subgroup.
  const CatPtr one = one_object_category(cat->group_ptr());
  const Resolution res_g = resolve(constant_module(one, m.p), max_deg + 1, options);
  const CochainComplex via_r0 = hom_complex(res_r0, coeff);
  const CochainComplex via_g = hom_complex(res_g, fixed_point_module(one, m));
  if (via_r0.coboundaries != via_g.coboundaries)
    throw Error(ErrorCode::InternalError, "Hom(P(R_0), M^?) differs from Hom_G(P, M)");

  return induced_ext_map(phi, res_r0, res_rbar, coeff, max_deg);
}

E2Page e2_page(CatPtr cat, const GGRep& m, std::size_t max_p, std::size_t max_q, const ResolveOptions& options) {
  E2Page page;
  page.max_p = max_p;
  page.max_q = max_q;
  const Subgroup g = whole_group(cat->group());
  GroupCohomologyEngine engine(m, max_q, options);
  page.target_dims = group_cohomology_dims(g, m, max_p + max_q, options);

  const Resolution res = resolve(constant_module(cat, m.p), max_p + 1, options);
  page.dims.assign(max_p + 1, std::vector<std::size_t>(max_q + 1, 0));
  for (std::size_t q = 0; q <= max_q; ++q) {
    const ModulePtr hq = cohomology_functor(cat, engine, q);
    const auto bases = cohomology_bases(hom_complex(res, hq));
    for (std::size_t p = 0; p <= max_p; ++p) page.dims[p][q] = bases[p].dim();
    page.limit_dims.push_back(limit_dim(*hq));
    if (page.limit_dims.back() != page.dims[0][q])
      throw Error(ErrorCode::InternalError, "E2^{0,q} differs from the limit in degree " + std::to_string(q));
  }
  const auto rel = cohomology_bases(hom_complex(res, fixed_point_module(cat, m)));
  for (std::size_t p = 0; p <= max_p; ++p)
    if (rel[p].dim() != page.dims[p][0])
      throw Error(ErrorCode::InternalError, "bottom row differs from relative cohomology in degree " + std::to_string(p));

  for (std::size_t n = 0; n <= max_q; ++n) {
    page.vertical_edge.push_back(vertical_edge(cat, engine, n));
    page.vertical_kernel.push_back(page.vertical_edge.back().cols() - rank(page.vertical_edge.back()));
  }
  page.horizontal_edge = horizontal_edge(cat, m, max_p, options);
  for (const auto& h : page.horizontal_edge) page.horizontal_rank.push_back(rank(h));

  const std::size_t common = std::min(max_p, max_q);
  for (std::size_t n = 0; n <= common; ++n) {
    const Matrix composite = page.vertical_edge[n] * page.horizontal_edge[n];
    page.edge_composite_rank.push_back(rank(composite));
    if (n > 0 && page.edge_composite_rank.back() != 0)
      throw Error(ErrorCode::InternalError, "relative classes restrict nontrivially in degree " + std::to_string(n));
    page.relative_essential.push_back(page.horizontal_rank[n] - page.edge_composite_rank.back());
    SubquotientCheck s{n, page.target_dims[n], 0};
    for (std::size_t p = 0; p <= n; ++p) s.bound += page.dims[p][n - p];
    page.subquotient.push_back(s);
  }
  return page;
}

std::vector<std::size_t> essential_dims(GroupPtr g, const GGRep& m, std::size_t max_deg, const ResolveOptions& options) {
  const CatPtr cat = orbit_category(g, "all_proper");
  GroupCohomologyEngine engine(m, max_deg, options);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= max_deg; ++n) {
    const Matrix v = vertical_edge(cat, engine, n);
    out.push_back(v.cols() - rank(v));
  }
  return out;
}

std::vector<std::size_t> relative_essential_dims(GroupPtr g, const GGRep& m, std::size_t max_deg,
                                                 const ResolveOptions& options) {
  const CatPtr cat = orbit_category(g, "all_proper");
  GroupCohomologyEngine engine(m, max_deg, options);
  const auto h = horizontal_edge(cat, m, max_deg, options);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= max_deg; ++n) out.push_back(rank(h[n]) - rank(vertical_edge(cat, engine, n) * h[n]));
  return out;
}

}  // namespace orbicoh
