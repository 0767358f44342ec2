#include "orbicoh/homalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "orbicoh/error.hpp"

namespace orbicoh {

std::vector<std::pair<std::size_t, std::size_t>> FreeDecl::multiplicities() const {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t k : objects) ++counts[k];
  return {counts.begin(), counts.end()};
}

FreeModule realize_free(CatPtr cat, std::uint32_t p, const FreeDecl& decl) {
  FreeModule out;
  out.decl = decl;
  if (decl.objects.empty()) {
    out.module = zero_module(std::move(cat), p);
    return out;
  }
  std::map<std::size_t, ModulePtr> cache;
  std::vector<ModulePtr> parts;
  for (std::size_t k : decl.objects) {
    auto& m = cache[k];
    if (!m) m = free_module(cat, p, k);
    parts.push_back(m);
  }
  DirectSum sum = direct_sum(parts);
  out.module = sum.module;
  out.offsets = std::move(sum.offsets);
  return out;
}

GammaHom hom_from_free(const FreeModule& f, const ModulePtr& n, const std::vector<Matrix>& images) {
  const OrbitCategory& c = *n->cat;
  GammaHom h = zero_hom(f.module, n);
  for (std::size_t i = 0; i < f.decl.objects.size(); ++i) {
    const std::size_t k = f.decl.objects[i];
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      auto mors = c.hom(x, k);
      for (std::size_t l = 0; l < mors.size(); ++l) h.comp[x].set_block(0, f.offsets[i][x] + l, n->act[mors[l]] * images[i]);
    }
  }
  return h;
}

Matrix yoneda_evaluation(const FreeModule& f, const GammaModule& n, std::size_t h, const Matrix& y) {
  const OrbitCategory& c = *n.cat;
  std::size_t cols = 0;
  for (std::size_t k : f.decl.objects) cols += n.dim[k];
  Matrix out(n.dim[h], cols, n.p);
  std::size_t col = 0;
  for (std::size_t i = 0; i < f.decl.objects.size(); ++i) {
    const std::size_t k = f.decl.objects[i];
    auto mors = c.hom(h, k);
    for (std::size_t l = 0; l < mors.size(); ++l) {
      const Scalar coeff = y(f.offsets[i][h] + l, 0);
      if (coeff != 0) out.add_block(0, col, n.act[mors[l]], coeff);
    }
    col += n.dim[k];
  }
  return out;
}

FreeHull free_hull(const ModulePtr& mp, HullStrategy strategy) {
  const GammaModule& m = *mp;
  const OrbitCategory& c = *m.cat;
  std::vector<std::size_t> order(c.num_objects());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c.object(a).size() > c.object(b).size(); });

  FreeDecl decl;
  std::vector<Matrix> images;
  for (std::size_t h : order) {
    const std::size_t d = m.dim[h];
    if (d == 0) continue;
    if (strategy == HullStrategy::FullBasis) {
      for (std::size_t j = 0; j < d; ++j) {
        Matrix e(d, 1, m.p);
        e(j, 0) = 1;
        decl.objects.push_back(h);
        images.push_back(std::move(e));
      }
      continue;
    }
    EchelonSpan covered(d, m.p);
    for (std::size_t i = 0; i < decl.objects.size() && covered.dim() < d; ++i)
      for (std::size_t e : c.hom(h, decl.objects[i])) {
        const Matrix v = m.act[e] * images[i];
        covered.insert_column(v, 0);
        if (covered.dim() == d) break;
      }
    for (std::size_t j = 0; j < d && covered.dim() < d; ++j) {
      std::vector<Scalar> unit(d, 0);
      unit[j] = 1;
      if (covered.contains(unit)) continue;
      Matrix e(d, 1, m.p);
      e(j, 0) = 1;
      for (std::size_t endo : c.hom(h, h)) covered.insert_column(m.act[endo] * e, 0);
      decl.objects.push_back(h);
      images.push_back(std::move(e));
    }
  }
  FreeHull out;
  out.free = realize_free(m.cat, m.p, decl);
  out.epi = hom_from_free(out.free, mp, images);
  return out;
}

std::size_t dimension_cap() {
  if (const char* env = std::getenv("ORBICOH_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

namespace {

void enforce_cap(const GammaModule& m, std::size_t degree) {
  const std::size_t cap = dimension_cap();
  for (std::size_t x = 0; x < m.dim.size(); ++x)
    if (m.dim[x] > cap)
      throw Error(ErrorCode::DegreeBoundExceeded, "degree " + std::to_string(degree) + " term has dimension " +
                                                      std::to_string(m.dim[x]) + " at object " + std::to_string(x) +
                                                      " (cap " + std::to_string(cap) + ")");
}

}  // namespace

Resolution resolve(const ModulePtr& m, std::size_t n, const ResolveOptions& options) {
  if (n > kDegreeCap)
    throw Error(ErrorCode::DegreeBoundExceeded, "degree " + std::to_string(n) + " exceeds the cap " +
                                                    std::to_string(kDegreeCap));
  auto strategy_at = [&](std::size_t k) {
    return k < options.full_basis_depth ? HullStrategy::FullBasis : options.strategy;
  };
  Resolution res;
  res.complex.target = m;
  FreeHull hull = free_hull(m, strategy_at(0));
  enforce_cap(*hull.free.module, 0);
  res.complex.terms.push_back(hull.free.module);
  res.complex.augmentation = hull.epi;
  res.free.push_back(std::move(hull.free));
  GammaHom prev = res.complex.augmentation;
  for (std::size_t k = 1; k <= n; ++k) {
    auto [kernel, inclusion] = kernel_module(prev);
    FreeHull next = free_hull(kernel, strategy_at(k));
    enforce_cap(*next.free.module, k);
    GammaHom d = compose(next.epi, inclusion);
    res.complex.terms.push_back(next.free.module);
    res.complex.boundaries.push_back(d);
    res.free.push_back(std::move(next.free));
    prev = std::move(d);
  }
  if (options.verify)
    if (auto bad = check_resolution(res.complex)) throw Error(ErrorCode::InternalError, "resolution check: " + *bad);
  return res;
}

std::optional<std::string> check_resolution(const AugmentedComplex& c) {
  const GammaModule& target = *c.target;
  const std::size_t objs = target.dim.size();
  if (auto bad = check_hom(c.augmentation)) return "augmentation: " + *bad;
  for (std::size_t i = 0; i < c.boundaries.size(); ++i)
    if (auto bad = check_hom(c.boundaries[i])) return "boundary " + std::to_string(i + 1) + ": " + *bad;
  for (std::size_t x = 0; x < objs; ++x) {
    if (rank(c.augmentation.comp[x]) != target.dim[x]) return "augmentation not surjective at object " + std::to_string(x);
    const Matrix* prev = &c.augmentation.comp[x];
    for (std::size_t i = 0; i < c.boundaries.size(); ++i) {
      const Matrix& d = c.boundaries[i].comp[x];
      if (!((*prev) * d).is_zero()) return "consecutive maps do not compose to zero in degree " + std::to_string(i);
      if (rank(*prev) + rank(d) != c.terms[i]->dim[x])
        return "not exact in degree " + std::to_string(i) + " at object " + std::to_string(x);
      prev = &d;
    }
  }
  return std::nullopt;
}

Matrix yoneda_pullback(const FreeModule& source, const FreeModule& target, const GammaHom& h, const GammaModule& n) {
  std::vector<Matrix> rows;
  std::size_t cols = 0;
  for (std::size_t k : target.decl.objects) cols += n.dim[k];
  for (std::size_t j = 0; j < source.decl.objects.size(); ++j) {
    const std::size_t k = source.decl.objects[j];
    rows.push_back(yoneda_evaluation(target, n, k, h.comp[k].column(source.generator_row(j))));
  }
  return Matrix::vstack(rows, cols, n.p);
}

CochainComplex hom_complex(const Resolution& res, const ModulePtr& np) {
  const GammaModule& n = *np;
  if (res.target()->cat != n.cat || res.target()->p != n.p)
    throw Error(ErrorCode::CategoryMismatch, "resolution and coefficients over different categories");
  CochainComplex out;
  for (const auto& f : res.free) {
    std::size_t d = 0;
    for (std::size_t k : f.decl.objects) d += n.dim[k];
    out.dims.push_back(d);
  }
  for (std::size_t q = 0; q + 1 < res.free.size(); ++q)
    out.coboundaries.push_back(yoneda_pullback(res.free[q + 1], res.free[q], res.complex.boundaries[q], n));
  for (std::size_t q = 0; q + 1 < out.coboundaries.size(); ++q)
    if (!(out.coboundaries[q + 1] * out.coboundaries[q]).is_zero())
      throw Error(ErrorCode::InternalError, "coboundaries do not compose to zero in degree " + std::to_string(q));
  return out;
}

Matrix CohomologyBasis::coordinates(const Matrix& cocycles) const {
  auto x = solve(Matrix::hstack(image, reps), cocycles);
  if (!x) throw Error(ErrorCode::InternalError, "coordinates requested for a non-cocycle");
  return x->block(image.cols(), 0, reps.cols(), cocycles.cols());
}

std::vector<CohomologyBasis> cohomology_bases(const CochainComplex& c) {
  std::vector<CohomologyBasis> out;
  const std::uint32_t p = c.coboundaries.empty() ? 2 : c.coboundaries.front().prime();
  for (std::size_t q = 0; q < c.coboundaries.size(); ++q) {
    const Matrix z = kernel_basis(c.coboundaries[q]);
    Matrix im = q == 0 ? Matrix(c.dims[0], 0, p) : column_space_basis(c.coboundaries[q - 1]);
    const auto rr = rref(Matrix::hstack(im, z));
    std::vector<std::size_t> chosen;
    for (std::size_t pc : rr.pivots)
      if (pc >= im.cols()) chosen.push_back(pc - im.cols());
    out.push_back({std::move(im), z.columns(chosen)});
  }
  return out;
}

std::vector<std::size_t> ext_dims(const ModulePtr& m, const ModulePtr& n, std::size_t max_deg,
                                  const ResolveOptions& options) {
  const Resolution res = resolve(m, max_deg + 1, options);
  const auto bases = cohomology_bases(hom_complex(res, n));
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q <= max_deg; ++q) out.push_back(bases[q].dim());
  return out;
}

std::vector<GammaHom> lift_chain_map(const GammaHom& alpha, const Resolution& source, const AugmentedComplex& target,
                                     std::size_t n) {
  if (source.free.size() <= n || target.terms.size() <= n)
    throw Error(ErrorCode::LiftFailed, "resolutions shorter than the requested degree");
  const OrbitCategory& c = *source.target()->cat;
  std::vector<GammaHom> chain;
  for (std::size_t k = 0; k <= n; ++k) {
    const FreeModule& f = source.free[k];
    const GammaHom& down = k == 0 ? source.complex.augmentation : source.complex.boundaries[k - 1];
    const GammaHom& prev = k == 0 ? alpha : chain[k - 1];
    const GammaHom& target_down = k == 0 ? target.augmentation : target.boundaries[k - 1];
    std::vector<Matrix> images(f.decl.objects.size());
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      std::vector<std::size_t> gens;
      for (std::size_t i = 0; i < f.decl.objects.size(); ++i)
        if (f.decl.objects[i] == x) gens.push_back(i);
      if (gens.empty()) continue;
      std::vector<std::size_t> rows;
      for (std::size_t i : gens) rows.push_back(f.generator_row(i));
      const Matrix rhs = prev.comp[x] * down.comp[x].columns(rows);
      auto y = solve(target_down.comp[x], rhs);
      if (!y) throw Error(ErrorCode::LiftFailed, "no lift in degree " + std::to_string(k) + " at object " + std::to_string(x));
      for (std::size_t t = 0; t < gens.size(); ++t) images[gens[t]] = y->column(t);
    }
    GammaHom fk = hom_from_free(f, target.terms[k], images);
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      if (target_down.comp[x] * fk.comp[x] != prev.comp[x] * down.comp[x])
        throw Error(ErrorCode::LiftFailed, "square fails to commute in degree " + std::to_string(k));
    chain.push_back(std::move(fk));
  }
  return chain;
}

std::vector<Matrix> induced_ext_map(const GammaHom& alpha, const Resolution& res_m, const Resolution& res_m2,
                                    const ModulePtr& n, std::size_t max_deg) {
  const auto chain = lift_chain_map(alpha, res_m, res_m2.complex, max_deg);
  const auto bases = cohomology_bases(hom_complex(res_m, n));
  const auto bases2 = cohomology_bases(hom_complex(res_m2, n));
  if (bases.size() <= max_deg || bases2.size() <= max_deg)
    throw Error(ErrorCode::LiftFailed, "resolutions too short for the requested degree");
  std::vector<Matrix> out;
  for (std::size_t q = 0; q <= max_deg; ++q) {
    const Matrix pull = yoneda_pullback(res_m.free[q], res_m2.free[q], chain[q], *n);
    out.push_back(bases[q].coordinates(pull * bases2[q].reps));
  }
  return out;
}

std::vector<Matrix> induced_ext_map(const GammaHom& alpha, const ModulePtr& n, std::size_t max_deg,
                                    const ResolveOptions& options) {
  const Resolution res_m = resolve(alpha.source, max_deg + 1, options);
  const Resolution res_m2 = resolve(alpha.target, max_deg + 1, options);
  return induced_ext_map(alpha, res_m, res_m2, n, max_deg);
}

}  // namespace orbicoh
