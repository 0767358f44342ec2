#include "orbicoh/random_objects.hpp"

#include <algorithm>

#include "orbicoh/error.hpp"
#include "orbicoh/homalg.hpp"

namespace orbicoh {

Scalar random_scalar(Rng& rng, std::uint32_t p) { return static_cast<Scalar>(rng() % p); }

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::uint32_t p) {
  Matrix m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, p);
  return m;
}

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

GGRep random_perm_rep(Rng& rng, GroupPtr g, std::uint32_t p, std::size_t max_dim) {
  std::vector<Subgroup> small;
  for (auto& h : all_subgroups(*g))
    if (g->order() / h.size() <= std::max<std::size_t>(max_dim, 1)) small.push_back(std::move(h));
  std::vector<Subgroup> orbits{small[pick(rng, small.size())]};
  std::size_t dim = g->order() / orbits.front().size();
  for (int tries = 0; tries < 3; ++tries) {
    const Subgroup& h = small[pick(rng, small.size())];
    if (dim + g->order() / h.size() > max_dim || rng() % 2) continue;
    dim += g->order() / h.size();
    orbits.push_back(h);
  }
  return gset_rep(std::move(g), p, orbits);
}

Surjection quotient_by_span(const GGRep& b, const Matrix& vectors) {
  const std::uint32_t p = b.p;
  EchelonSpan span(b.dim, p);
  std::vector<Matrix> cols;
  for (std::size_t c = 0; c < vectors.cols(); ++c)
    for (const Matrix& r : b.rho) {
      const Matrix v = r * vectors.column(c);
      if (span.insert_column(v, 0)) cols.push_back(v);
    }
  const std::size_t w = cols.size();
  for (std::size_t i = 0; i < b.dim; ++i) {
    Matrix e(b.dim, 1, p);
    e(i, 0) = 1;
    if (span.insert_column(e, 0)) cols.push_back(e);
  }
  const Matrix q = Matrix::hstack(cols, b.dim, p);
  const Matrix qinv = *solve(q, Matrix::identity(b.dim, p));
  Surjection out;
  out.source = b;
  out.pi = qinv.block(w, 0, b.dim - w, b.dim);
  out.target.group = b.group;
  out.target.p = p;
  out.target.dim = b.dim - w;
  for (const Matrix& r : b.rho) out.target.rho.push_back((qinv * r * q).block(w, w, b.dim - w, b.dim - w));
  if (!is_equivariant(out.pi, out.source, out.target))
    throw Error(ErrorCode::InternalError, "span is not G-stable");
  return out;
}

GGRep random_rep(Rng& rng, GroupPtr g, std::uint32_t p, std::size_t max_dim) {
  GGRep b = random_perm_rep(rng, g, p, max_dim);
  if (rng() % 2 == 0 || b.dim < 2) return b;
  return quotient_by_span(b, random_matrix(rng, b.dim, 1, p)).target;
}

Surjection random_surjection(Rng& rng, GroupPtr g, std::uint32_t p, std::size_t max_dim) {
  for (;;) {
    GGRep b = random_perm_rep(rng, g, p, max_dim);
    if (b.dim < max_dim && rng() % 3 == 0) b = direct_sum(b, random_rep(rng, g, p, max_dim - b.dim));
    Surjection s = quotient_by_span(b, random_matrix(rng, b.dim, 1 + pick(rng, 2), p));
    if (s.target.dim > 0) return s;
  }
}

std::vector<std::size_t> random_downward_support(Rng& rng, const OrbitCategory& cat) {
  // closure of a random set of seeds under taking subgroups and conjugation
  std::vector<Subgroup> seeds;
  for (std::size_t x = 0; x < cat.num_objects(); ++x)
    if (rng() % 3 == 0) seeds.push_back(cat.object(x));
  std::vector<std::size_t> out;
  if (seeds.empty()) return out;
  const SubgroupFamily closed = family_closure(cat.group(), seeds);
  for (std::size_t x = 0; x < cat.num_objects(); ++x)
    if (closed.contains(cat.object(x))) out.push_back(x);
  return out;
}

GammaHom random_hom(Rng& rng, const ModulePtr& m, const ModulePtr& n) {
  GammaHom out = zero_hom(m, n);
  for (const GammaHom& b : hom_space(m, n)) out = hom_sum(out, hom_scaled(b, random_scalar(rng, m->p)));
  return out;
}

ModulePtr random_module(Rng& rng, const CatPtr& cat, std::uint32_t p, int depth) {
  const std::size_t objects = cat->num_objects();
  const std::size_t kind = pick(rng, depth > 0 ? 5 : 3);
  switch (kind) {
    case 0:
      return free_module(cat, p, pick(rng, objects));
    case 1:
      return interval_module(cat, p, random_downward_support(rng, *cat));
    case 2:
      return fixed_point_module(cat, random_rep(rng, cat->group_ptr(), p));
    case 3: {
      // kernel of a random map out of a free module
      FreeDecl decl;
      const std::size_t gens = 1 + pick(rng, 2);
      for (std::size_t i = 0; i < gens; ++i) decl.objects.push_back(pick(rng, objects));
      std::sort(decl.objects.begin(), decl.objects.end());
      const FreeModule f = realize_free(cat, p, decl);
      const ModulePtr target = random_module(rng, cat, p, depth - 1);
      std::vector<Matrix> images;
      for (std::size_t k : decl.objects) images.push_back(random_matrix(rng, target->dim[k], 1, p));
      return kernel_module(hom_from_free(f, target, images)).first;
    }
    default:
      return direct_sum({random_module(rng, cat, p, depth - 1), random_module(rng, cat, p, depth - 1)}).module;
  }
}

}  // namespace orbicoh
