#include "orbicoh/gamma_module.hpp"

#include <algorithm>
#include <numeric>

#include "orbicoh/error.hpp"

namespace orbicoh {

namespace {

void require_same_category(const GammaModule& a, const GammaModule& b, const char* what) {
  if (a.cat != b.cat || a.p != b.p) throw Error(ErrorCode::CategoryMismatch, what);
}

}  // namespace

std::size_t GammaModule::total_dim() const { return std::accumulate(dim.begin(), dim.end(), std::size_t{0}); }

ModulePtr make_module(CatPtr cat, std::uint32_t p, std::vector<std::size_t> dim, std::vector<Matrix> act) {
  auto m = std::make_shared<GammaModule>(GammaModule{std::move(cat), p, std::move(dim), std::move(act)});
  if (auto bad = check_functoriality(*m)) throw Error(ErrorCode::InvalidModule, *bad);
  return m;
}

std::optional<std::string> check_functoriality(const GammaModule& m) {
  const OrbitCategory& c = *m.cat;
  if (m.dim.size() != c.num_objects()) return "dimension vector has the wrong length";
  if (m.act.size() != c.num_morphisms()) return "structure map count differs from the morphism count";
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    const Matrix& a = m.act[f];
    if (a.rows() != m.dim[mf.source] || a.cols() != m.dim[mf.target] || a.prime() != m.p)
      return "structure map " + std::to_string(f) + " has the wrong shape";
  }
  for (std::size_t h = 0; h < c.num_objects(); ++h)
    if (!m.act[c.identity(h)].is_identity()) return "identity of object " + std::to_string(h) + " acts nontrivially";
  for (std::size_t f = 0; f < c.num_morphisms(); ++f)
    for (std::size_t g : c.out(c.morphism(f).target))
      if (m.act[c.compose(f, g)] != m.act[f] * m.act[g])
        return "functoriality fails for morphisms " + std::to_string(f) + ", " + std::to_string(g);
  return std::nullopt;
}

std::optional<std::string> check_hom(const GammaHom& h) {
  const GammaModule& s = *h.source;
  const GammaModule& t = *h.target;
  if (s.cat != t.cat) return "source and target live over different categories";
  const OrbitCategory& c = *s.cat;
  if (h.comp.size() != c.num_objects()) return "component count differs from the object count";
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (h.comp[x].rows() != t.dim[x] || h.comp[x].cols() != s.dim[x])
      return "component at object " + std::to_string(x) + " has the wrong shape";
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    if (h.comp[mf.source] * s.act[f] != t.act[f] * h.comp[mf.target])
      return "naturality fails at morphism " + std::to_string(f);
  }
  return std::nullopt;
}

ModulePtr zero_module(CatPtr cat, std::uint32_t p) {
  std::vector<Matrix> act;
  for (std::size_t f = 0; f < cat->num_morphisms(); ++f) act.emplace_back(0, 0, p);
  const std::size_t n = cat->num_objects();
  return make_module(std::move(cat), p, std::vector<std::size_t>(n, 0), std::move(act));
}

ModulePtr free_module(CatPtr cat, std::uint32_t p, std::size_t k) {
  const OrbitCategory& c = *cat;
  std::vector<std::size_t> dim(c.num_objects());
  for (std::size_t h = 0; h < c.num_objects(); ++h) dim[h] = c.hom(h, k).size();
  std::vector<Matrix> act;
  act.reserve(c.num_morphisms());
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    Matrix a(dim[mf.source], dim[mf.target], p);
    auto basis = c.hom(mf.target, k);
    for (std::size_t j = 0; j < basis.size(); ++j) a(c.local_index(c.compose(f, basis[j])), j) = 1;
    act.push_back(std::move(a));
  }
  return make_module(std::move(cat), p, std::move(dim), std::move(act));
}

ModulePtr interval_module(CatPtr cat, std::uint32_t p, const std::vector<std::size_t>& support) {
  const OrbitCategory& c = *cat;
  std::vector<char> in(c.num_objects(), 0);
  for (std::size_t h : support) {
    if (h >= c.num_objects()) throw Error(ErrorCode::NotDownwardClosed, "object id out of range");
    in[h] = 1;
  }
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    if (in[mf.target] && !in[mf.source])
      throw Error(ErrorCode::NotDownwardClosed, "object " + std::to_string(mf.source) + " maps into the support at " +
                                                    std::to_string(mf.target) + " but lies outside it");
  }
  std::vector<std::size_t> dim(c.num_objects());
  for (std::size_t h = 0; h < c.num_objects(); ++h) dim[h] = in[h] ? 1 : 0;
  std::vector<Matrix> act;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    act.push_back(in[mf.source] && in[mf.target] ? Matrix::identity(1, p) : Matrix(dim[mf.source], dim[mf.target], p));
  }
  return make_module(std::move(cat), p, std::move(dim), std::move(act));
}

ModulePtr constant_module(CatPtr cat, std::uint32_t p) {
  std::vector<std::size_t> all(cat->num_objects());
  std::iota(all.begin(), all.end(), 0);
  return interval_module(std::move(cat), p, all);
}

std::vector<Matrix> fixed_point_bases(const OrbitCategory& cat, const GGRep& m) {
  std::vector<Matrix> bases;
  for (std::size_t h = 0; h < cat.num_objects(); ++h) bases.push_back(fixed_subspace_basis(m, cat.object(h)));
  return bases;
}

ModulePtr fixed_point_module(CatPtr cat, const GGRep& m) {
  const OrbitCategory& c = *cat;
  if (m.group->order() != c.group().order())
    throw Error(ErrorCode::CategoryMismatch, "representation and category use different groups");
  const auto bases = fixed_point_bases(c, m);
  std::vector<std::size_t> dim;
  for (const auto& b : bases) dim.push_back(b.cols());
  std::vector<Matrix> act;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    auto a = solve(bases[mf.source], m.rho[mf.rep] * bases[mf.target]);
    if (!a) throw Error(ErrorCode::InducedMapFailure, "translate of a fixed vector is not fixed");
    act.push_back(std::move(*a));
  }
  return make_module(std::move(cat), m.p, std::move(dim), std::move(act));
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidModule, "direct sum of no modules");
  const CatPtr cat = parts.front()->cat;
  const std::uint32_t p = parts.front()->p;
  for (const auto& m : parts) require_same_category(*m, *parts.front(), "direct sum over different categories");
  const OrbitCategory& c = *cat;
  DirectSum out;
  std::vector<std::size_t> dim(c.num_objects(), 0);
  for (const auto& m : parts) {
    out.offsets.push_back(dim);
    for (std::size_t h = 0; h < c.num_objects(); ++h) dim[h] += m->dim[h];
  }
  std::vector<Matrix> act;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    std::vector<Matrix> blocks;
    for (const auto& m : parts) blocks.push_back(m->act[f]);
    act.push_back(Matrix::direct_sum(blocks, p));
  }
  out.module = make_module(cat, p, dim, std::move(act));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    GammaHom inc{parts[i], out.module, {}}, proj{out.module, parts[i], {}};
    for (std::size_t h = 0; h < c.num_objects(); ++h) {
      Matrix in(dim[h], parts[i]->dim[h], p);
      in.set_block(out.offsets[i][h], 0, Matrix::identity(parts[i]->dim[h], p));
      proj.comp.push_back(in.transpose());
      inc.comp.push_back(std::move(in));
    }
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

GammaHom identity_hom(const ModulePtr& m) {
  GammaHom h{m, m, {}};
  for (std::size_t d : m->dim) h.comp.push_back(Matrix::identity(d, m->p));
  return h;
}

GammaHom zero_hom(const ModulePtr& source, const ModulePtr& target) {
  require_same_category(*source, *target, "zero_hom");
  GammaHom h{source, target, {}};
  for (std::size_t x = 0; x < source->dim.size(); ++x) h.comp.emplace_back(target->dim[x], source->dim[x], source->p);
  return h;
}

GammaHom compose(const GammaHom& first, const GammaHom& second) {
  if (first.target->cat != second.source->cat) throw Error(ErrorCode::CategoryMismatch, "compose");
  GammaHom h{first.source, second.target, {}};
  for (std::size_t x = 0; x < first.comp.size(); ++x) h.comp.push_back(second.comp[x] * first.comp[x]);
  return h;
}

GammaHom hom_sum(const GammaHom& a, const GammaHom& b) {
  GammaHom h{a.source, a.target, {}};
  for (std::size_t x = 0; x < a.comp.size(); ++x) h.comp.push_back(a.comp[x] + b.comp[x]);
  return h;
}

GammaHom hom_scaled(const GammaHom& a, Scalar s) {
  GammaHom h{a.source, a.target, {}};
  for (const auto& m : a.comp) h.comp.push_back(m.scaled(s));
  return h;
}

GammaHom hom_from_sum(const DirectSum& source, const std::vector<GammaHom>& parts, const ModulePtr& target) {
  GammaHom h = zero_hom(source.module, target);
  for (std::size_t i = 0; i < parts.size(); ++i) h = hom_sum(h, compose(source.projections[i], parts[i]));
  return h;
}

GammaHom hom_into_sum(const ModulePtr& source, const std::vector<GammaHom>& parts, const DirectSum& target) {
  GammaHom h = zero_hom(source, target.module);
  for (std::size_t i = 0; i < parts.size(); ++i) h = hom_sum(h, compose(parts[i], target.inclusions[i]));
  return h;
}

std::vector<GammaHom> hom_space(const ModulePtr& mp, const ModulePtr& np) {
  const GammaModule& m = *mp;
  const GammaModule& n = *np;
  require_same_category(m, n, "hom_space over different categories");
  const OrbitCategory& c = *m.cat;
  const std::size_t objs = c.num_objects();
  // unknown comp[H](i, j) sits at offset[H] + i * dim_m[H] + j
  std::vector<std::size_t> offset(objs + 1, 0);
  for (std::size_t h = 0; h < objs; ++h) offset[h + 1] = offset[h] + n.dim[h] * m.dim[h];
  std::size_t rows = 0;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    if (f != c.identity(mf.source)) rows += n.dim[mf.source] * m.dim[mf.target];
  }
  const std::uint32_t p = m.p;
  PrimeField field(p);
  Matrix sys(rows, offset[objs], p);
  std::size_t r = 0;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    if (f == c.identity(mf.source)) continue;
    const std::size_t k = mf.source, h = mf.target;
    const Matrix& am = m.act[f];  // dim_m[k] x dim_m[h]
    const Matrix& an = n.act[f];  // dim_n[k] x dim_n[h]
    // comp[k] * am - an * comp[h] = 0
    for (std::size_t i = 0; i < n.dim[k]; ++i)
      for (std::size_t j = 0; j < m.dim[h]; ++j, ++r) {
        for (std::size_t l = 0; l < m.dim[k]; ++l)
          if (am(l, j)) sys(r, offset[k] + i * m.dim[k] + l) = field.add(sys(r, offset[k] + i * m.dim[k] + l), am(l, j));
        for (std::size_t l = 0; l < n.dim[h]; ++l)
          if (an(i, l)) sys(r, offset[h] + l * m.dim[h] + j) = field.sub(sys(r, offset[h] + l * m.dim[h] + j), an(i, l));
      }
  }
  const Matrix kb = kernel_basis(sys);
  std::vector<GammaHom> out;
  for (std::size_t b = 0; b < kb.cols(); ++b) {
    GammaHom hm{mp, np, {}};
    for (std::size_t h = 0; h < objs; ++h) {
      Matrix comp(n.dim[h], m.dim[h], p);
      for (std::size_t i = 0; i < n.dim[h]; ++i)
        for (std::size_t j = 0; j < m.dim[h]; ++j) comp(i, j) = kb(offset[h] + i * m.dim[h] + j, b);
      hm.comp.push_back(std::move(comp));
    }
    out.push_back(std::move(hm));
  }
  return out;
}

std::pair<ModulePtr, GammaHom> kernel_module(const GammaHom& h) {
  const GammaModule& s = *h.source;
  const OrbitCategory& c = *s.cat;
  std::vector<Matrix> bases;
  std::vector<std::size_t> dim;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    bases.push_back(kernel_basis(h.comp[x]));
    dim.push_back(bases.back().cols());
  }
  std::vector<Matrix> act;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    auto a = solve(bases[mf.source], s.act[f] * bases[mf.target]);
    if (!a)
      throw Error(ErrorCode::InducedMapFailure, "structure map " + std::to_string(f) + " does not preserve the kernel");
    act.push_back(std::move(*a));
  }
  auto k = make_module(s.cat, s.p, std::move(dim), std::move(act));
  GammaHom inc{k, h.source, std::move(bases)};
  return {k, std::move(inc)};
}

ModulePtr tensor_module(const ModulePtr& m, const ModulePtr& n) {
  require_same_category(*m, *n, "tensor over different categories");
  std::vector<std::size_t> dim;
  for (std::size_t x = 0; x < m->dim.size(); ++x) dim.push_back(m->dim[x] * n->dim[x]);
  std::vector<Matrix> act;
  for (std::size_t f = 0; f < m->act.size(); ++f) act.push_back(Matrix::kron(m->act[f], n->act[f]));
  return make_module(m->cat, m->p, std::move(dim), std::move(act));
}

ModulePtr pullback_module(const ModulePtr& m, CatPtr cat, const std::vector<std::size_t>& object_map,
                          const std::vector<std::size_t>& morphism_map) {
  std::vector<std::size_t> dim;
  for (std::size_t x : object_map) dim.push_back(m->dim[x]);
  std::vector<Matrix> act;
  for (std::size_t f : morphism_map) act.push_back(m->act[f]);
  return make_module(std::move(cat), m->p, std::move(dim), std::move(act));
}

GammaHom pullback_hom(const GammaHom& h, const ModulePtr& source, const ModulePtr& target,
                      const std::vector<std::size_t>& object_map) {
  GammaHom out{source, target, {}};
  for (std::size_t x : object_map) out.comp.push_back(h.comp[x]);
  return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> inclusion_functor(const OrbitCategory& v,
                                                                               const OrbitCategory& w) {
  if (v.group().order() != w.group().order())
    throw Error(ErrorCode::CategoryMismatch, "categories over different groups");
  std::vector<std::size_t> objects, morphisms;
  for (std::size_t x = 0; x < v.num_objects(); ++x) {
    auto y = w.object_of(v.object(x));
    if (!y) throw Error(ErrorCode::NotSubfamily, "object " + std::to_string(x) + " is missing from the larger family");
    objects.push_back(*y);
  }
  for (std::size_t f = 0; f < v.num_morphisms(); ++f) {
    const Morphism& mf = v.morphism(f);
    auto g = w.find(objects[mf.source], objects[mf.target], mf.rep);
    if (!g) throw Error(ErrorCode::InternalError, "morphism lost under inclusion");
    morphisms.push_back(*g);
  }
  return {objects, morphisms};
}

ModulePtr restrict_to_family(const ModulePtr& m, CatPtr v) {
  auto [objects, morphisms] = inclusion_functor(*v, *m->cat);
  return pullback_module(m, std::move(v), objects, morphisms);
}

ModulePtr two_family_limit(const ModulePtr& mp, CatPtr wp) {
  const GammaModule& m = *mp;
  const OrbitCategory& v = *m.cat;
  const OrbitCategory& w = *wp;
  std::vector<std::size_t> vobj;
  try {
    vobj = inclusion_functor(v, w).first;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSubfamily) throw Error(ErrorCode::NotSuperfamily, e.what());
    throw;
  }
  const std::uint32_t p = m.p;
  PrimeField field(p);

  // Tuple coordinates at H: for each V-object K and each phi in mor_W(K, H), a block of dim_m[K].
  struct Layout {
    std::vector<std::size_t> block_start;  // indexed by position in the flattened (K, phi) list
    std::vector<std::vector<std::size_t>> first;  // first[K] = position of (K, local phi = 0)
    std::size_t size = 0;
  };
  auto layout_for = [&](std::size_t h) {
    Layout l;
    l.first.resize(v.num_objects());
    for (std::size_t k = 0; k < v.num_objects(); ++k) {
      l.first[k].push_back(l.block_start.size());
      for (std::size_t j = 0; j < w.hom(vobj[k], h).size(); ++j) {
        l.block_start.push_back(l.size);
        l.size += m.dim[k];
      }
    }
    return l;
  };
  auto at = [&](const Layout& l, std::size_t k, std::size_t phi) {
    return l.block_start[l.first[k][0] + w.local_index(phi)];
  };

  std::vector<Layout> layouts;
  std::vector<Matrix> bases;
  std::vector<std::size_t> dim;
  for (std::size_t h = 0; h < w.num_objects(); ++h) {
    layouts.push_back(layout_for(h));
    const Layout& l = layouts.back();
    std::size_t rows = 0;
    for (std::size_t t = 0; t < v.num_morphisms(); ++t) {
      const Morphism& mt = v.morphism(t);
      rows += w.hom(vobj[mt.target], h).size() * m.dim[mt.source];
    }
    Matrix sys(rows, l.size, p);
    std::size_t r = 0;
    for (std::size_t t = 0; t < v.num_morphisms(); ++t) {
      const Morphism& mt = v.morphism(t);
      const std::size_t k = mt.target, k2 = mt.source;
      auto tw = w.find(vobj[k2], vobj[k], mt.rep);
      for (std::size_t phi : w.hom(vobj[k], h)) {
        const std::size_t comp = w.compose(*tw, phi);
        const std::size_t src = at(l, k, phi), dst = at(l, k2, comp);
        // act[t] m_(k, phi) - m_(k2, phi o t) = 0
        for (std::size_t i = 0; i < m.dim[k2]; ++i, ++r) {
          for (std::size_t j = 0; j < m.dim[k]; ++j) sys(r, src + j) = field.add(sys(r, src + j), m.act[t](i, j));
          sys(r, dst + i) = field.sub(sys(r, dst + i), 1);
        }
      }
    }
    bases.push_back(kernel_basis(sys));
    dim.push_back(bases.back().cols());
  }

  std::vector<Matrix> act;
  for (std::size_t f = 0; f < w.num_morphisms(); ++f) {
    const Morphism& mf = w.morphism(f);
    const std::size_t h2 = mf.source, h = mf.target;
    const Layout& l2 = layouts[h2];
    const Layout& l = layouts[h];
    Matrix sel(l2.size, l.size, p);
    for (std::size_t k = 0; k < v.num_objects(); ++k)
      for (std::size_t phi2 : w.hom(vobj[k], h2)) {
        const std::size_t dst = at(l2, k, phi2), src = at(l, k, w.compose(phi2, f));
        for (std::size_t i = 0; i < m.dim[k]; ++i) sel(dst + i, src + i) = 1;
      }
    auto a = solve(bases[h2], sel * bases[h]);
    if (!a) throw Error(ErrorCode::InducedMapFailure, "tuple restriction leaves the limit");
    act.push_back(std::move(*a));
  }
  return make_module(wp, p, std::move(dim), std::move(act));
}

Matrix limit_basis(const GammaModule& m) {
  const OrbitCategory& c = *m.cat;
  PrimeField field(m.p);
  std::vector<std::size_t> offset(c.num_objects() + 1, 0);
  for (std::size_t h = 0; h < c.num_objects(); ++h) offset[h + 1] = offset[h] + m.dim[h];
  std::size_t rows = 0;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) rows += m.dim[c.morphism(f).source];
  Matrix sys(rows, offset.back(), m.p);
  std::size_t r = 0;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    // act[f] m_target - m_source = 0
    for (std::size_t i = 0; i < m.dim[mf.source]; ++i, ++r) {
      for (std::size_t j = 0; j < m.dim[mf.target]; ++j)
        sys(r, offset[mf.target] + j) = field.add(sys(r, offset[mf.target] + j), m.act[f](i, j));
      sys(r, offset[mf.source] + i) = field.sub(sys(r, offset[mf.source] + i), 1);
    }
  }
  return kernel_basis(sys);
}

std::size_t limit_dim(const GammaModule& m) { return limit_basis(m).cols(); }

}  // namespace orbicoh
