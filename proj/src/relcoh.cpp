#include "orbicoh/relcoh.hpp"

#include <algorithm>

#include "orbicoh/error.hpp"

namespace orbicoh {

namespace {

// A representation stored through generator images only.
struct GenRep {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
};

GenRep gen_rep(const GGRep& m, const std::vector<Elem>& gens) {
  GenRep r{m.p, m.dim, {}};
  for (Elem x : gens) r.gens.push_back(m.rho[x]);
  return r;
}

// Columns: vec(X) (row-major) for a basis of {X : X v(g) = m(g) X}.
Matrix equivariant_maps(const GenRep& v, const GenRep& m) {
  PrimeField field(v.p);
  const std::size_t unknowns = m.dim * v.dim;
  Matrix sys(v.gens.size() * unknowns, unknowns, v.p);
  std::size_t r = 0;
  for (std::size_t s = 0; s < v.gens.size(); ++s) {
    const Matrix& a = v.gens[s];
    const Matrix& b = m.gens[s];
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < v.dim; ++j, ++r) {
        // (X a)(i, j) - (b X)(i, j)
        for (std::size_t l = 0; l < v.dim; ++l)
          if (a(l, j)) sys(r, i * v.dim + l) = field.add(sys(r, i * v.dim + l), a(l, j));
        for (std::size_t l = 0; l < m.dim; ++l)
          if (b(i, l)) sys(r, l * v.dim + j) = field.sub(sys(r, l * v.dim + j), b(i, l));
      }
  }
  return kernel_basis(sys);
}

std::size_t equivariant_dim(const GenRep& v, const GenRep& m) { return equivariant_maps(v, m).cols(); }

// Submodule on the columns of basis.
GenRep subrep(const GenRep& v, const Matrix& basis) {
  GenRep out{v.p, basis.cols(), {}};
  for (const auto& g : v.gens) {
    auto a = solve(basis, g * basis);
    if (!a) throw Error(ErrorCode::InternalError, "subspace is not invariant");
    out.gens.push_back(std::move(*a));
  }
  return out;
}

GenRep tensor(const GenRep& a, const GenRep& b) {
  GenRep out{a.p, a.dim * b.dim, {}};
  for (std::size_t s = 0; s < a.gens.size(); ++s) out.gens.push_back(Matrix::kron(a.gens[s], b.gens[s]));
  return out;
}

}  // namespace

std::vector<std::size_t> relative_cohomology_dims(CatPtr cat, const GGRep& m, std::size_t n,
                                                  const ResolveOptions& options) {
  const std::uint32_t p = m.p;
  return ext_dims(constant_module(cat, p), fixed_point_module(cat, m), n, options);
}

std::vector<std::size_t> rg_side_pipeline(CatPtr cat, const GGRep& m, std::size_t n, const ResolveOptions& options) {
  const OrbitCategory& c = *cat;
  auto t = c.object_of(trivial_subgroup());
  if (!t) throw Error(ErrorCode::FamilyInvalid, "family lacks the trivial subgroup");
  const Resolution res = resolve(constant_module(cat, m.p), n + 1, options);
  const auto gens = c.group().generators();
  const GenRep coeff = gen_rep(m, gens);

  auto value_rep = [&](const ModulePtr& term) {
    GenRep r{m.p, term->dim[*t], {}};
    for (Elem x : gens) r.gens.push_back(term->act[*c.find(*t, *t, x)]);
    return r;
  };
  // bases[k]: Hom_G(P_k(1), M) as vec columns
  std::vector<Matrix> bases;
  std::vector<std::size_t> pdim;
  for (const auto& term : res.complex.terms) {
    bases.push_back(equivariant_maps(value_rep(term), coeff));
    pdim.push_back(term->dim[*t]);
  }
  std::vector<std::size_t> ranks;  // rank of phi |-> phi o d_{k+1}
  for (std::size_t k = 0; k + 1 < res.complex.terms.size(); ++k) {
    const Matrix& d = res.complex.boundaries[k].comp[*t];  // P_{k+1}(1) -> P_k(1)
    Matrix images(m.dim * pdim[k + 1], bases[k].cols(), m.p);
    for (std::size_t b = 0; b < bases[k].cols(); ++b) {
      Matrix phi(m.dim, pdim[k], m.p);
      for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < pdim[k]; ++j) phi(i, j) = bases[k](i * pdim[k] + j, b);
      const Matrix comp = phi * d;
      for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < pdim[k + 1]; ++j) images(i * pdim[k + 1] + j, b) = comp(i, j);
    }
    ranks.push_back(rank(images));
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(bases[k].cols() - ranks[k] - (k ? ranks[k - 1] : 0));
  return out;
}

std::vector<std::size_t> tensor_construction_dims(const SubgroupFamily& f, const GGRep& m, std::size_t n) {
  const FiniteGroup& g = *m.group;
  // one orbit per conjugacy class of maximal members
  std::vector<Subgroup> orbits;
  std::vector<std::uint32_t> used;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::find(used.begin(), used.end(), f.class_id[i]) != used.end()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < f.size() && maximal; ++j)
      if (f.members[j].size() > f.members[i].size())
        for (Elem x = 0; x < g.order() && maximal; ++x)
          if (conjugate(g, f.members[i], x).is_subgroup_of(f.members[j])) maximal = false;
    if (!maximal) continue;
    used.push_back(f.class_id[i]);
    orbits.push_back(f.members[i]);
  }
  const auto gens = g.generators();
  const GenRep rx = gen_rep(gset_rep(m.group, m.p, orbits), gens);
  const GenRep coeff = gen_rep(m, gens);
  const Matrix eps = [&] {
    Matrix e(1, rx.dim, m.p);
    for (std::size_t j = 0; j < rx.dim; ++j) e(0, j) = 1;
    return e;
  }();

  GenRep k = gen_rep(trivial_rep(m.group, m.p), gens);  // K_{-1} = R
  std::vector<std::size_t> hom_k{equivariant_dim(k, coeff)};  // hom_k[j] = dim Hom_G(K_{j-1}, M)
  std::vector<std::size_t> hom_p;                              // hom_p[j] = dim Hom_G(P_j, M)
  for (std::size_t j = 0; j < n; ++j) {
    const GenRep pj = tensor(k, rx);
    hom_p.push_back(equivariant_dim(pj, coeff));
    const Matrix down = Matrix::kron(Matrix::identity(k.dim, m.p), eps);
    k = subrep(pj, kernel_basis(down));
    hom_k.push_back(equivariant_dim(k, coeff));
  }
  // With 0 -> K_j -> P_j -> K_{j-1} -> 0 split over F:
  // h^j = dim Hom(K_{j-1}, M) - dim Hom(P_{j-1}, M) + dim Hom(K_{j-2}, M).
  std::vector<std::size_t> out{hom_k[0]};
  for (std::size_t j = 1; j <= n; ++j) out.push_back(hom_k[j] + hom_k[j - 1] - hom_p[j - 1]);
  return out;
}

LineSequence line_sequence(const CatPtr& cat, std::uint32_t p) {
  const OrbitCategory& c = *cat;
  auto t = c.object_of(trivial_subgroup());
  if (!t || c.num_objects() != 4) throw Error(ErrorCode::FamilyInvalid, "expected a family {1, H_1, H_2, H_3}");
  std::vector<std::size_t> lines;
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (x != *t) lines.push_back(x);

  LineSequence out;
  const ModulePtr r0 = interval_module(cat, p, {*t});
  out.constant = constant_module(cat, p);
  std::vector<ModulePtr> parts;
  for (std::size_t x : lines) {
    const ModulePtr rh = interval_module(cat, p, {*t, x});
    parts.push_back(rh);
    GammaHom inc = zero_hom(r0, rh);
    inc.comp[*t] = Matrix::identity(1, p);
    out.line_inclusions.push_back(inc);
    GammaHom tau = zero_hom(rh, out.constant);
    tau.comp[*t] = Matrix::identity(1, p);
    tau.comp[x] = Matrix::identity(1, p);
    out.line_maps.push_back(tau);
  }
  out.zeros = direct_sum({r0, r0});
  out.lines = direct_sum(parts);

  const PrimeField field(p);
  const Scalar minus_one = field.neg(1);
  const auto& g = out.line_inclusions;
  const GammaHom first = hom_into_sum(r0, {hom_scaled(g[0], minus_one), g[1], zero_hom(r0, parts[2])}, out.lines);
  const GammaHom second = hom_into_sum(r0, {zero_hom(r0, parts[0]), g[1], hom_scaled(g[2], minus_one)}, out.lines);
  out.gamma = hom_from_sum(out.zeros, {first, second}, out.lines.module);
  out.pi = hom_from_sum(out.lines, out.line_maps, out.constant);
  for (const GammaHom* h : {&out.gamma, &out.pi})
    if (auto bad = check_hom(*h)) throw Error(ErrorCode::InternalError, *bad);
  return out;
}

std::size_t hom_g_dim(const GGRep& v, const GGRep& m) {
  const auto gens = v.group->generators();
  return equivariant_dim(gen_rep(v, gens), gen_rep(m, gens));
}

SplitVerdict split_over(const Matrix& pi, const GGRep& b, const GGRep& c, const Subgroup& h) {
  PrimeField field(b.p);
  const std::size_t nb = b.dim, nc = c.dim;
  const auto gens = subgroup_generators(*b.group, h);
  // unknown s(i, j) at i * nc + j
  const std::size_t rows = nc * nc + gens.size() * nb * nc;
  Matrix sys(rows, nb * nc, b.p);
  Matrix rhs(rows, 1, b.p);
  std::size_t r = 0;
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t col = 0; col < nc; ++col, ++r) {
      for (std::size_t i = 0; i < nb; ++i) sys(r, i * nc + col) = pi(a, i);
      rhs(r, 0) = a == col ? 1 : 0;
    }
  for (Elem x : gens) {
    const Matrix& rc = c.rho[x];
    const Matrix& rb = b.rho[x];
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t col = 0; col < nc; ++col, ++r) {
        // (s rc - rb s)(i, col)
        for (std::size_t j = 0; j < nc; ++j)
          if (rc(j, col)) sys(r, i * nc + j) = field.add(sys(r, i * nc + j), rc(j, col));
        for (std::size_t l = 0; l < nb; ++l)
          if (rb(i, l)) sys(r, l * nc + col) = field.sub(sys(r, l * nc + col), rb(i, l));
      }
  }
  SplitVerdict v;
  v.coefficient_rank = rank(sys);
  v.augmented_rank = rank(Matrix::hstack(sys, rhs));
  if (auto x = solve(sys, rhs)) {
    v.split = true;
    Matrix s(nb, nc, b.p);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*x)(i * nc + j, 0);
    v.witness = std::move(s);
  }
  return v;
}

bool verify_section(const Matrix& pi, const Matrix& s, const GGRep& b, const GGRep& c, const Subgroup& h) {
  if (!(pi * s).is_identity()) return false;
  for (Elem x : h.elements)
    if (s * c.rho[x] != b.rho[x] * s) return false;
  return true;
}

namespace {

void require_surjection(const Matrix& pi, const GGRep& b, const GGRep& c) {
  if (pi.rows() != c.dim || pi.cols() != b.dim) throw Error(ErrorCode::DimensionMismatch, "pi has the wrong shape");
  if (!is_equivariant(pi, b, c)) throw Error(ErrorCode::NotEquivariant, "pi does not commute with the group action");
  if (rank(pi) != c.dim) throw Error(ErrorCode::NotSurjective, "pi is not onto");
}

}  // namespace

FSplitReport fsplit_check(const Matrix& pi, const GGRep& b, const GGRep& c, const SubgroupFamily& f) {
  require_surjection(pi, b, c);
  FSplitReport report;
  for (std::size_t i = 0; i < f.size(); ++i) {
    FSplitEntry e{f.subgroup_id[i], split_over(pi, b, c, f.members[i])};
    report.split = report.split && e.verdict.split;
    report.entries.push_back(std::move(e));
  }
  return report;
}

SplitVerdict xsplit_check(const Matrix& pi, const GGRep& b, const GGRep& c, const std::vector<Subgroup>& x) {
  require_surjection(pi, b, c);
  const GGRep rx = gset_rep(b.group, b.p, x);
  const Matrix big = Matrix::kron(pi, Matrix::identity(rx.dim, b.p));
  return split_over(big, tensor(b, rx), tensor(c, rx), whole_group(*b.group));
}

PeriodicityReport periodicity_report(const std::vector<std::size_t>& dims, std::size_t offset) {
  if (dims.size() < 2 * (offset + 1))
    throw Error(ErrorCode::WindowTooShort, std::to_string(dims.size()) + " values cannot certify a tail past degree " +
                                               std::to_string(offset));
  PeriodicityReport rep;
  rep.dims = dims;
  rep.window = dims.size() - 1;
  rep.offset = offset;
  rep.strictly_increasing_tail = true;
  for (std::size_t i = offset; i + 1 < dims.size(); ++i)
    if (dims[i + 1] <= dims[i]) rep.strictly_increasing_tail = false;
  for (std::size_t d = 1; d <= rep.window / 2 && !rep.period; ++d) {
    bool ok = true;
    for (std::size_t i = offset; i + d < dims.size() && ok; ++i) ok = dims[i] == dims[i + d];
    if (ok) rep.period = d;
  }
  if (rep.period)
    rep.verdict = "period " + std::to_string(*rep.period) + " (window " + std::to_string(rep.window) + ", offset " +
                  std::to_string(offset) + ")";
  else
    rep.verdict = "none detected (window " + std::to_string(rep.window) + ", offset " + std::to_string(offset) + ")";
  return rep;
}

}  // namespace orbicoh
