#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/homalg.hpp"
#include "orbicoh/random_objects.hpp"

using namespace orbicoh;

namespace {

struct Fixture {
  GroupPtr g = std::make_shared<const FiniteGroup>(builtin_group("klein4"));
  CatPtr cat = orbit_category(g, "cyclic");
  ModulePtr rbar = constant_module(cat, 2);
};

std::size_t oracle_rank(const Matrix& m) {
  oracle::Mat rows(m.rows(), oracle::Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return oracle::rank(rows, m.prime());
}

// Exactness by rank counting: at every object, rank d_k + rank d_{k+1} = dim C_k,
// with d_0 the augmentation.
void check_exact(const Resolution& res) {
  const auto& c = res.complex;
  const std::size_t objects = c.target->dim.size();
  for (std::size_t x = 0; x < objects; ++x) {
    CHECK(oracle_rank(c.augmentation.comp[x]) == c.target->dim[x]);
    for (std::size_t k = 0; k + 1 < c.terms.size(); ++k) {
      const std::size_t in = oracle_rank(c.boundaries[k].comp[x]);
      const std::size_t out = k == 0 ? oracle_rank(c.augmentation.comp[x]) : oracle_rank(c.boundaries[k - 1].comp[x]);
      CHECK(in + out == c.terms[k]->dim[x]);
    }
  }
}

}  // namespace

TEST_CASE("free hull of the constant module") {
  Fixture f;
  const FreeHull h = free_hull(f.rbar);
  CHECK(h.free.decl.objects == std::vector<std::size_t>{1, 2, 3});
  CHECK(h.free.module->dim == std::vector<std::size_t>{6, 2, 2, 2});
  CHECK_FALSE(check_hom(h.epi).has_value());

  // no free module with two generators maps onto R
  const std::size_t n = f.cat->num_objects();
  bool found = false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const FreeModule fm = realize_free(f.cat, 2, FreeDecl{{a, b}});
      for (Scalar s = 0; s < 2; ++s)
        for (Scalar t = 0; t < 2; ++t) {
          const GammaHom e = hom_from_free(fm, f.rbar, {Matrix::from_rows({{s}}, 2), Matrix::from_rows({{t}}, 2)});
          bool onto = true;
          for (std::size_t x = 0; x < n; ++x) onto = onto && oracle_rank(e.comp[x]) == f.rbar->dim[x];
          found = found || onto;
        }
    }
  CHECK_FALSE(found);
}

TEST_CASE("free hulls of frees and of R_0") {
  Fixture f;
  for (std::size_t k = 0; k < f.cat->num_objects(); ++k) {
    const FreeHull h = free_hull(free_module(f.cat, 2, k));
    CHECK(h.free.decl.objects == std::vector<std::size_t>{k});
    for (std::size_t x = 0; x < f.cat->num_objects(); ++x) CHECK(rank(h.epi.comp[x]) == h.free.module->dim[x]);
  }
  const FreeHull h0 = free_hull(interval_module(f.cat, 2, {0}));
  CHECK(h0.free.decl.objects == std::vector<std::size_t>{0});
  CHECK(h0.free.module->dim == std::vector<std::size_t>{4, 0, 0, 0});
}

TEST_CASE("resolutions") {
  Fixture f;
  const Resolution r = resolve(f.rbar, 1);
  CHECK(r.complex.terms[0]->dim == std::vector<std::size_t>{6, 2, 2, 2});
  const auto [k, inc] = kernel_module(r.complex.augmentation);
  CHECK(k->dim == std::vector<std::size_t>{5, 1, 1, 1});
  CHECK(r.complex.terms[1]->dim == free_hull(k).free.module->dim);
  check_exact(resolve(f.rbar, 6));

  const Resolution z = resolve(zero_module(f.cat, 2), 3);
  for (const auto& t : z.complex.terms) CHECK(t->total_dim() == 0);
  const Resolution p = resolve(free_module(f.cat, 2, 1), 3);
  CHECK(p.free[0].decl.objects == std::vector<std::size_t>{1});
  for (std::size_t d = 1; d < p.length(); ++d) CHECK(p.complex.terms[d]->total_dim() == 0);

  Rng rng(kDefaultSeed);
  for (int t = 0; t < 6; ++t) check_exact(resolve(random_module(rng, f.cat, t % 2 ? 3 : 2), 3));
}

TEST_CASE("resource caps") {
  Fixture f;
  CHECK_THROWS_AS(resolve(f.rbar, kDegreeCap + 1), Error);
  setenv("ORBICOH_MAX_DIM", "10", 1);
  CHECK(dimension_cap() == 10);
  try {
    resolve(f.rbar, 8);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBoundExceeded);
  }
  unsetenv("ORBICOH_MAX_DIM");
  CHECK(dimension_cap() == 20000);
}

TEST_CASE("hom complexes") {
  Fixture f;
  const Resolution r = resolve(f.rbar, 4);
  const CochainComplex z = hom_complex(r, zero_module(f.cat, 2));
  for (auto d : z.dims) CHECK(d == 0);
  const CochainComplex c = hom_complex(r, f.rbar);
  CHECK(c.dims[0] == 3);
  for (std::size_t q = 0; q + 1 < c.coboundaries.size(); ++q) CHECK((c.coboundaries[q + 1] * c.coboundaries[q]).is_zero());

  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    const ModulePtr m = random_module(rng, f.cat, 2);
    const ModulePtr n = random_module(rng, f.cat, 2);
    const Resolution rm = resolve(m, 2);
    const CochainComplex h = hom_complex(rm, n);
    for (std::size_t q = 0; q < rm.length(); ++q) {
      std::size_t expect = 0;
      for (auto [obj, mult] : rm.free[q].decl.multiplicities()) expect += n->dim[obj] * mult;
      CHECK(h.dims[q] == expect);
    }
    CHECK(ext_dims(m, n, 0)[0] == hom_space(m, n).size());
  }
}

TEST_CASE("ext dimensions") {
  Fixture f;
  CHECK(ext_dims(f.rbar, f.rbar, 6) == std::vector<std::size_t>{1, 0, 1, 3, 5, 7, 9});
  CHECK(ext_dims(interval_module(f.cat, 2, {0}), f.rbar, 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(ext_dims(interval_module(f.cat, 2, {0, 1}), f.rbar, 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});

  for (std::size_t k = 0; k < f.cat->num_objects(); ++k) {
    const auto e = ext_dims(free_module(f.cat, 2, k), f.rbar, 3);
    CHECK(e[0] == 1);
    for (std::size_t q = 1; q < e.size(); ++q) CHECK(e[q] == 0);
  }
}

TEST_CASE("ext does not depend on the hull strategy or on the skeleton") {
  Fixture f;
  ResolveOptions full;
  full.strategy = HullStrategy::FullBasis;
  CHECK(ext_dims(f.rbar, f.rbar, 3, full) == ext_dims(f.rbar, f.rbar, 3));
  ResolveOptions hybrid;
  hybrid.full_basis_depth = 2;
  CHECK(ext_dims(f.rbar, f.rbar, 6, hybrid) == std::vector<std::size_t>{1, 0, 1, 3, 5, 7, 9});

  auto s3 = std::make_shared<const FiniteGroup>(builtin_group("symmetric:3"));
  for (std::uint32_t p : {2u, 3u}) {
    const CatPtr c = orbit_category(s3, "cyclic");
    const CatPtr s = orbit_category(s3, "cyclic", true);
    const GGRep reg = regular_rep(s3, p);
    CHECK(ext_dims(constant_module(c, p), fixed_point_module(c, reg), 5) ==
          ext_dims(constant_module(s, p), fixed_point_module(s, reg), 5));
  }
}

TEST_CASE("chain map lifting") {
  Fixture f;
  const Resolution r = resolve(f.rbar, 4);
  const auto id = lift_chain_map(identity_hom(f.rbar), r, r.complex, 4);
  for (std::size_t d = 0; d < id.size(); ++d)
    for (const auto& c : id[d].comp) CHECK(c.is_identity());
  const auto zero = lift_chain_map(zero_hom(f.rbar, f.rbar), r, r.complex, 4);
  for (const auto& h : zero)
    for (const auto& c : h.comp) CHECK(c.is_zero());

  for (const auto& m : induced_ext_map(identity_hom(f.rbar), f.rbar, 4)) CHECK(m.is_identity());

  // the inclusion R_0 -> R lifts to degree 8
  const ModulePtr r0 = interval_module(f.cat, 2, {0});
  GammaHom phi = zero_hom(r0, f.rbar);
  phi.comp[0] = Matrix::identity(1, 2);
  const Resolution a = resolve(r0, 8), b = resolve(f.rbar, 8);
  const auto lift = lift_chain_map(phi, a, b.complex, 8);
  CHECK(lift.size() == 9);
  for (std::size_t d = 0; d < lift.size(); ++d) {
    CHECK_FALSE(check_hom(lift[d]).has_value());
    if (d == 0) {
      const GammaHom l = compose(lift[0], b.complex.augmentation);
      const GammaHom rgt = compose(a.complex.augmentation, phi);
      CHECK(l.comp == rgt.comp);
    } else {
      const GammaHom l = compose(lift[d], b.complex.boundaries[d - 1]);
      const GammaHom rgt = compose(a.complex.boundaries[d - 1], lift[d - 1]);
      CHECK(l.comp == rgt.comp);
    }
  }
}

TEST_CASE("induced maps are contravariantly functorial") {
  Fixture f;
  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    const ModulePtr a = random_module(rng, f.cat, 2);
    const ModulePtr b = random_module(rng, f.cat, 2);
    const ModulePtr c = random_module(rng, f.cat, 2);
    const GammaHom ab = random_hom(rng, a, b);
    const GammaHom bc = random_hom(rng, b, c);
    const auto composite = induced_ext_map(compose(ab, bc), f.rbar, 2);
    const auto first = induced_ext_map(ab, f.rbar, 2);
    const auto second = induced_ext_map(bc, f.rbar, 2);
    for (std::size_t q = 0; q <= 2; ++q) CHECK(composite[q] == first[q] * second[q]);
  }
}
