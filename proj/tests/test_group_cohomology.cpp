#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/group_cohomology.hpp"

using namespace orbicoh;

namespace {

GroupPtr group(const char* name) { return std::make_shared<const FiniteGroup>(builtin_group(name)); }

oracle::Rep to_oracle(const GGRep& m) {
  oracle::Rep r;
  r.dim = m.dim;
  for (const auto& mat : m.rho) {
    oracle::Mat rows(mat.rows(), oracle::Row(mat.cols()));
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j) rows[i][j] = mat(i, j);
    r.rho.push_back(rows);
  }
  return r;
}

std::vector<std::uint32_t> elements(const FiniteGroup& g) {
  std::vector<std::uint32_t> out;
  for (Elem x = 0; x < g.order(); ++x) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("group cohomology dimensions") {
  const GroupPtr k = group("klein4");
  const auto subs = all_subgroups(*k);
  CHECK(group_cohomology_dims(subs[1], trivial_rep(k, 2), 6) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1});
  CHECK(group_cohomology_dims(whole_group(*k), trivial_rep(k, 2), 6) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(group_cohomology_dims(trivial_subgroup(), regular_rep(k, 2), 3) == std::vector<std::size_t>{4, 0, 0, 0});
  CHECK(group_cohomology_dims(whole_group(*k), trivial_rep(k, 3), 3) == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("agreement with the bar complex through degree 3") {
  struct Case {
    const char* group;
    std::uint32_t p;
    bool regular;
    std::size_t top;
  };
  for (const Case& c : {Case{"klein4", 2, false, 3}, Case{"klein4", 2, true, 2}, Case{"cyclic:4", 2, false, 3},
                        Case{"symmetric:3", 3, false, 3}, Case{"symmetric:3", 2, false, 3},
                        Case{"cyclic:3", 3, false, 3}, Case{"quaternion8", 2, false, 2}}) {
    const GroupPtr g = group(c.group);
    const GGRep m = c.regular ? regular_rep(g, c.p) : trivial_rep(g, c.p);
    const auto dims = group_cohomology_dims(whole_group(*g), m, c.top);
    const oracle::Bar bar{*g, elements(*g), to_oracle(m), c.p};
    for (std::size_t n = 0; n <= c.top; ++n) {
      INFO(c.group << " p=" << c.p << " degree " << n);
      CHECK(dims[n] == bar.cohomology_dim(n));
    }
  }
}

TEST_CASE("cohomology functors") {
  const GroupPtr k = group("klein4");
  const CatPtr cat = orbit_category(k, "cyclic");
  const GGRep triv = trivial_rep(k, 2);
  CHECK(*cohomology_functor(cat, triv, 0) == *fixed_point_module(cat, triv));
  CHECK(cohomology_functor(cat, regular_rep(k, 2), 0)->dim == fixed_point_module(cat, regular_rep(k, 2))->dim);

  for (std::size_t q = 1; q <= 4; ++q) {
    const ModulePtr h = cohomology_functor(cat, triv, q);
    CHECK(h->dim == std::vector<std::size_t>{0, 1, 1, 1});
    for (std::size_t f = 0; f < cat->num_morphisms(); ++f)
      if (cat->morphism(f).source != cat->morphism(f).target) CHECK(h->act[f].is_zero());
    CHECK_FALSE(check_functoriality(*h).has_value());
  }

  const GroupPtr s3 = group("symmetric:3");
  for (std::uint32_t p : {2u, 3u}) {
    const CatPtr c = orbit_category(s3, "all");
    GroupCohomologyEngine engine(regular_rep(s3, p), 3);
    for (std::size_t q = 0; q <= 3; ++q) {
      const ModulePtr h = cohomology_functor(c, engine, q);
      CHECK_FALSE(check_functoriality(*h).has_value());
      if (q > 0) CHECK(h->dim[0] == 0);
    }
  }
}

TEST_CASE("inner automorphisms act trivially") {
  const GroupPtr d = group("dihedral:4");
  GroupCohomologyEngine engine(trivial_rep(d, 2), 3);
  for (const auto& h : all_subgroups(*d))
    for (Elem x : h.elements)
      for (std::size_t q = 0; q <= 3; ++q) CHECK(engine.map(h, h, x, q).is_identity());
}

TEST_CASE("inflation") {
  const GroupPtr k = group("klein4");
  const auto subs = all_subgroups(*k);

  auto quotient = [&](const Subgroup& n) {
    return std::make_shared<const FiniteGroup>(quotient_group(*k, n).group);
  };
  const auto top = inflation_map(k, whole_group(*k), trivial_rep(quotient(whole_group(*k)), 2), 3);
  CHECK(top[0].is_identity());
  for (std::size_t q = 1; q <= 3; ++q) CHECK(top[q].cols() == 0);

  for (std::size_t i = 1; i <= 3; ++i) {
    const auto inf = inflation_map(k, subs[i], trivial_rep(quotient(subs[i]), 2), 6);
    for (std::size_t q = 0; q <= 6; ++q) CHECK(rank(inf[q]) == 1);
  }

  const GroupPtr s3 = group("symmetric:3");
  for (const auto& h : all_subgroups(*s3))
    if (h.size() == 2) {
      try {
        inflation_map(s3, h, trivial_rep(s3, 2), 1);
        FAIL("accepted a non-normal subgroup");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNormal);
      }
    }
}

TEST_CASE("hull strategy does not change group cohomology") {
  const GroupPtr g = group("dihedral:4");
  const auto minimized = group_cohomology_dims(whole_group(*g), trivial_rep(g, 2), 4);
  ResolveOptions full;
  full.strategy = HullStrategy::FullBasis;
  const auto f = group_cohomology_dims(whole_group(*g), trivial_rep(g, 2), 2, full);
  CHECK(std::equal(f.begin(), f.end(), minimized.begin()));
  ResolveOptions hybrid;
  hybrid.full_basis_depth = 2;
  CHECK(group_cohomology_dims(whole_group(*g), trivial_rep(g, 2), 4, hybrid) == minimized);
}
