#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "orbicoh/spectral.hpp"

using namespace orbicoh;

namespace {

GroupPtr group(const char* name) { return std::make_shared<const FiniteGroup>(builtin_group(name)); }

std::vector<std::uint32_t> elements(const FiniteGroup& g) {
  std::vector<std::uint32_t> out;
  for (Elem x = 0; x < g.order(); ++x) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("klein-four E2 page") {
  const GroupPtr k = group("klein4");
  const CatPtr cat = orbit_category(k, "cyclic");
  const E2Page page = e2_page(cat, trivial_rep(k, 2), 6, 6);
  for (std::size_t p = 0; p <= 6; ++p)
    for (std::size_t q = 1; q <= 6; ++q) CHECK(page.dims[p][q] == 3);
  const std::vector<std::size_t> row{1, 0, 1, 3, 5, 7, 9};
  for (std::size_t p = 0; p <= 6; ++p) CHECK(page.dims[p][0] == row[p]);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(page.target_dims[n] == n + 1);

  CHECK(page.horizontal_rank[0] == 1);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(page.horizontal_rank[n] == 0);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(page.relative_essential[n] == 0);
    CHECK(page.subquotient[n].ok());
    if (n > 0) CHECK(page.edge_composite_rank[n] == 0);
  }
  CHECK(page.vertical_edge[0].is_identity());
  CHECK(rank(page.vertical_edge[1]) == 2);
  CHECK(page.vertical_kernel[1] == 0);
  CHECK(rank(page.vertical_edge[3]) == 3);
  CHECK(page.vertical_kernel[3] == 1);
  CHECK(std::string(kE2Banner) == "E2 + edges only; differentials not computed");
}

TEST_CASE("all subgroups: the columns collapse") {
  for (const char* name : {"klein4", "symmetric:3"}) {
    const GroupPtr g = group(name);
    const CatPtr cat = orbit_category(g, "all");
    const E2Page page = e2_page(cat, trivial_rep(g, 2), 3, 3);
    for (std::size_t q = 0; q <= 3; ++q) {
      CHECK(page.dims[0][q] == page.target_dims[q]);
      for (std::size_t p = 1; p <= 3; ++p) CHECK(page.dims[p][q] == 0);
      CHECK(page.vertical_kernel[q] == 0);
      CHECK(rank(page.vertical_edge[q]) == page.target_dims[q]);
    }
  }
}

TEST_CASE("horizontal edge in degree zero") {
  for (const char* name : {"klein4", "cyclic:4", "symmetric:3"}) {
    const GroupPtr g = group(name);
    const auto h = horizontal_edge(orbit_category(g, "cyclic"), trivial_rep(g, 2), 2);
    CHECK(h[0].is_identity());
  }
}

TEST_CASE("essential cohomology against restriction of bar cochains") {
  const GroupPtr k = group("klein4");
  CHECK(essential_dims(k, trivial_rep(k, 2), 3) == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(relative_essential_dims(k, trivial_rep(k, 2), 6) == std::vector<std::size_t>(7, 0));

  struct Case {
    const char* group;
    std::uint32_t p;
    std::size_t top;
  };
  for (const Case& c : {Case{"klein4", 2, 3}, Case{"cyclic:4", 2, 3}, Case{"symmetric:3", 2, 2},
                        Case{"symmetric:3", 3, 3}, Case{"dihedral:4", 2, 2}}) {
    INFO(c.group << " p=" << c.p);
    const GroupPtr g = group(c.group);
    const auto ess = essential_dims(g, trivial_rep(g, c.p), c.top);
    CHECK(ess[0] == 0);
    std::vector<std::vector<std::uint32_t>> proper;
    for (const auto& h : all_subgroups(*g))
      if (h.size() < g->order()) proper.push_back(h.elements);
    oracle::Rep triv;
    triv.rho.assign(g->order(), oracle::Mat{{1}});
    for (std::size_t n = 1; n <= c.top; ++n) {
      INFO("degree " << n);
      CHECK(ess[n] == oracle::restriction_kernel_dim(*g, triv, c.p, n, proper));
    }
  }
}

TEST_CASE("subquotient bound on other pages") {
  for (const char* name : {"symmetric:3", "cyclic:4", "dihedral:4"}) {
    const GroupPtr g = group(name);
    const E2Page page = e2_page(orbit_category(g, "cyclic"), trivial_rep(g, 2), 3, 3);
    for (const auto& s : page.subquotient) CHECK(s.ok());
  }
}
