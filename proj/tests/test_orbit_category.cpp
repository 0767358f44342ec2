#include <doctest.h>

#include "oracles.hpp"
#include "orbicoh/io.hpp"
#include "orbicoh/orbit_category.hpp"

using namespace orbicoh;

namespace {

CatPtr cat_of(const char* group, const char* family, bool skeleton = false) {
  return orbit_category(std::make_shared<const FiniteGroup>(builtin_group(group)), family, skeleton);
}

}  // namespace

TEST_CASE("klein-four census") {
  const CatPtr c = cat_of("klein4", "cyclic");
  REQUIRE(c->num_objects() == 4);
  CHECK(c->hom(0, 0).size() == 4);
  CHECK(c->hom(1, 1).size() == 2);
  CHECK(c->hom(1, 2).size() == 0);
  CHECK(c->hom(0, 1).size() == 2);
  CHECK(c->hom(1, 0).size() == 0);
  CHECK(c->num_morphisms() == 16);
  CHECK_FALSE(check_category(*c).has_value());
}

TEST_CASE("morphism sets match coset enumeration") {
  for (auto [group, family] : {std::pair{"klein4", "all"}, {"symmetric:3", "all"}, {"dihedral:4", "cyclic"},
                               {"quaternion8", "all"}, {"cyclic:6", "all"}, {"symmetric:4", "cyclic"}}) {
    const CatPtr c = cat_of(group, family);
    std::size_t total = 0;
    for (std::size_t h = 0; h < c->num_objects(); ++h)
      for (std::size_t k = 0; k < c->num_objects(); ++k) {
        const std::size_t expect = oracle::morphism_count(c->group(), c->object(h).elements, c->object(k).elements);
        CHECK(c->hom(h, k).size() == expect);
        CHECK(fixed_point_count(c->group(), c->object(h), c->object(k)) == expect);
        total += expect;
      }
    CHECK(c->num_morphisms() == total);
    CHECK_FALSE(check_category(*c).has_value());
  }
}

TEST_CASE("representatives are coset minima and compose as maps") {
  const CatPtr c = cat_of("symmetric:3", "all");
  const FiniteGroup& g = c->group();
  for (std::size_t f = 0; f < c->num_morphisms(); ++f) {
    const Morphism& m = c->morphism(f);
    for (Elem k : c->object(m.target).elements) CHECK(m.rep <= g.mul(m.rep, k));
    for (std::size_t h : c->out(m.target)) {
      const Morphism& n = c->morphism(h);
      // xH -> x a K -> x a b L
      const Morphism& gf = c->morphism(c->compose(f, h));
      CHECK(gf.source == m.source);
      CHECK(gf.target == n.target);
      CHECK(gf.rep == c->coset_min(n.target, g.mul(m.rep, n.rep)));
    }
  }
}

TEST_CASE("identities come first and endomorphisms are invertible") {
  const CatPtr c = cat_of("dihedral:4", "all");
  for (std::size_t h = 0; h < c->num_objects(); ++h) {
    CHECK(c->morphism(c->identity(h)).rep == 0);
    // Weyl group order |N(H)/H|
    std::size_t normalizer = 0;
    for (Elem x = 0; x < c->group().order(); ++x) normalizer += conjugate(c->group(), c->object(h), x) == c->object(h);
    CHECK(c->hom(h, h).size() * c->object(h).size() == normalizer);
  }
}

TEST_CASE("a corrupted composition entry is reported") {
  const CatPtr good = cat_of("klein4", "cyclic");
  auto bad = std::make_shared<OrbitCategory>(*good);
  const std::size_t f = bad->hom(0, 1)[0];
  const std::size_t g = bad->hom(1, 1)[1];
  const std::size_t other = bad->compose(f, g) == bad->hom(0, 1)[0] ? bad->hom(0, 1)[1] : bad->hom(0, 1)[0];
  bad->override_composition(f, g, other);
  const auto report = check_category(*bad);
  REQUIRE(report.has_value());
  CHECK(report->find("associativity") != std::string::npos);
}

TEST_CASE("skeletal categories keep one object per class") {
  const CatPtr full = cat_of("symmetric:3", "all");
  const CatPtr skel = cat_of("symmetric:3", "all", true);
  CHECK(full->num_objects() == 6);
  CHECK(skel->num_objects() == 4);
  CHECK_FALSE(check_category(*skel).has_value());
}

TEST_CASE("one-object category is the group") {
  auto g = std::make_shared<const FiniteGroup>(builtin_group("symmetric:3"));
  const CatPtr c = one_object_category(g);
  REQUIRE(c->num_morphisms() == 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) CHECK(c->compose(a, b) == g->mul(a, b));
}

TEST_CASE("census dump") {
  const Json j = category_to_json(*cat_of("klein4", "cyclic"), true);
  CHECK(j["morphisms"] == 16);
  CHECK(j["objects"].size() == 4);
  CHECK(j["objects"][1]["id"] == "S1");
  CHECK(j["census"][0] == Json::array({4, 2, 2, 2}));
  CHECK(j.contains("composition"));
}
