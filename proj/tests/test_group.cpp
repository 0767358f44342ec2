#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/group.hpp"

using namespace orbicoh;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalError;
}

std::set<std::vector<std::uint32_t>> as_set(const std::vector<Subgroup>& v) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& h : v) out.insert(h.elements);
  return out;
}

// i and j of Q8 acting on itself by left multiplication, elements
// 1, i, -1, -i, j, k, -j, -k numbered 0..7.
const std::vector<std::vector<long long>> kQ8Generators = {
    {1, 2, 3, 0, 5, 6, 7, 4},
    {4, 7, 6, 5, 2, 1, 0, 3},
};

}  // namespace

TEST_CASE("cayley tables") {
  const FiniteGroup t = group_from_cayley({{0}});
  CHECK(t.order() == 1);

  const FiniteGroup k = group_from_cayley({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(k.order() == 4);
  for (Elem x = 1; x < 4; ++x) CHECK(k.element_order(x) == 2);

  // identity at index 2 gets relabeled to 0
  const FiniteGroup c = group_from_cayley({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
  CHECK(c.identity() == 0);
  CHECK(c.mul(0, 1) == 1);

  CHECK(code_of([] { group_from_cayley({{0, 1}, {1}}); }) == ErrorCode::MalformedTable);
  CHECK(code_of([] { group_from_cayley({{1, 1}, {1, 1}}); }) == ErrorCode::NoIdentity);
  CHECK(code_of([] { group_from_cayley({{0, 1}, {1, 1}}); }) == ErrorCode::NoInverse);
  CHECK(code_of([] { group_from_cayley({{0, 1}, {1, 2}}); }) == ErrorCode::MalformedTable);
  // latin square with identity and inverses that is not associative
  CHECK(code_of([] {
          group_from_cayley({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
        }) == ErrorCode::NotAssociative);
}

TEST_CASE("permutation closure") {
  CHECK(group_from_permutations({{1, 0}}).order() == 2);
  const FiniteGroup v = group_from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}});
  CHECK(v.order() == 4);
  for (Elem x = 1; x < 4; ++x) CHECK(v.element_order(x) == 2);

  const FiniteGroup q = group_from_permutations(kQ8Generators);
  REQUIRE(q.order() == 8);
  // element-order census from the Cayley table by repeated multiplication
  std::size_t involutions = 0;
  for (Elem x = 0; x < 8; ++x) {
    Elem y = x;
    std::size_t n = 1;
    while (y != 0) {
      y = q.mul(y, x);
      ++n;
    }
    if (n == 2) ++involutions;
  }
  CHECK(involutions == 1);

  CHECK(code_of([] { group_from_permutations({{0, 0}}); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([] { group_from_permutations({{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, 100); }) ==
        ErrorCode::GroupTooLarge);
}

TEST_CASE("builtin groups") {
  const FiniteGroup k = builtin_group("klein4");
  CHECK(k.order() == 4);
  std::size_t order_two = 0;
  for (const auto& h : all_subgroups(k)) order_two += h.size() == 2;
  CHECK(order_two == 3);
  CHECK(builtin_group("cyclic:1").order() == 1);
  CHECK(builtin_group("symmetric:4").order() == 24);
  CHECK(builtin_group("dihedral:4").order() == 8);
  CHECK(builtin_group("elem_abelian:3:2").order() == 9);
  CHECK(code_of([] { builtin_group("monster"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { builtin_group("symmetric:5"); }) == ErrorCode::UnknownName);

  const FiniteGroup q = builtin_group("quaternion8");
  CHECK(all_subgroups(q).size() == 6);
  CHECK(as_set(all_subgroups(q)) == oracle::subgroups_by_subsets(q));
}

TEST_CASE("subgroup lattices match subset enumeration") {
  for (const char* name : {"klein4", "cyclic:4", "symmetric:3", "dihedral:4", "quaternion8", "cyclic:6"}) {
    const FiniteGroup g = builtin_group(name);
    const auto subs = all_subgroups(g);
    CHECK(as_set(subs) == oracle::subgroups_by_subsets(g));
    CHECK(std::is_sorted(subs.begin(), subs.end()));
  }
  CHECK(all_subgroups(builtin_group("klein4")).size() == 5);
  CHECK(all_subgroups(builtin_group("cyclic:4")).size() == 3);
}

TEST_CASE("families") {
  const FiniteGroup k = builtin_group("klein4");
  const auto cyc = make_family(k, "cyclic");
  CHECK(cyc.size() == 4);
  CHECK_FALSE(cyc.contains(whole_group(k)));
  CHECK(make_family(builtin_group("trivial"), "all").size() == 1);

  const FiniteGroup q = builtin_group("quaternion8");
  const auto qc = make_family(q, "cyclic");
  CHECK(qc.size() == 5);
  std::size_t order4 = 0;
  for (const auto& h : qc.members) order4 += h.size() == 4;
  CHECK(order4 == 3);

  CHECK(make_family(k, "rank_at_most:1").size() == 4);
  CHECK(make_family(k, "rank_at_most:2").size() == 5);
  CHECK(make_family(q, "rank_at_most:1").size() == 6);
  CHECK(code_of([&] { make_family(k, "list:S9"); }) == ErrorCode::UnknownSubgroupId);
  CHECK(code_of([&] { make_family(k, "nonsense"); }) == ErrorCode::UnknownName);

  for (const char* name : {"klein4", "symmetric:3", "dihedral:4", "quaternion8"}) {
    const FiniteGroup g = builtin_group(name);
    auto proper = make_family(g, "all_proper").members;
    proper.push_back(whole_group(g));
    CHECK(as_set(proper) == as_set(all_subgroups(g)));
    for (const char* spec : {"cyclic", "all_proper", "all", "rank_at_most:1"}) {
      const auto f = make_family(g, spec);
      CHECK_FALSE(check_family(g, f).has_value());
      CHECK(family_closure(g, f.members).members == f.members);
    }
  }
}

TEST_CASE("family closure") {
  const FiniteGroup k = builtin_group("klein4");
  const auto subs = all_subgroups(k);
  CHECK(family_closure(k, std::vector<Subgroup>{subs[1]}).size() == 2);
  CHECK(family_closure(k, std::vector<Subgroup>{whole_group(k)}).size() == 5);

  const FiniteGroup s3 = builtin_group("symmetric:3");
  for (const auto& h : all_subgroups(s3))
    if (h.size() == 2) {
      const auto f = family_closure(s3, std::vector<Subgroup>{h});
      CHECK(f.size() == 4);
      // conjugacy classes: trivial, the transpositions
      CHECK(*std::max_element(f.class_id.begin(), f.class_id.end()) == 1);
    }
}

TEST_CASE("subgroup rank uses elementary abelian subgroups") {
  const FiniteGroup d = builtin_group("dihedral:4");
  CHECK(subgroup_rank(d, whole_group(d)) == 2);
  const FiniteGroup q = builtin_group("quaternion8");
  CHECK(subgroup_rank(q, whole_group(q)) == 1);
  const FiniteGroup c = builtin_group("cyclic:6");
  CHECK(subgroup_rank(c, whole_group(c)) == 1);
}

TEST_CASE("quotients and normality") {
  const FiniteGroup s3 = builtin_group("symmetric:3");
  for (const auto& h : all_subgroups(s3)) {
    CHECK(is_normal(s3, h) == (h.size() != 2));
    if (is_normal(s3, h)) CHECK(quotient_group(s3, h).group.order() == 6 / h.size());
  }
}
