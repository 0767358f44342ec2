#include "orbicoh/orbit_category.hpp"

#include <algorithm>
#include <random>

#include "orbicoh/error.hpp"

namespace orbicoh {

CatPtr OrbitCategory::build(GroupPtr group, SubgroupFamily family, bool skeleton) {
  const FiniteGroup& g = *group;
  if (auto bad = check_family(g, family)) throw Error(ErrorCode::FamilyInvalid, *bad);

  auto cat = std::make_shared<OrbitCategory>();
  cat->group_ = group;
  cat->skeleton_ = skeleton;
  std::vector<std::uint32_t> seen_class;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (skeleton) {
      if (std::find(seen_class.begin(), seen_class.end(), family.class_id[i]) != seen_class.end()) continue;
      seen_class.push_back(family.class_id[i]);
    }
    cat->objects_.push_back(family.members[i]);
  }
  cat->family_ = std::move(family);

  const std::size_t n = cat->objects_.size();
  cat->coset_min_.assign(n, std::vector<Elem>(g.order()));
  for (std::size_t k = 0; k < n; ++k)
    for (Elem x = 0; x < g.order(); ++x) {
      Elem m = x;
      for (Elem y : cat->objects_[k].elements) m = std::min(m, g.mul(x, y));
      cat->coset_min_[k][x] = m;
    }

  std::vector<std::vector<Elem>> gens(n);
  for (std::size_t h = 0; h < n; ++h) gens[h] = subgroup_generators(g, cat->objects_[h]);

  cat->hom_.assign(n * n, {});
  cat->out_.assign(n, {});
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) {
      const Subgroup& kk = cat->objects_[k];
      if (cat->objects_[h].size() > kk.size() || kk.size() % cat->objects_[h].size() != 0) continue;
      for (Elem x = 0; x < g.order(); ++x) {
        if (cat->coset_min_[k][x] != x) continue;
        const bool maps = std::all_of(gens[h].begin(), gens[h].end(), [&](Elem y) { return kk.contains(g.conj(x, y)); });
        if (!maps) continue;
        const std::size_t id = cat->morphisms_.size();
        cat->morphisms_.push_back({h, k, x});
        cat->local_.push_back(cat->hom_[h * n + k].size());
        cat->hom_[h * n + k].push_back(id);
        cat->out_pos_.push_back(cat->out_[h].size());
        cat->out_[h].push_back(id);
      }
    }

  cat->comp_.resize(cat->morphisms_.size());
  for (std::size_t f = 0; f < cat->morphisms_.size(); ++f) {
    const Morphism& mf = cat->morphisms_[f];
    auto& row = cat->comp_[f];
    row.reserve(cat->out_[mf.target].size());
    for (std::size_t gid : cat->out_[mf.target]) {
      const Morphism& mg = cat->morphisms_[gid];
      const Elem rep = cat->coset_min_[mg.target][g.mul(mf.rep, mg.rep)];
      auto found = cat->find(mf.source, mg.target, rep);
      if (!found) throw Error(ErrorCode::InternalError, "composite of G-maps is not a G-map");
      row.push_back(*found);
    }
  }
  return cat;
}

std::optional<std::size_t> OrbitCategory::object_of(const Subgroup& h) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), h);
  if (it == objects_.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> OrbitCategory::find(std::size_t h, std::size_t k, Elem x) const {
  const Elem rep = coset_min_[k][x];
  auto ids = hom(h, k);
  auto it = std::lower_bound(ids.begin(), ids.end(), rep,
                             [&](std::size_t id, Elem r) { return morphisms_[id].rep < r; });
  if (it == ids.end() || morphisms_[*it].rep != rep) return std::nullopt;
  return *it;
}

CatPtr orbit_category(GroupPtr group, const std::string& family_spec, bool skeleton) {
  SubgroupFamily f = make_family(*group, family_spec);
  return OrbitCategory::build(std::move(group), std::move(f), skeleton);
}

CatPtr one_object_category(GroupPtr group) {
  const Subgroup one = trivial_subgroup();
  return OrbitCategory::build(group, family_closure(*group, std::span<const Subgroup>(&one, 1)));
}

std::size_t fixed_point_count(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<char> done(g.order(), 0);
  std::size_t count = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    for (Elem y : k.elements) done[g.mul(x, y)] = 1;
    // xK is fixed by H iff h x K = x K for every h in H
    bool fixed = true;
    for (Elem y : h.elements) {
      const Elem hx = g.mul(y, x);
      bool same = false;
      for (Elem z : k.elements)
        if (g.mul(x, z) == hx) {
          same = true;
          break;
        }
      if (!same) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

std::optional<std::string> check_category(const OrbitCategory& c) {
  const std::size_t n = c.num_objects();
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t expect = fixed_point_count(c.group(), c.object(h), c.object(k));
      if (c.hom(h, k).size() != expect)
        return "|mor(" + std::to_string(h) + ", " + std::to_string(k) + ")| = " + std::to_string(c.hom(h, k).size()) +
               ", fixed points = " + std::to_string(expect);
    }
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& m = c.morphism(f);
    if (c.compose(c.identity(m.source), f) != f || c.compose(f, c.identity(m.target)) != f)
      return "identity law fails at morphism " + std::to_string(f);
  }
  for (std::size_t h = 0; h < n; ++h) {
    const std::size_t id = c.identity(h);
    for (std::size_t f : c.hom(h, h)) {
      bool invertible = false;
      for (std::size_t g : c.hom(h, h))
        if (c.compose(f, g) == id && c.compose(g, f) == id) invertible = true;
      if (!invertible) return "endomorphism " + std::to_string(f) + " is not invertible";
    }
  }

  auto check_triple = [&](std::size_t f, std::size_t g, std::size_t k) -> std::optional<std::string> {
    if (c.compose(c.compose(f, g), k) != c.compose(f, c.compose(g, k)))
      return "associativity fails at (" + std::to_string(f) + ", " + std::to_string(g) + ", " + std::to_string(k) + ")";
    return std::nullopt;
  };
  std::size_t triples = 0;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f)
    for (std::size_t g : c.out(c.morphism(f).target)) triples += c.out(c.morphism(g).target).size();
  constexpr std::size_t kExhaustive = 4'000'000;
  if (triples <= kExhaustive) {
    for (std::size_t f = 0; f < c.num_morphisms(); ++f)
      for (std::size_t g : c.out(c.morphism(f).target))
        for (std::size_t k : c.out(c.morphism(g).target))
          if (auto bad = check_triple(f, g, k)) return bad;
  } else {
    std::mt19937_64 rng(0x5EED);
    for (std::size_t s = 0; s < kExhaustive; ++s) {
      const std::size_t f = rng() % c.num_morphisms();
      auto go = c.out(c.morphism(f).target);
      const std::size_t g = go[rng() % go.size()];
      auto ko = c.out(c.morphism(g).target);
      if (auto bad = check_triple(f, g, ko[rng() % ko.size()])) return bad;
    }
  }
  return std::nullopt;
}

}  // namespace orbicoh
