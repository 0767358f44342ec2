#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbicoh/group.hpp"

namespace orbicoh {

/// The G-map G/H -> G/K, xH |-> x rep K.  `rep` is the least element of
/// the coset rep K and satisfies rep^-1 H rep <= K.
struct Morphism {
  std::size_t source = 0;
  std::size_t target = 0;
  Elem rep = 0;
};

class OrbitCategory;
using CatPtr = std::shared_ptr<const OrbitCategory>;

/// Or_F(G).  Morphisms carry dense global ids, enumerated by (source, target)
/// and then by increasing rep, so the identity of every object is the first
/// entry of its endomorphism set.
class OrbitCategory {
 public:
  /// With `skeleton` set, only the first member of each conjugacy class
  /// becomes an object.
  static CatPtr build(GroupPtr group, SubgroupFamily family, bool skeleton = false);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const SubgroupFamily& family() const noexcept { return family_; }
  bool skeletal() const noexcept { return skeleton_; }

  std::size_t num_objects() const noexcept { return objects_.size(); }
  const Subgroup& object(std::size_t i) const { return objects_[i]; }
  std::optional<std::size_t> object_of(const Subgroup& h) const;

  std::size_t num_morphisms() const noexcept { return morphisms_.size(); }
  const Morphism& morphism(std::size_t id) const { return morphisms_[id]; }
  std::span<const std::size_t> hom(std::size_t h, std::size_t k) const { return hom_[h * objects_.size() + k]; }
  /// Morphisms with the given source, any target.
  std::span<const std::size_t> out(std::size_t h) const { return out_[h]; }
  /// Position of a morphism inside hom(source, target).
  std::size_t local_index(std::size_t id) const { return local_[id]; }
  std::size_t identity(std::size_t h) const { return hom(h, h).front(); }

  /// g o f for f: H -> K and g: K -> L.
  std::size_t compose(std::size_t f, std::size_t g) const { return comp_[f][out_pos_[g]]; }

  /// Morphism H -> K whose coset contains x, if x^-1 H x <= K.
  std::optional<std::size_t> find(std::size_t h, std::size_t k, Elem x) const;
  Elem coset_min(std::size_t k, Elem x) const { return coset_min_[k][x]; }

  /// Replaces one composition entry; used to build broken fixtures.
  void override_composition(std::size_t f, std::size_t g, std::size_t result) { comp_[f][out_pos_[g]] = result; }

 private:
  GroupPtr group_;
  SubgroupFamily family_;
  bool skeleton_ = false;
  std::vector<Subgroup> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<std::size_t>> hom_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> out_pos_;
  std::vector<std::size_t> local_;
  std::vector<std::vector<std::size_t>> comp_;
  std::vector<std::vector<Elem>> coset_min_;
};

/// Convenience: Or_F(G) for a family spec string.
CatPtr orbit_category(GroupPtr group, const std::string& family_spec, bool skeleton = false);

/// Or_{1}(G): one object, morphism id = element index.
CatPtr one_object_category(GroupPtr group);

/// Exhaustive check of identities, associativity, the fixed-point count of
/// every morphism set and the EI property.  Returns the first failure.
std::optional<std::string> check_category(const OrbitCategory& c);

/// Number of H-fixed points of G/K, counted by direct action enumeration.
std::size_t fixed_point_count(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

}  // namespace orbicoh
