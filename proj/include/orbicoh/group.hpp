#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbicoh {

using Elem = std::uint32_t;

/// Closure enumeration refuses groups larger than this unless told otherwise.
inline constexpr std::size_t kDefaultGroupCap = 5040;

/// A finite group on the dense element set 0..n-1 with identity 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return cayley_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(inv(g), x), g); }  // g^-1 x g
  std::uint32_t element_order(Elem a) const noexcept { return element_orders_[a]; }
  std::span<const Elem> cayley() const noexcept { return cayley_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// A small generating set, chosen greedily in element order.
  std::vector<Elem> generators() const;

  friend FiniteGroup group_from_cayley(const std::vector<std::vector<long long>>& table);

 private:
  std::size_t order_ = 0;
  std::vector<Elem> cayley_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> element_orders_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates a Cayley table (shape, identity, inverses, associativity) and
/// relabels so the identity is element 0.  Throws MalformedTable,
/// NoIdentity, NoInverse or NotAssociative naming the first violation.
FiniteGroup group_from_cayley(const std::vector<std::vector<long long>>& table);

/// Closes permutation generators (image tables on 0..m-1) under composition.
/// The product a*b is "apply b, then a".  Element 0 is the identity and the
/// remaining elements appear in breadth-first discovery order.
FiniteGroup group_from_permutations(const std::vector<std::vector<long long>>& generators,
                                    std::size_t cap = kDefaultGroupCap);

/// trivial, cyclic:n, klein4, elem_abelian:p:k, dihedral:n, quaternion8,
/// symmetric:n (n <= 4).
FiniteGroup builtin_group(const std::string& name);

/// Strictly sorted element list; equality is sequence equality.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem x) const;
  bool is_subgroup_of(const Subgroup& other) const;
  auto operator<=>(const Subgroup& other) const {
    if (auto c = elements.size() <=> other.elements.size(); c != 0) return c;
    return elements <=> other.elements;
  }
  bool operator==(const Subgroup&) const = default;
};

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& g);
Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem x);  // x^-1 H x
bool is_normal(const FiniteGroup& g, const Subgroup& h);
std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& h);

/// Every subgroup exactly once, sorted by size then lexicographically.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Maximal k with an elementary abelian subgroup of order p^k inside h,
/// maximised over primes p.
std::uint32_t subgroup_rank(const FiniteGroup& g, const Subgroup& h);

/// A set of subgroups closed under conjugation and taking subgroups.
struct SubgroupFamily {
  std::vector<Subgroup> members;       // canonical order
  std::vector<std::uint32_t> class_id;  // conjugacy class per member, numbered by first appearance
  std::vector<std::uint32_t> subgroup_id;  // position in all_subgroups(G), the "S<k>" id

  std::size_t size() const noexcept { return members.size(); }
  std::optional<std::size_t> index_of(const Subgroup& h) const;
  bool contains(const Subgroup& h) const { return index_of(h).has_value(); }
};

/// Smallest family containing the seeds.
SubgroupFamily family_closure(const FiniteGroup& g, std::span<const Subgroup> seeds);

/// cyclic, all_proper, all, rank_at_most:k, list:S1,S3,...
SubgroupFamily make_family(const FiniteGroup& g, const std::string& spec);

/// Parses "S<k>" into the k-th entry of all_subgroups(G).
Subgroup subgroup_by_id(const FiniteGroup& g, const std::string& id);

/// Returns a description of the first violated family invariant, if any.
std::optional<std::string> check_family(const FiniteGroup& g, const SubgroupFamily& f);

/// H as an abstract group: local element i is H.elements[i].
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;  // local -> ambient
  std::vector<std::int64_t> local_index;  // ambient -> local, -1 outside H
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// G/N with cosets ordered by their minimal element.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<Elem> projection;  // ambient -> coset index
};
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n);

}  // namespace orbicoh
