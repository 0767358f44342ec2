#include "orbicoh/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "orbicoh/error.hpp"
#include "orbicoh/linalg.hpp"

namespace orbicoh {

namespace {

std::string triple(long long a, long long b, long long c) {
  std::ostringstream os;
  os << '(' << a << ", " << b << ", " << c << ')';
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::UnknownName, "bad integer '" + s + "' in '" + context + "'");
  }
}

using Table = std::vector<std::vector<long long>>;

Table table_from(std::size_t n, auto&& product) {
  Table t(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<long long>(product(a, b));
  return t;
}

}  // namespace

FiniteGroup group_from_cayley(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::MalformedTable, "empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorCode::MalformedTable, "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                                 " entries, expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] < 0 || static_cast<std::size_t>(table[a][b]) >= n)
        throw Error(ErrorCode::MalformedTable, "entry (" + std::to_string(a) + ", " + std::to_string(b) +
                                                   ") = " + std::to_string(table[a][b]) + " out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a][b]); };

  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (!e) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == *e && at(b, a) == *e;
    if (!found) throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }

  // Light's test over a greedily chosen generating set of the magma.
  std::vector<char> reached(n, 0);
  std::vector<std::size_t> reached_list;
  std::vector<std::size_t> gens;
  for (std::size_t s = 0; s < n; ++s) {
    if (reached[s]) continue;
    gens.push_back(s);
    std::deque<std::size_t> queue{s};
    reached[s] = 1;
    reached_list.push_back(s);
    while (!queue.empty()) {
      const std::size_t z = queue.front();
      queue.pop_front();
      const std::size_t count = reached_list.size();
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t y = reached_list[i];
        for (std::size_t w : {at(z, y), at(y, z)})
          if (!reached[w]) {
            reached[w] = 1;
            reached_list.push_back(w);
            queue.push_back(w);
          }
      }
    }
  }
  for (std::size_t s : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (at(at(x, s), y) != at(x, at(s, y)))
          throw Error(ErrorCode::NotAssociative, "(a*b)*c != a*(b*c) at " +
                                                     triple(static_cast<long long>(x), static_cast<long long>(s),
                                                            static_cast<long long>(y)));

  // Relabel so that the identity is 0.
  std::vector<Elem> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::swap(sigma[0], sigma[*e]);

  FiniteGroup g;
  g.order_ = n;
  g.cayley_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.cayley_[sigma[a] * n + sigma[b]] = sigma[at(a, b)];

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      seen_row[g.cayley_[a * n + b]] = 1;
      seen_col[g.cayley_[b * n + a]] = 1;
    }
    if (std::count(seen_row.begin(), seen_row.end(), 1) != static_cast<long>(n) ||
        std::count(seen_col.begin(), seen_col.end(), 1) != static_cast<long>(n))
      throw Error(ErrorCode::MalformedTable, "row/column " + std::to_string(a) + " is not a permutation");
  }

  g.inverse_.assign(n, 0);
  g.element_orders_.assign(n, 1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse_[a] = b;
        break;
      }
    Elem x = a;
    std::uint32_t k = 1;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
    }
    g.element_orders_[a] = k;
  }
  return g;
}

std::vector<Elem> FiniteGroup::generators() const {
  std::vector<Elem> gens;
  std::vector<char> in(order_, 0);
  in[0] = 1;
  std::vector<Elem> members{0};
  for (Elem x = 1; x < order_; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    // re-close: members * gens
    std::deque<Elem> queue(members.begin(), members.end());
    while (!queue.empty()) {
      const Elem y = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        const Elem z = mul(y, s);
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          queue.push_back(z);
        }
      }
    }
  }
  return gens;
}

FiniteGroup group_from_permutations(const Table& generators, std::size_t cap) {
  if (generators.empty()) return group_from_cayley({{0}});
  const std::size_t m = generators.front().size();
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& gen = generators[i];
    if (gen.size() != m)
      throw Error(ErrorCode::NotAPermutation, "generator " + std::to_string(i) + " acts on " +
                                                  std::to_string(gen.size()) + " points, expected " + std::to_string(m));
    std::vector<char> hit(m, 0);
    std::vector<std::uint32_t> perm(m);
    for (std::size_t x = 0; x < m; ++x) {
      if (gen[x] < 0 || static_cast<std::size_t>(gen[x]) >= m || hit[gen[x]])
        throw Error(ErrorCode::NotAPermutation, "generator " + std::to_string(i) + " is not a bijection of {0.." +
                                                    std::to_string(m ? m - 1 : 0) + "}");
      hit[gen[x]] = 1;
      perm[x] = static_cast<std::uint32_t>(gen[x]);
    }
    gens.push_back(std::move(perm));
  }

  std::vector<std::vector<std::uint32_t>> elements;
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  std::vector<std::uint32_t> id(m);
  std::iota(id.begin(), id.end(), 0);
  elements.push_back(id);
  index.emplace(id, 0);
  std::vector<std::vector<std::size_t>> right;  // right[x][s] = index of x*s
  std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};  // (parent, generator)

  for (std::size_t x = 0; x < elements.size(); ++x) {
    right.emplace_back(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::vector<std::uint32_t> prod(m);
      for (std::size_t pt = 0; pt < m; ++pt) prod[pt] = elements[x][gens[s][pt]];  // x after s
      auto [it, inserted] = index.emplace(prod, elements.size());
      if (inserted) {
        if (elements.size() >= cap)
          throw Error(ErrorCode::GroupTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
        elements.push_back(std::move(prod));
        parent.emplace_back(x, s);
      }
      right[x][s] = it->second;
    }
  }

  const std::size_t n = elements.size();
  // table[a][b] filled along the breadth-first tree: b = parent(b) * s_b.
  Table table(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a) {
    table[a][0] = static_cast<long long>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const auto [pb, s] = parent[b];
      table[a][b] = static_cast<long long>(right[static_cast<std::size_t>(table[a][pb])][s]);
    }
  }
  return group_from_cayley(table);
}

FiniteGroup builtin_group(const std::string& name) {
  const auto parts = split(name, ':');
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i) {
    if (parts.size() <= i) throw Error(ErrorCode::UnknownName, "missing parameter in '" + name + "'");
    return parse_int(parts[i], name);
  };
  auto expect_parts = [&](std::size_t k) {
    if (parts.size() != k) throw Error(ErrorCode::UnknownName, "wrong number of parameters in '" + name + "'");
  };

  FiniteGroup g;
  if (kind == "trivial") {
    expect_parts(1);
    g = group_from_cayley({{0}});
  } else if (kind == "cyclic") {
    expect_parts(2);
    const long long n = arg(1);
    if (n < 1 || static_cast<std::size_t>(n) > kDefaultGroupCap)
      throw Error(ErrorCode::UnknownName, "cyclic order out of range in '" + name + "'");
    g = group_from_cayley(table_from(static_cast<std::size_t>(n), [n](std::size_t a, std::size_t b) {
      return (a + b) % static_cast<std::size_t>(n);
    }));
  } else if (kind == "klein4") {
    expect_parts(1);
    // 0 = e, 1 = a1, 2 = a1 a2, 3 = a2, so that S1, S2, S3 are <a1>, <a1 a2>, <a2>.
    static constexpr std::size_t code[] = {0, 1, 3, 2};
    static constexpr std::size_t from_code[] = {0, 1, 3, 2};
    g = group_from_cayley(table_from(4, [](std::size_t a, std::size_t b) { return from_code[code[a] ^ code[b]]; }));
  } else if (kind == "elem_abelian") {
    expect_parts(3);
    const long long p = arg(1), k = arg(2);
    if (p < 2 || p > 65535 || !PrimeField::is_prime(static_cast<std::uint32_t>(p)) || k < 0) throw Error(ErrorCode::UnknownName, "bad parameters in '" + name + "'");
    std::size_t n = 1;
    for (long long i = 0; i < k; ++i) {
      n *= static_cast<std::size_t>(p);
      if (n > kDefaultGroupCap) throw Error(ErrorCode::GroupTooLarge, "'" + name + "' exceeds the group cap");
    }
    const auto pp = static_cast<std::size_t>(p);
    g = group_from_cayley(table_from(n, [pp, k](std::size_t a, std::size_t b) {
      std::size_t out = 0, scale = 1;
      for (long long i = 0; i < k; ++i) {
        out += ((a % pp + b % pp) % pp) * scale;
        a /= pp;
        b /= pp;
        scale *= pp;
      }
      return out;
    }));
  } else if (kind == "dihedral") {
    expect_parts(2);
    const long long nn = arg(1);
    if (nn < 1 || static_cast<std::size_t>(2 * nn) > kDefaultGroupCap)
      throw Error(ErrorCode::UnknownName, "dihedral parameter out of range in '" + name + "'");
    const auto n = static_cast<std::size_t>(nn);
    // element r^i s^j has index i + n j
    g = group_from_cayley(table_from(2 * n, [n](std::size_t a, std::size_t b) {
      const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
      const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      return rot + n * ((j + l) % 2);
    }));
  } else if (kind == "quaternion8") {
    expect_parts(1);
    // index = 2*basis + sign, basis 1,i,j,k; sign 1 means negative
    static constexpr int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int basis_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    g = group_from_cayley(table_from(8, [](std::size_t a, std::size_t b) {
      const std::size_t ba = a / 2, bb = b / 2;
      const std::size_t sign = (a % 2 + b % 2 + static_cast<std::size_t>(basis_sign[ba][bb])) % 2;
      return 2 * static_cast<std::size_t>(basis_mul[ba][bb]) + sign;
    }));
  } else if (kind == "symmetric") {
    expect_parts(2);
    const long long nn = arg(1);
    if (nn < 1 || nn > 4) throw Error(ErrorCode::UnknownName, "symmetric degree must be 1..4 in '" + name + "'");
    const auto n = static_cast<std::size_t>(nn);
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::map<std::vector<std::size_t>, std::size_t> idx;
    for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = i;
    g = group_from_cayley(table_from(perms.size(), [&](std::size_t a, std::size_t b) {
      std::vector<std::size_t> prod(n);
      for (std::size_t x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
      return idx.at(prod);
    }));
  } else {
    throw Error(ErrorCode::UnknownName, "unknown group '" + name + "'");
  }
  g.set_name(name);
  return g;
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<Elem> members{0};
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      const Elem z = g.mul(members[i], s);
      if (!in[z]) {
        in[z] = 1;
        members.push_back(z);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem x) {
  Subgroup c;
  c.elements.reserve(h.size());
  for (Elem y : h.elements) c.elements.push_back(g.conj(x, y));
  std::sort(c.elements.begin(), c.elements.end());
  return c;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : h.elements)
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup();
  for (Elem x : h.elements) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generate_subgroup(g, gens);
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem gen[] = {x};
    Subgroup c = generate_subgroup(g, gen);
    if (found.insert(c).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> work(cyclic.begin(), cyclic.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.is_subgroup_of(work[i])) continue;
      std::vector<Elem> gens = subgroup_generators(g, work[i]);
      const auto cg = subgroup_generators(g, c);
      gens.insert(gens.end(), cg.begin(), cg.end());
      Subgroup joined = generate_subgroup(g, gens);
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  return {found.begin(), found.end()};
}

namespace {

bool is_elementary_abelian_p(const FiniteGroup& g, const Subgroup& k, std::uint32_t p) {
  for (Elem x : k.elements) {
    if (x != 0 && g.element_order(x) != p) return false;
    for (Elem y : k.elements)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  }
  return true;
}

std::uint32_t prime_log(std::size_t n, std::uint32_t& prime) {
  // n = prime^k for some prime, else returns 0 with prime = 0
  prime = 0;
  if (n < 2) return 0;
  std::uint32_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return 0;
  prime = p;
  return k;
}

}  // namespace

std::uint32_t subgroup_rank(const FiniteGroup& g, const Subgroup& h) {
  std::uint32_t best = 0;
  for (const auto& k : all_subgroups(g)) {
    if (k.size() < 2 || !k.is_subgroup_of(h)) continue;
    std::uint32_t p = 0;
    const std::uint32_t e = prime_log(k.size(), p);
    if (e > best && is_elementary_abelian_p(g, k, p)) best = e;
  }
  return best;
}

std::optional<std::size_t> SubgroupFamily::index_of(const Subgroup& h) const {
  auto it = std::lower_bound(members.begin(), members.end(), h);
  if (it == members.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

SubgroupFamily family_from_predicate(const FiniteGroup& g, auto&& keep) {
  SubgroupFamily f;
  const auto subs = all_subgroups(g);
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (keep(subs[i])) {
      f.members.push_back(subs[i]);
      f.subgroup_id.push_back(static_cast<std::uint32_t>(i));
    }
  constexpr std::uint32_t kUnassigned = ~0u;
  f.class_id.assign(f.members.size(), kUnassigned);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    if (f.class_id[i] != kUnassigned) continue;
    for (Elem x = 0; x < g.order(); ++x)
      if (auto j = f.index_of(conjugate(g, f.members[i], x))) f.class_id[*j] = next;
    ++next;
  }
  return f;
}

}  // namespace

SubgroupFamily family_closure(const FiniteGroup& g, std::span<const Subgroup> seeds) {
  std::set<Subgroup> conjugates;
  for (const auto& s : seeds)
    for (Elem x = 0; x < g.order(); ++x) conjugates.insert(conjugate(g, s, x));
  return family_from_predicate(g, [&](const Subgroup& h) {
    return std::any_of(conjugates.begin(), conjugates.end(), [&](const Subgroup& c) { return h.is_subgroup_of(c); });
  });
}

Subgroup subgroup_by_id(const FiniteGroup& g, const std::string& id) {
  if (id.size() < 2 || id[0] != 'S') throw Error(ErrorCode::UnknownSubgroupId, "expected S<k>, got '" + id + "'");
  long long k = -1;
  try {
    std::size_t used = 0;
    k = std::stoll(id.substr(1), &used);
    if (used != id.size() - 1) k = -1;
  } catch (const std::exception&) {
    k = -1;
  }
  const auto subs = all_subgroups(g);
  if (k < 0 || static_cast<std::size_t>(k) >= subs.size())
    throw Error(ErrorCode::UnknownSubgroupId, "'" + id + "' (group has " + std::to_string(subs.size()) + " subgroups)");
  return subs[static_cast<std::size_t>(k)];
}

SubgroupFamily make_family(const FiniteGroup& g, const std::string& spec) {
  if (spec == "all") return family_from_predicate(g, [](const Subgroup&) { return true; });
  if (spec == "all_proper")
    return family_from_predicate(g, [&](const Subgroup& h) { return h.size() != g.order(); });
  if (spec == "cyclic")
    return family_from_predicate(g, [&](const Subgroup& h) {
      return std::any_of(h.elements.begin(), h.elements.end(),
                         [&](Elem x) { return g.element_order(x) == h.size(); });
    });
  if (spec.rfind("rank_at_most:", 0) == 0) {
    const long long k = parse_int(spec.substr(13), spec);
    if (k < 0) throw Error(ErrorCode::UnknownName, "negative rank bound in '" + spec + "'");
    return family_from_predicate(g, [&](const Subgroup& h) { return subgroup_rank(g, h) <= k; });
  }
  if (spec.rfind("list:", 0) == 0) {
    std::vector<Subgroup> seeds;
    for (const auto& id : split(spec.substr(5), ','))
      if (!id.empty()) seeds.push_back(subgroup_by_id(g, id));
    return family_closure(g, seeds);
  }
  throw Error(ErrorCode::UnknownName, "unknown family spec '" + spec + "'");
}

std::optional<std::string> check_family(const FiniteGroup& g, const SubgroupFamily& f) {
  if (f.class_id.size() != f.size() || f.subgroup_id.size() != f.size()) return "family metadata length mismatch";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& h = f.members[i];
    if (i > 0 && !(f.members[i - 1] < h)) return "members not in canonical order";
    if (h.elements.empty() || h.elements.front() != 0) return "member " + std::to_string(i) + " lacks the identity";
    if (!std::is_sorted(h.elements.begin(), h.elements.end()) ||
        std::adjacent_find(h.elements.begin(), h.elements.end()) != h.elements.end())
      return "member " + std::to_string(i) + " not strictly sorted";
    for (Elem x : h.elements) {
      if (x >= g.order()) return "member " + std::to_string(i) + " has an out-of-range element";
      if (!h.contains(g.inv(x))) return "member " + std::to_string(i) + " not closed under inverses";
      for (Elem y : h.elements)
        if (!h.contains(g.mul(x, y))) return "member " + std::to_string(i) + " not closed under products";
    }
    for (Elem x = 0; x < g.order(); ++x)
      if (!f.contains(conjugate(g, h, x))) return "member " + std::to_string(i) + " has a conjugate outside the family";
  }
  for (const auto& k : all_subgroups(g))
    for (const auto& h : f.members)
      if (k.is_subgroup_of(h) && !f.contains(k)) return "family not closed under taking subgroups";
  if (f.size() > 0 && !f.contains(trivial_subgroup())) return "trivial subgroup missing";
  return std::nullopt;
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  SubgroupAsGroup out;
  out.embedding = h.elements;
  out.local_index.assign(g.order(), -1);
  for (std::size_t i = 0; i < h.size(); ++i) out.local_index[h.elements[i]] = static_cast<std::int64_t>(i);
  Table t(h.size(), std::vector<long long>(h.size()));
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) {
      const auto li = out.local_index[g.mul(h.elements[a], h.elements[b])];
      if (li < 0) throw Error(ErrorCode::InternalError, "subgroup not closed under products");
      t[a][b] = li;
    }
  out.group = group_from_cayley(t);
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "subgroup of order " + std::to_string(n.size()) + " is not normal");
  QuotientGroup out;
  std::vector<Elem> coset_min(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem m = x;
    for (Elem y : n.elements) m = std::min(m, g.mul(x, y));
    coset_min[x] = m;
  }
  std::vector<Elem> reps(coset_min);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::unordered_map<Elem, Elem> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<Elem>(i);
  out.projection.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) out.projection[x] = rep_index.at(coset_min[x]);
  Table t(reps.size(), std::vector<long long>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) t[a][b] = out.projection[g.mul(reps[a], reps[b])];
  out.group = group_from_cayley(t);
  return out;
}

}  // namespace orbicoh
