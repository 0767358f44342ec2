#include "orbicoh/representation.hpp"

#include <algorithm>

#include "orbicoh/error.hpp"

namespace orbicoh {

GGRep rep_from_generators(GroupPtr group, std::uint32_t p, std::size_t dim, const std::vector<Elem>& gens,
                          const std::vector<Matrix>& images) {
  const FiniteGroup& g = *group;
  if (gens.size() != images.size())
    throw Error(ErrorCode::InvalidRepresentation, "generator and image counts differ");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] >= g.order()) throw Error(ErrorCode::InvalidRepresentation, "generator out of range");
    if (images[i].rows() != dim || images[i].cols() != dim || images[i].prime() != p)
      throw Error(ErrorCode::InvalidRepresentation, "image " + std::to_string(i) + " has the wrong shape or field");
  }
  GGRep m{group, p, dim, std::vector<Matrix>(g.order())};
  std::vector<char> known(g.order(), 0);
  m.rho[0] = Matrix::identity(dim, p);
  known[0] = 1;
  std::vector<Elem> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem z = g.mul(order[i], gens[s]);
      if (!known[z]) {
        known[z] = 1;
        m.rho[z] = m.rho[order[i]] * images[s];
        order.push_back(z);
      }
    }
  if (order.size() != g.order())
    throw Error(ErrorCode::InvalidRepresentation, "the listed elements do not generate the group");
  for (Elem a = 0; a < g.order(); ++a)
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (m.rho[a] * images[s] != m.rho[g.mul(a, gens[s])])
        throw Error(ErrorCode::InvalidRepresentation,
                    "generator images violate a group relation at element " + std::to_string(a));
  return m;
}

GGRep trivial_rep(GroupPtr group, std::uint32_t p, std::size_t dim) {
  GGRep m{group, p, dim, {}};
  m.rho.assign(group->order(), Matrix::identity(dim, p));
  return m;
}

std::vector<Elem> coset_representatives(const FiniteGroup& g, const Subgroup& k) {
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    Elem m = x;
    for (Elem y : k.elements) m = std::min(m, g.mul(x, y));
    if (m == x) reps.push_back(x);
  }
  return reps;
}

GGRep perm_rep(GroupPtr group, std::uint32_t p, const Subgroup& k) {
  const FiniteGroup& g = *group;
  const auto reps = coset_representatives(g, k);
  std::vector<std::size_t> point(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem m = x;
    for (Elem y : k.elements) m = std::min(m, g.mul(x, y));
    point[x] = static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), m) - reps.begin());
  }
  GGRep out{group, p, reps.size(), {}};
  out.rho.reserve(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    Matrix r(reps.size(), reps.size(), p);
    for (std::size_t j = 0; j < reps.size(); ++j) r(point[g.mul(a, reps[j])], j) = 1;
    out.rho.push_back(std::move(r));
  }
  return out;
}

GGRep regular_rep(GroupPtr group, std::uint32_t p) { return perm_rep(group, p, trivial_subgroup()); }

GGRep direct_sum(const GGRep& a, const GGRep& b) {
  GGRep out{a.group, a.p, a.dim + b.dim, {}};
  for (std::size_t x = 0; x < a.rho.size(); ++x) {
    const Matrix parts[] = {a.rho[x], b.rho[x]};
    out.rho.push_back(Matrix::direct_sum(parts, a.p));
  }
  return out;
}

GGRep tensor(const GGRep& a, const GGRep& b) {
  GGRep out{a.group, a.p, a.dim * b.dim, {}};
  for (std::size_t x = 0; x < a.rho.size(); ++x) out.rho.push_back(Matrix::kron(a.rho[x], b.rho[x]));
  return out;
}

GGRep gset_rep(GroupPtr group, std::uint32_t p, const std::vector<Subgroup>& orbits) {
  GGRep out{group, p, 0, {}};
  out.rho.assign(group->order(), Matrix(0, 0, p));
  for (const auto& k : orbits) out = direct_sum(out, perm_rep(group, p, k));
  return out;
}

std::optional<std::string> check_rep(const GGRep& m) {
  const FiniteGroup& g = *m.group;
  if (m.rho.size() != g.order()) return "rho table has the wrong length";
  for (Elem a = 0; a < g.order(); ++a)
    if (m.rho[a].rows() != m.dim || m.rho[a].cols() != m.dim) return "rho[" + std::to_string(a) + "] has the wrong shape";
  if (!m.rho[0].is_identity()) return "rho[identity] is not the identity";
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (m.rho[a] * m.rho[b] != m.rho[g.mul(a, b)])
        return "rho[" + std::to_string(a) + "] rho[" + std::to_string(b) + "] != rho[" + std::to_string(a) + "*" +
               std::to_string(b) + "]";
  return std::nullopt;
}

Matrix fixed_subspace_basis(const GGRep& m, const Subgroup& h) {
  const auto gens = subgroup_generators(*m.group, h);
  std::vector<Matrix> blocks;
  const Matrix id = Matrix::identity(m.dim, m.p);
  for (Elem x : gens) blocks.push_back(m.rho[x] - id);
  if (blocks.empty()) return id;
  return kernel_basis(Matrix::vstack(blocks, m.dim, m.p));
}

GGRep restrict_rep(const GGRep& m, const SubgroupAsGroup& sub, GroupPtr sub_group) {
  GGRep out{std::move(sub_group), m.p, m.dim, {}};
  for (Elem x : sub.embedding) out.rho.push_back(m.rho[x]);
  return out;
}

GGRep inflate_rep(const GGRep& m, const QuotientGroup& q, GroupPtr g) {
  GGRep out{g, m.p, m.dim, {}};
  for (Elem x = 0; x < g->order(); ++x) out.rho.push_back(m.rho[q.projection[x]]);
  return out;
}

bool is_equivariant(const Matrix& pi, const GGRep& b, const GGRep& c) {
  for (std::size_t x = 0; x < b.rho.size(); ++x)
    if (pi * b.rho[x] != c.rho[x] * pi) return false;
  return true;
}

}  // namespace orbicoh
