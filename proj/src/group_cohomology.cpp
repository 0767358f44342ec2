#include "orbicoh/group_cohomology.hpp"

#include "orbicoh/error.hpp"

namespace orbicoh {

GroupCohomologyEngine::GroupCohomologyEngine(GGRep m, std::size_t max_deg, ResolveOptions options)
    : m_(std::move(m)), max_deg_(max_deg), options_(options) {}

const GroupCohomologyEngine::Local& GroupCohomologyEngine::local(const Subgroup& h) {
  auto& slot = locals_[h.elements];
  if (slot) return *slot;
  auto l = std::make_unique<Local>();
  l->sub = subgroup_as_group(*m_.group, h);
  l->group = std::make_shared<const FiniteGroup>(l->sub.group);
  l->cat = one_object_category(l->group);
  l->coeff = fixed_point_module(l->cat, restrict_rep(m_, l->sub, l->group));
  l->res = resolve(constant_module(l->cat, m_.p), max_deg_ + 1, options_);
  l->bases = cohomology_bases(hom_complex(l->res, l->coeff));
  slot = std::move(l);
  return *slot;
}

std::vector<std::size_t> GroupCohomologyEngine::dims(const Subgroup& h) {
  const Local& l = local(h);
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q <= max_deg_; ++q) out.push_back(l.bases[q].dim());
  return out;
}

AugmentedComplex pullback_complex(const AugmentedComplex& c, CatPtr cat, const std::vector<std::size_t>& object_map,
                                  const std::vector<std::size_t>& morphism_map) {
  AugmentedComplex out;
  out.target = pullback_module(c.target, cat, object_map, morphism_map);
  for (const auto& t : c.terms) out.terms.push_back(pullback_module(t, cat, object_map, morphism_map));
  out.augmentation = pullback_hom(c.augmentation, out.terms.front(), out.target, object_map);
  for (std::size_t i = 0; i < c.boundaries.size(); ++i)
    out.boundaries.push_back(pullback_hom(c.boundaries[i], out.terms[i + 1], out.terms[i], object_map));
  return out;
}

namespace {

// Cochain map Hom(P'_q, N') -> Hom(P_q, N) for a chain map into a pulled-back
// copy of P', followed by `twist` on values.
Matrix twisted_pullback(const FreeModule& source, const FreeModule& target, const GammaHom& chain,
                        const GammaModule& coeff_target, const Matrix& twist) {
  std::vector<Matrix> rows;
  std::size_t cols = 0;
  for (std::size_t k : target.decl.objects) cols += coeff_target.dim[k];
  for (std::size_t j = 0; j < source.decl.objects.size(); ++j) {
    const Matrix y = chain.comp[0].column(source.generator_row(j));
    rows.push_back(twist * yoneda_evaluation(target, coeff_target, 0, y));
  }
  return Matrix::vstack(rows, cols, twist.prime());
}

}  // namespace

const Matrix& GroupCohomologyEngine::map(const Subgroup& k, const Subgroup& h, Elem g, std::size_t q) {
  if (q > max_deg_) throw Error(ErrorCode::DegreeBoundExceeded, "degree above the engine window");
  auto key = std::make_tuple(k.elements, h.elements, g);
  auto it = maps_.find(key);
  if (it != maps_.end()) return it->second[q];

  const FiniteGroup& grp = *m_.group;
  const Local& lk = local(k);
  const Local& lh = local(h);
  std::vector<std::size_t> morphism_map;
  for (Elem x : lk.sub.embedding) {
    const auto li = lh.sub.local_index[grp.conj(g, x)];
    if (li < 0) throw Error(ErrorCode::InternalError, "conjugate of K does not lie in H");
    morphism_map.push_back(static_cast<std::size_t>(li));
  }
  const AugmentedComplex pulled = pullback_complex(lh.res.complex, lk.cat, {0}, morphism_map);
  const GammaHom alpha{lk.res.target(), pulled.target, {Matrix::identity(1, m_.p)}};
  const auto chain = lift_chain_map(alpha, lk.res, pulled, max_deg_);
  std::vector<Matrix> mats;
  for (std::size_t d = 0; d <= max_deg_; ++d) {
    const Matrix pull = twisted_pullback(lk.res.free[d], lh.res.free[d], chain[d], *lh.coeff, m_.rho[g]);
    mats.push_back(lk.bases[d].coordinates(pull * lh.bases[d].reps));
  }
  return maps_.emplace(std::move(key), std::move(mats)).first->second[q];
}

std::vector<std::size_t> group_cohomology_dims(const Subgroup& h, const GGRep& m, std::size_t n,
                                               const ResolveOptions& options) {
  GroupCohomologyEngine engine(m, n, options);
  return engine.dims(h);
}

ModulePtr cohomology_functor(CatPtr cat, GroupCohomologyEngine& engine, std::size_t q) {
  const OrbitCategory& c = *cat;
  std::vector<std::size_t> dim;
  for (std::size_t x = 0; x < c.num_objects(); ++x) dim.push_back(engine.local(c.object(x)).bases[q].dim());
  std::vector<Matrix> act;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const Morphism& mf = c.morphism(f);
    act.push_back(engine.map(c.object(mf.source), c.object(mf.target), mf.rep, q));
  }
  return make_module(std::move(cat), engine.coefficients().p, std::move(dim), std::move(act));
}

ModulePtr cohomology_functor(CatPtr cat, const GGRep& m, std::size_t q) {
  GroupCohomologyEngine engine(m, q);
  return cohomology_functor(std::move(cat), engine, q);
}

std::vector<Matrix> inflation_map(GroupPtr g, const Subgroup& n, const GGRep& m, std::size_t max_deg,
                                  const ResolveOptions& options) {
  const QuotientGroup quo = quotient_group(*g, n);
  if (m.group->order() != quo.group.order())
    throw Error(ErrorCode::InvalidRepresentation, "coefficients are not a representation of the quotient");
  auto qgroup = std::make_shared<const FiniteGroup>(quo.group);
  GGRep mq = m;
  mq.group = qgroup;
  const CatPtr cat_q = one_object_category(qgroup);
  const ModulePtr coeff_q = fixed_point_module(cat_q, mq);
  const Resolution res_q = resolve(constant_module(cat_q, m.p), max_deg + 1, options);

  const CatPtr cat_g = one_object_category(g);
  const ModulePtr coeff_g = fixed_point_module(cat_g, inflate_rep(mq, quo, g));
  const Resolution res_g = resolve(constant_module(cat_g, m.p), max_deg + 1, options);

  std::vector<std::size_t> morphism_map(quo.projection.begin(), quo.projection.end());
  const AugmentedComplex pulled = pullback_complex(res_q.complex, cat_g, {0}, morphism_map);
  const GammaHom alpha{res_g.target(), pulled.target, {Matrix::identity(1, m.p)}};
  const auto chain = lift_chain_map(alpha, res_g, pulled, max_deg);
  const auto bases_q = cohomology_bases(hom_complex(res_q, coeff_q));
  const auto bases_g = cohomology_bases(hom_complex(res_g, coeff_g));
  std::vector<Matrix> out;
  const Matrix id = Matrix::identity(m.dim, m.p);
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const Matrix pull = twisted_pullback(res_g.free[d], res_q.free[d], chain[d], *coeff_q, id);
    out.push_back(bases_g[d].coordinates(pull * bases_q[d].reps));
  }
  return out;
}

}  // namespace orbicoh
