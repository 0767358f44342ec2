#include "orbicoh/verify.hpp"

#include <algorithm>
#include <filesystem>

#include "orbicoh/error.hpp"
#include "orbicoh/group_cohomology.hpp"
#include "orbicoh/io.hpp"
#include "orbicoh/relcoh.hpp"
#include "orbicoh/spectral.hpp"

namespace orbicoh {

void SuiteRunner::check(bool ok, const std::string& what) {
  ++result_.cases;
  if (ok) return;
  if (result_.failures++ == 0) result_.first_failure = what;
}

void SuiteRunner::run(const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string detail = what;
  try {
    ok = body();
  } catch (const Error& e) {
    detail += ": " + std::string(e.name()) + " " + e.what();
  } catch (const std::exception& e) {
    detail += std::string(": ") + e.what();
  }
  check(ok, detail);
}

namespace {

struct CatSpec {
  const char* group;
  const char* family;
};

constexpr CatSpec kRandomCats[] = {
    {"klein4", "cyclic"}, {"symmetric:3", "cyclic"}, {"cyclic:4", "all"}, {"klein4", "all"}, {"cyclic:2", "all"},
};

CatPtr make_cat(const CatSpec& s, bool skeleton = false) { return orbit_category(load_group(s.group), s.family, skeleton); }

std::string label(const CatSpec& s, std::uint32_t p) {
  return std::string(s.group) + "/" + s.family + "/GF(" + std::to_string(p) + ")";
}

std::uint32_t random_prime(Rng& rng) { return rng() % 2 == 0 ? 2 : 3; }

// One orbit G/H per conjugacy class of maximal members, so X^K is nonempty
// exactly for K in F.
std::vector<Subgroup> realizing_gset(const SubgroupFamily& f) {
  std::vector<Subgroup> out;
  std::vector<std::uint32_t> used;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.size() && maximal; ++j)
      if (f.members[j].size() > f.members[i].size() && f.members[i].is_subgroup_of(f.members[j])) maximal = false;
    if (!maximal || std::find(used.begin(), used.end(), f.class_id[i]) != used.end()) continue;
    used.push_back(f.class_id[i]);
    out.push_back(f.members[i]);
  }
  return out;
}

}  // namespace

SuiteResult yoneda_suite(std::uint64_t seed, std::size_t count) {
  SuiteRunner s("yoneda");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const CatSpec& spec = kRandomCats[rng() % std::size(kRandomCats)];
    const std::uint32_t p = random_prime(rng);
    const CatPtr cat = make_cat(spec);
    const std::size_t k = rng() % cat->num_objects();
    const ModulePtr m = random_module(rng, cat, p, 1);
    s.run(label(spec, p) + " object " + std::to_string(k), [&] {
      return hom_space(free_module(cat, p, k), m).size() == m->dim[k];
    });
  }
  return s.finish();
}

SuiteResult functoriality_suite(std::uint64_t seed) {
  SuiteRunner s("functoriality");
  Rng rng(seed);
  auto check = [&](const std::string& what, const ModulePtr& m) {
    s.run(what, [&] { return !check_functoriality(*m).has_value(); });
  };
  for (const CatSpec& spec : kRandomCats) {
    for (std::uint32_t p : {2u, 3u}) {
      const CatPtr cat = make_cat(spec);
      const std::string tag = label(spec, p);
      const GroupPtr g = cat->group_ptr();
      check(tag + " constant", constant_module(cat, p));
      check(tag + " zero", zero_module(cat, p));
      for (std::size_t k = 0; k < cat->num_objects(); ++k) {
        check(tag + " free " + std::to_string(k), free_module(cat, p, k));
        check(tag + " perm fixed points " + std::to_string(k), fixed_point_module(cat, perm_rep(g, p, cat->object(k))));
      }
      check(tag + " regular fixed points", fixed_point_module(cat, regular_rep(g, p)));
      for (int i = 0; i < 4; ++i) check(tag + " interval", interval_module(cat, p, random_downward_support(rng, *cat)));
      const ModulePtr a = random_module(rng, cat, p, 1);
      const ModulePtr b = random_module(rng, cat, p, 1);
      check(tag + " tensor", tensor_module(a, b));
      check(tag + " sum", direct_sum({a, b}).module);
      const Resolution res = resolve(constant_module(cat, p), 2);
      for (const auto& t : res.complex.terms) check(tag + " resolution term", t);
      GroupCohomologyEngine engine(trivial_rep(g, p), 2);
      for (std::size_t q = 0; q <= 2; ++q) check(tag + " cohomology functor", cohomology_functor(cat, engine, q));
      const CatPtr all = orbit_category(g, "all");
      check(tag + " limit to all", two_family_limit(a, all));
      for (int i = 0; i < 3; ++i) check(tag + " random", random_module(rng, cat, p, 2));
    }
  }
  return s.finish();
}

SuiteResult adjointness_suite(std::uint64_t seed, std::size_t count) {
  SuiteRunner s("adjointness");
  Rng rng(seed);
  struct Pair {
    const char* group;
    const char* small;
    const char* large;
  };
  constexpr Pair pairs[] = {
      {"klein4", "list:S0", "cyclic"}, {"symmetric:3", "list:S0", "cyclic"}, {"cyclic:4", "list:S0", "all"},
      {"klein4", "cyclic", "all"},     {"symmetric:3", "cyclic", "all"},     {"cyclic:4", "list:S1", "all"},
  };
  for (int half = 0; half < 2; ++half) {
    for (std::size_t i = 0; i < count; ++i) {
      const Pair& pr = pairs[half * 3 + rng() % 3];
      const std::uint32_t p = random_prime(rng);
      const GroupPtr g = load_group(pr.group);
      const CatPtr v = orbit_category(g, pr.small);
      const CatPtr w = orbit_category(g, pr.large);
      const ModulePtr x = random_module(rng, w, p, 1);
      const ModulePtr n = random_module(rng, v, p, 1);
      s.run(std::string(pr.group) + " " + pr.small + " in " + pr.large, [&] {
        return hom_space(x, two_family_limit(n, w)).size() == hom_space(restrict_to_family(x, v), n).size();
      });
    }
  }
  return s.finish();
}

SuiteResult split_equivalence_suite(std::uint64_t seed, std::size_t count) {
  SuiteRunner s("fsplit-xsplit");
  Rng rng(seed);
  constexpr CatSpec specs[] = {
      {"klein4", "cyclic"}, {"symmetric:3", "cyclic"}, {"cyclic:4", "list:S1"}, {"symmetric:3", "all"}, {"klein4", "all"},
  };
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t i = 0; i < count; ++i) {
      const CatSpec& spec = specs[rng() % std::size(specs)];
      const GroupPtr g = load_group(spec.group);
      const SubgroupFamily f = make_family(*g, spec.family);
      const Surjection sur = random_surjection(rng, g, p, 5);
      s.run(label(spec, p), [&] {
        const FSplitReport fr = fsplit_check(sur.pi, sur.source, sur.target, f);
        const SplitVerdict xr = xsplit_check(sur.pi, sur.source, sur.target, realizing_gset(f));
        const auto subs = all_subgroups(*g);
        for (const auto& e : fr.entries) {
          const Subgroup& h = subs[e.subgroup_id];
          if (e.verdict.split && !verify_section(sur.pi, *e.verdict.witness, sur.source, sur.target, h)) return false;
          if (!e.verdict.split && e.verdict.coefficient_rank >= e.verdict.augmented_rank) return false;
        }
        return fr.split == xr.split;
      });
    }
  }
  return s.finish();
}

SuiteResult split_monotonicity_suite(std::uint64_t seed, std::size_t count) {
  SuiteRunner s("fsplit-monotone");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const char* group = rng() % 2 ? "klein4" : "symmetric:3";
    const std::uint32_t p = random_prime(rng);
    const GroupPtr g = load_group(group);
    const Surjection sur = random_surjection(rng, g, p, 5);
    s.run(group, [&] {
      const bool large = fsplit_check(sur.pi, sur.source, sur.target, make_family(*g, "all")).split;
      const bool small = fsplit_check(sur.pi, sur.source, sur.target, make_family(*g, "cyclic")).split;
      return !large || small;
    });
  }
  return s.finish();
}

const std::vector<ExtCase>& ext_reference_cases() {
  static const std::vector<ExtCase> cases = {
      {"klein4", "cyclic", 2, "constant", "constant", 8, {1, 0, 1, 3, 5, 7, 9, 11, 13}},
      {"klein4", "cyclic", 2, "interval:S0", "constant", 8, {1, 2, 3, 4, 5, 6, 7, 8, 9}},
      {"klein4", "cyclic", 2, "interval:S0,S1", "constant", 8, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"klein4", "cyclic", 2, "interval:S0,S2", "constant", 8, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"klein4", "cyclic", 2, "interval:S0,S3", "constant", 8, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"klein4", "all", 2, "constant", "constant", 4, {1, 0, 0, 0, 0}},
      {"cyclic:1", "all", 2, "constant", "constant", 3, {1, 0, 0, 0}},
  };
  return cases;
}

SuiteResult resolution_independence_suite() {
  SuiteRunner s("resolution-independence");
  for (const ExtCase& c : ext_reference_cases()) {
    const CatPtr cat = orbit_category(load_group(c.group), c.family);
    const ModulePtr m = parse_module(c.module, cat, c.p);
    const ModulePtr n = parse_module(c.coefficients, cat, c.p);
    const std::string tag = c.group + "/" + c.family + " Ext(" + c.module + ", " + c.coefficients + ")";
    const auto minimized = ext_dims(m, n, c.max_deg);
    s.check(minimized == c.expected, tag + " minimized hull");
    s.run(tag + " full-basis hull", [&] {
      const std::size_t low = std::min<std::size_t>(c.max_deg, 3);
      const auto full = ext_dims(m, n, low, {HullStrategy::FullBasis, 0, true});
      return std::equal(full.begin(), full.end(), minimized.begin());
    });
    s.run(tag + " mixed hull", [&] {
      return ext_dims(m, n, c.max_deg, {HullStrategy::Minimized, 2, true}) == minimized;
    });
  }
  return s.finish();
}

SuiteResult skeleton_independence_suite() {
  SuiteRunner s("skeleton-independence");
  constexpr CatSpec specs[] = {{"symmetric:3", "cyclic"}, {"symmetric:3", "all"}, {"dihedral:4", "cyclic"}};
  for (const CatSpec& spec : specs) {
    for (std::uint32_t p : {2u, 3u}) {
      const CatPtr full = make_cat(spec, false);
      const CatPtr skel = make_cat(spec, true);
      for (const char* coeff : {"trivial", "regular"}) {
        s.run(label(spec, p) + " " + coeff, [&] {
          const GGRep m = parse_rep(coeff, full->group_ptr(), p);
          return relative_cohomology_dims(full, m, 5) == relative_cohomology_dims(skel, m, 5);
        });
      }
    }
  }
  return s.finish();
}

SuiteResult subquotient_suite() {
  SuiteRunner s("subquotient");
  struct PageSpec {
    const char* group;
    const char* family;
    std::uint32_t p;
    const char* coeff;
    std::size_t max_p, max_q;
  };
  constexpr PageSpec pages[] = {
      {"klein4", "cyclic", 2, "trivial", 4, 3},     {"klein4", "cyclic", 2, "regular", 3, 3},
      {"klein4", "all", 2, "trivial", 3, 3},        {"symmetric:3", "cyclic", 2, "trivial", 3, 3},
      {"symmetric:3", "cyclic", 3, "trivial", 3, 3}, {"cyclic:4", "list:S1", 2, "trivial", 3, 3},
      {"cyclic:3", "all", 2, "trivial", 3, 3},
  };
  for (const PageSpec& ps : pages) {
    const CatPtr cat = orbit_category(load_group(ps.group), ps.family);
    const GGRep m = parse_rep(ps.coeff, cat->group_ptr(), ps.p);
    const E2Page page = e2_page(cat, m, ps.max_p, ps.max_q);
    for (const auto& q : page.subquotient)
      s.check(q.ok(), std::string(ps.group) + "/" + ps.family + " degree " + std::to_string(q.degree));
  }
  return s.finish();
}

SuiteResult limit_composition_suite(std::uint64_t seed, std::size_t count) {
  SuiteRunner s("limit-composition");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const char* group = rng() % 2 ? "klein4" : "symmetric:3";
    const std::uint32_t p = random_prime(rng);
    const GroupPtr g = load_group(group);
    const CatPtr v = orbit_category(g, "list:S0");
    const CatPtr w = orbit_category(g, "cyclic");
    const CatPtr u = orbit_category(g, "all");
    const ModulePtr n = random_module(rng, v, p, 1);
    s.run(group, [&] { return two_family_limit(two_family_limit(n, w), u)->dim == two_family_limit(n, u)->dim; });
  }
  return s.finish();
}

SuiteResult induced_map_functoriality_suite(std::uint64_t seed, std::size_t count) {
  SuiteRunner s("induced-map-functoriality");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const CatSpec& spec = kRandomCats[rng() % 2];
    const std::uint32_t p = random_prime(rng);
    const CatPtr cat = make_cat(spec);
    const ModulePtr a = random_module(rng, cat, p, 0);
    const ModulePtr b = random_module(rng, cat, p, 0);
    const ModulePtr c = random_module(rng, cat, p, 0);
    const ModulePtr n = constant_module(cat, p);
    s.run(label(spec, p), [&] {
      const GammaHom beta = random_hom(rng, a, b);
      const GammaHom alpha = random_hom(rng, b, c);
      const auto whole = induced_ext_map(compose(beta, alpha), n, 2);
      const auto first = induced_ext_map(alpha, n, 2);
      const auto second = induced_ext_map(beta, n, 2);
      for (std::size_t q = 0; q <= 2; ++q)
        if (whole[q] != second[q] * first[q]) return false;
      return true;
    });
  }
  return s.finish();
}

SuiteResult cohomology_functor_suite() {
  SuiteRunner s("cohomology-functor");
  constexpr CatSpec specs[] = {{"klein4", "cyclic"}, {"klein4", "all"}, {"symmetric:3", "all"}, {"cyclic:4", "all"}};
  for (const CatSpec& spec : specs) {
    for (std::uint32_t p : {2u, 3u}) {
      const CatPtr cat = make_cat(spec);
      for (const char* coeff : {"trivial", "regular"}) {
        const GGRep m = parse_rep(coeff, cat->group_ptr(), p);
        GroupCohomologyEngine engine(m, 3);
        const std::string tag = label(spec, p) + " " + coeff;
        s.run(tag + " degree 0 is the fixed-point module", [&] {
          return cohomology_functor(cat, engine, 0)->dim == fixed_point_module(cat, m)->dim;
        });
        for (std::size_t q = 1; q <= 3; ++q) {
          s.run(tag + " functoriality", [&] { return !check_functoriality(*cohomology_functor(cat, engine, q)); });
          s.check(engine.dims(trivial_subgroup())[q] == 0, tag + " trivial subgroup vanishes");
        }
        for (std::size_t x = 0; x < cat->num_objects(); ++x) {
          const Subgroup& h = cat->object(x);
          for (Elem e : h.elements)
            for (std::size_t q = 0; q <= 3; ++q)
              s.run(tag + " inner conjugation", [&] { return engine.map(h, h, e, q).is_identity(); });
        }
      }
    }
  }
  return s.finish();
}

SuiteResult tensor_unit_suite(std::uint64_t seed, std::size_t count) {
  SuiteRunner s("tensor-unit");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const CatSpec& spec = kRandomCats[rng() % std::size(kRandomCats)];
    const std::uint32_t p = random_prime(rng);
    const CatPtr cat = make_cat(spec);
    const ModulePtr m = random_module(rng, cat, p, 1);
    s.run(label(spec, p), [&] {
      const ModulePtr t = tensor_module(constant_module(cat, p), m);
      return t->dim == m->dim && t->act == m->act;
    });
  }
  return s.finish();
}

std::vector<SuiteResult> run_structural_suites(std::uint64_t seed) {
  return {yoneda_suite(seed),
          functoriality_suite(seed),
          adjointness_suite(seed),
          split_equivalence_suite(seed),
          split_monotonicity_suite(seed),
          resolution_independence_suite(),
          skeleton_independence_suite(),
          subquotient_suite(),
          limit_composition_suite(seed),
          induced_map_functoriality_suite(seed),
          cohomology_functor_suite(),
          tensor_unit_suite(seed)};
}

SuiteResult reference_values_suite() {
  SuiteRunner s("klein-four");
  using V = std::vector<std::size_t>;
  const GroupPtr g = load_group("klein4");
  const CatPtr cat = orbit_category(g, "cyclic");
  const GGRep triv = trivial_rep(g, 2);

  s.run("relative cohomology degrees 0-8", [&] { return relative_cohomology_dims(cat, triv, 8) == V{1, 0, 1, 3, 5, 7, 9, 11, 13}; });
  s.run("group-side pipeline degrees 0-8", [&] { return rg_side_pipeline(cat, triv, 8) == V{1, 0, 1, 3, 5, 7, 9, 11, 13}; });
  s.run("permutation-module resolution degrees 0-4", [&] {
    return tensor_construction_dims(cat->family(), triv, 4) == V{1, 0, 1, 3, 5};
  });
  s.run("periodicity", [&] {
    const auto r = periodicity_report(relative_cohomology_dims(cat, triv, 8), 2);
    return !r.period && r.strictly_increasing_tail;
  });
  s.run("group cohomology", [&] { return group_cohomology_dims(whole_group(*g), triv, 6) == V{1, 2, 3, 4, 5, 6, 7}; });
  s.run("line sequence injective in degrees 1-6", [&] {
    const LineSequence seq = line_sequence(cat, 2);
    const auto maps = induced_ext_map(seq.gamma, seq.constant, 6);
    for (std::size_t n = 1; n <= 6; ++n)
      if (rank(maps[n]) != 3) return false;
    return true;
  });
  s.run("line maps vanish in positive degrees", [&] {
    const LineSequence seq = line_sequence(cat, 2);
    for (const auto& tau : seq.line_maps) {
      const auto maps = induced_ext_map(tau, seq.constant, 6);
      for (std::size_t n = 1; n <= 6; ++n)
        if (!maps[n].is_zero()) return false;
    }
    return true;
  });
  s.run("inflation matches the line inclusions", [&] {
    const LineSequence seq = line_sequence(cat, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      const Subgroup h = cat->object(i + 1);
      const auto via_ext = induced_ext_map(seq.line_inclusions[i], seq.constant, 6);
      const GroupPtr q = std::make_shared<const FiniteGroup>(quotient_group(*g, h).group);
      const auto via_inf = inflation_map(g, h, trivial_rep(q, 2), 6);
      for (std::size_t n = 0; n <= 6; ++n)
        if (rank(via_ext[n]) != rank(via_inf[n]) || kernel_basis(via_ext[n]).cols() != kernel_basis(via_inf[n]).cols())
          return false;
    }
    return true;
  });
  s.run("E2 page", [&] {
    const E2Page page = e2_page(cat, triv, 5, 5);
    for (std::size_t p = 0; p <= 5; ++p)
      for (std::size_t q = 1; q <= 5; ++q)
        if (p + q <= 6 && page.dims[p][q] != 3) return false;
    V row;
    for (std::size_t p = 0; p <= 5; ++p) row.push_back(page.dims[p][0]);
    return row == V{1, 0, 1, 3, 5, 7};
  });
  s.run("horizontal edge", [&] {
    V r;
    for (const auto& m : horizontal_edge(cat, triv, 6)) r.push_back(rank(m));
    return r == V{1, 0, 0, 0, 0, 0, 0};
  });
  s.run("relative essential cohomology", [&] { return relative_essential_dims(g, triv, 6) == V(7, 0); });
  s.run("essential cohomology", [&] { return essential_dims(g, triv, 3) == V{0, 0, 0, 1}; });
  return s.finish();
}

SuiteResult golden_files_suite(const std::string& dir) {
  SuiteRunner s("golden-files");
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir))
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    s.run(f.filename().string(), [&] {
      auto bad = check_golden(golden_from_json(read_json_file(f.string())));
      if (bad) throw Error(ErrorCode::InternalError, *bad);
      return true;
    });
  }
  return s.finish();
}

}  // namespace orbicoh
