#include "orbicoh/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbicoh/error.hpp"
#include "orbicoh/io.hpp"
#include "orbicoh/relcoh.hpp"
#include "orbicoh/spectral.hpp"
#include "orbicoh/verify.hpp"

#ifndef ORBICOH_GOLDEN_DIR
#define ORBICOH_GOLDEN_DIR "tests/golden"
#endif

namespace orbicoh {

namespace {

struct Job {
  std::string group = "klein4";
  std::string family = "cyclic";
  std::uint32_t p = 2;
  std::string coeff = "trivial";
  std::string format = "tsv";
  std::size_t max_deg = 8;
  std::size_t max_p = 4;
  std::size_t max_q = 3;
  std::size_t offset = 2;
  std::uint64_t seed = kDefaultSeed;
  std::string source = "constant";
  std::string target = "constant";
  std::string subgroup;
  std::string xset;
  std::string surjection;
  std::string golden_dir = ORBICOH_GOLDEN_DIR;
  std::string save_golden;
  bool reference = false;
  bool composition = false;
  bool cross_check = false;
};

void require_prime(std::uint32_t p) {
  if (p < 2 || p > 65535 || !PrimeField::is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Json header(const char* command, const Job& job) {
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"group", job.group},
              {"family", job.family},     {"char", job.p}};
}

struct Context {
  GroupPtr group;
  CatPtr cat;
};

Context context(const Job& job) {
  require_prime(job.p);
  Context c;
  c.group = load_group(job.group);
  c.cat = OrbitCategory::build(c.group, make_family(*c.group, job.family));
  return c;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_relcoh(const Job& job, std::ostream& out) {
  const Context c = context(job);
  const GGRep m = parse_rep(job.coeff, c.group, job.p);
  const auto dims = relative_cohomology_dims(c.cat, m, job.max_deg);
  std::optional<PeriodicityReport> report;
  if (dims.size() >= 2 * (job.offset + 1)) report = periodicity_report(dims, job.offset);
  std::optional<bool> agrees;
  if (job.cross_check) agrees = rg_side_pipeline(c.cat, m, job.max_deg) == dims;

  if (job.format == "json") {
    Json j = header("relcoh", job);
    j["coeff"] = job.coeff;
    j["dims"] = dims;
    if (report) {
      j["periodicity"] = Json{{"window", report->window},
                              {"offset", report->offset},
                              {"period", report->period ? Json(*report->period) : Json(nullptr)},
                              {"strictly_increasing_tail", report->strictly_increasing_tail},
                              {"verdict", report->verdict}};
    } else {
      j["periodicity"] = nullptr;
    }
    if (agrees) j["group_side_agrees"] = *agrees;
    emit(out, j);
  } else {
    out << "dims: " << join(dims) << '\n';
    if (report)
      out << "periodicity: " << report->verdict << '\n';
    else
      out << "periodicity: window too short (window " << job.max_deg << ", offset " << job.offset << ")\n";
    if (agrees) out << "group-side pipeline: " << (*agrees ? "agrees" : "DIFFERS") << '\n';
  }
  return agrees.value_or(true) ? 0 : 1;
}

int cmd_ext(const Job& job, std::ostream& out) {
  const Context c = context(job);
  const ModulePtr m = parse_module(job.source, c.cat, job.p);
  const ModulePtr n = parse_module(job.target, c.cat, job.p);
  const auto dims = ext_dims(m, n, job.max_deg);
  if (!job.save_golden.empty()) {
    const GoldenResolution g = make_golden(job.group, job.family, job.p, job.source, job.target, job.max_deg);
    if (g.ext != dims) throw Error(ErrorCode::InternalError, "golden replay disagrees with ext");
    write_json_file(job.save_golden, golden_to_json(g));
  }
  if (job.format == "json") {
    Json j = header("ext", job);
    j["source"] = job.source;
    j["target"] = job.target;
    j["dims"] = dims;
    emit(out, j);
  } else {
    out << "dims: " << join(dims) << '\n';
  }
  return 0;
}

int cmd_groupcoh(const Job& job, std::ostream& out) {
  require_prime(job.p);
  const GroupPtr g = load_group(job.group);
  const Subgroup h = job.subgroup.empty() ? whole_group(*g) : subgroup_by_id(*g, job.subgroup);
  const auto dims = group_cohomology_dims(h, parse_rep(job.coeff, g, job.p), job.max_deg);
  if (job.format == "json") {
    Json j{{"schema", kSchemaVersion}, {"command", "groupcoh"}, {"group", job.group}, {"char", job.p},
           {"coeff", job.coeff},       {"subgroup", job.subgroup.empty() ? "whole" : job.subgroup},
           {"dims", dims}};
    emit(out, j);
  } else {
    out << "dims: " << join(dims) << '\n';
  }
  return 0;
}

int cmd_e2(const Job& job, std::ostream& out) {
  const Context c = context(job);
  const GGRep m = parse_rep(job.coeff, c.group, job.p);
  const E2Page page = e2_page(c.cat, m, job.max_p, job.max_q);
  std::vector<std::size_t> vrank;
  for (const auto& v : page.vertical_edge) vrank.push_back(rank(v));
  bool bound_ok = true;
  for (const auto& s : page.subquotient) bound_ok = bound_ok && s.ok();

  if (job.format == "json") {
    Json j = header("e2", job);
    j["coeff"] = job.coeff;
    j["banner"] = kE2Banner;
    j["max_p"] = page.max_p;
    j["max_q"] = page.max_q;
    j["dims"] = page.dims;
    j["target_dims"] = page.target_dims;
    j["limit_dims"] = page.limit_dims;
    j["vertical_edge"] = Json{{"rank", vrank}, {"kernel", page.vertical_kernel}};
    j["horizontal_edge"] = Json{{"rank", page.horizontal_rank}};
    j["relative_essential"] = page.relative_essential;
    Json sq = Json::array();
    for (const auto& s : page.subquotient)
      sq.push_back(Json{{"degree", s.degree}, {"target", s.target}, {"bound", s.bound}, {"ok", s.ok()}});
    j["subquotient"] = std::move(sq);
    emit(out, j);
  } else {
    out << kE2Banner << '\n';
    for (std::size_t q = page.max_q + 1; q-- > 0;) {
      std::vector<std::size_t> row;
      for (std::size_t p = 0; p <= page.max_p; ++p) row.push_back(page.dims[p][q]);
      out << "q=" << q << ": " << join(row) << '\n';
    }
    out << "target dims: " << join(page.target_dims) << '\n';
    out << "vertical edge rank: " << join(vrank) << '\n';
    out << "vertical edge kernel: " << join(page.vertical_kernel) << '\n';
    out << "horizontal edge rank: " << join(page.horizontal_rank) << '\n';
    out << "relative essential: " << join(page.relative_essential) << '\n';
    out << "subquotient bound: " << (bound_ok ? "holds" : "VIOLATED") << '\n';
  }
  return bound_ok ? 0 : 1;
}

std::vector<Subgroup> parse_xset(const std::string& list, const FiniteGroup& g) {
  std::vector<Subgroup> out;
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');)
    if (!id.empty()) out.push_back(subgroup_by_id(g, id));
  return out;
}

int cmd_fsplit(const Job& job, std::ostream& out) {
  const Context c = context(job);
  const SubgroupFamily& f = c.cat->family();
  std::vector<Subgroup> x;
  if (!job.xset.empty()) {
    x = parse_xset(job.xset, *c.group);
  } else {
    for (std::size_t i = 0; i < f.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (f.members[j].size() > f.members[i].size() && f.members[i].is_subgroup_of(f.members[j])) maximal = false;
      if (maximal) x.push_back(f.members[i]);
    }
  }
  Surjection s;
  if (!job.surjection.empty()) {
    const Json j = read_json_file(job.surjection);
    s.source = rep_from_json(j.at("source"), c.group, job.p);
    s.target = rep_from_json(j.at("target"), c.group, job.p);
    s.pi = matrix_from_json(j.at("pi"), s.target.dim, s.source.dim, job.p);
  } else {
    // augmentation R X -> R
    s.source = gset_rep(c.group, job.p, x);
    s.target = trivial_rep(c.group, job.p);
    s.pi = Matrix(1, s.source.dim, job.p);
    for (std::size_t i = 0; i < s.source.dim; ++i) s.pi(0, i) = 1;
  }
  const FSplitReport report = fsplit_check(s.pi, s.source, s.target, f);
  const SplitVerdict xs = xsplit_check(s.pi, s.source, s.target, x);

  if (job.format == "json") {
    Json j = header("fsplit", job);
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      Json entry{{"subgroup", "S" + std::to_string(e.subgroup_id)},
                 {"split", e.verdict.split},
                 {"coefficient_rank", e.verdict.coefficient_rank},
                 {"augmented_rank", e.verdict.augmented_rank}};
      if (e.verdict.witness) entry["witness"] = matrix_to_json(*e.verdict.witness);
      entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    j["f_split"] = report.split;
    Json xs_ids = Json::array();
    const auto subs = all_subgroups(*c.group);
    for (const auto& h : x) xs_ids.push_back("S" + std::to_string(std::find(subs.begin(), subs.end(), h) - subs.begin()));
    j["xset"] = std::move(xs_ids);
    j["x_split"] = xs.split;
    emit(out, j);
  } else {
    for (const auto& e : report.entries)
      out << 'S' << e.subgroup_id << '\t' << (e.verdict.split ? "split" : "not split") << '\t' << "rank "
          << e.verdict.coefficient_rank << '/' << e.verdict.augmented_rank << '\n';
    out << "F-split: " << (report.split ? "yes" : "no") << '\n';
    out << "X-split: " << (xs.split ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_orbitcat(const Job& job, std::ostream& out) {
  const Context c = context(job);
  if (auto bad = check_category(*c.cat)) throw Error(ErrorCode::InternalError, *bad);
  const Json j = category_to_json(*c.cat, job.composition);
  if (job.format == "json") {
    emit(out, j);
    return 0;
  }
  out << "objects:";
  for (const auto& o : j["objects"]) out << ' ' << o["id"].get<std::string>();
  out << '\n';
  for (std::size_t h = 0; h < c.cat->num_objects(); ++h) {
    out << j["objects"][h]["id"].get<std::string>();
    for (std::size_t k = 0; k < c.cat->num_objects(); ++k) out << '\t' << c.cat->hom(h, k).size();
    out << '\n';
  }
  out << "morphisms: " << c.cat->num_morphisms() << '\n';
  return 0;
}

int cmd_verify(const Job& job, std::ostream& out) {
  std::vector<SuiteResult> results = run_structural_suites(job.seed);
  results.push_back(golden_files_suite(job.golden_dir));
  if (job.reference) results.push_back(reference_values_suite());
  bool ok = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    if (job.format == "json") {
      suites.push_back(Json{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
    } else {
      out << r.name << '\t' << (r.ok() ? "ok" : "FAILED") << '\t' << r.cases << " cases";
      if (!r.ok()) out << '\t' << (r.cases ? r.first_failure : "no cases");
      out << '\n';
    }
  }
  if (job.format == "json") {
    emit(out, Json{{"schema", kSchemaVersion}, {"command", "verify"}, {"seed", job.seed}, {"ok", ok}, {"suites", suites}});
  } else {
    out << "verify: " << (ok ? "ok" : "FAILED") << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"Relative group cohomology and Ext over orbit categories", "orbicoh"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool family) {
    sub->add_option("--group", job.group, "builtin group name or JSON file")->capture_default_str();
    if (family) sub->add_option("--family", job.family, "cyclic, all_proper, all, rank_at_most:k, list:S1,...")->capture_default_str();
    sub->add_option("--char", job.p, "prime characteristic")->capture_default_str();
    sub->add_option("--format", job.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  };

  auto* relcoh = app.add_subcommand("relcoh", "relative cohomology dimensions and periodicity report");
  common(relcoh, true);
  relcoh->add_option("--coeff", job.coeff, "trivial, regular, perm:S<k>, file:<path>")->capture_default_str();
  relcoh->add_option("--max-deg", job.max_deg)->capture_default_str();
  relcoh->add_option("--offset", job.offset, "periodicity stabilization offset")->capture_default_str();
  relcoh->add_flag("--cross-check", job.cross_check, "also run the group-side pipeline");

  auto* ext = app.add_subcommand("ext", "Ext dimensions between two modules");
  common(ext, true);
  ext->add_option("--source", job.source, "constant, interval:S..., fixed:<coeff>, free:S<k>, file:<path>")->capture_default_str();
  ext->add_option("--target", job.target)->capture_default_str();
  ext->add_option("--max-deg", job.max_deg)->capture_default_str();
  ext->add_option("--save-golden", job.save_golden, "write the resolution and dims as a replayable JSON file");

  auto* groupcoh = app.add_subcommand("groupcoh", "group cohomology dimensions of a subgroup");
  common(groupcoh, false);
  groupcoh->add_option("--coeff", job.coeff)->capture_default_str();
  groupcoh->add_option("--subgroup", job.subgroup, "S<k>; the whole group by default");
  groupcoh->add_option("--max-deg", job.max_deg)->capture_default_str();

  auto* e2 = app.add_subcommand("e2", "E2 page and edge maps");
  common(e2, true);
  e2->add_option("--coeff", job.coeff)->capture_default_str();
  e2->add_option("--max-p", job.max_p)->capture_default_str();
  e2->add_option("--max-q", job.max_q)->capture_default_str();

  auto* fsplit = app.add_subcommand("fsplit", "F-split and X-split verdicts for a surjection");
  common(fsplit, true);
  fsplit->add_option("--surjection", job.surjection, "JSON file {source, target, pi}; default the augmentation of R X");
  fsplit->add_option("--xset", job.xset, "orbit stabilizers S<i>,S<j>,...");

  auto* orbitcat = app.add_subcommand("orbitcat", "orbit category census");
  common(orbitcat, true);
  orbitcat->add_flag("--composition", job.composition, "include the composition table (json)");

  auto* verify = app.add_subcommand("verify", "property suites and golden files");
  verify->add_option("--seed", job.seed)->capture_default_str();
  verify->add_flag("--paper", job.reference, "also recompute the Klein-four reference values");
  verify->add_option("--golden-dir", job.golden_dir)->capture_default_str();
  verify->add_option("--format", job.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (relcoh->parsed()) return cmd_relcoh(job, out);
    if (ext->parsed()) return cmd_ext(job, out);
    if (groupcoh->parsed()) return cmd_groupcoh(job, out);
    if (e2->parsed()) return cmd_e2(job, out);
    if (fsplit->parsed()) return cmd_fsplit(job, out);
    if (orbitcat->parsed()) return cmd_orbitcat(job, out);
    if (verify->parsed()) return cmd_verify(job, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace orbicoh
