#include "orbicoh/io.hpp"

#include <filesystem>
#include <fstream>

#include "orbicoh/error.hpp"

namespace orbicoh {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::uint32_t p) {
  if (!j.is_array() || j.size() != rows) throw Error(ErrorCode::ParseError, "matrix must have " + std::to_string(rows) + " rows");
  std::vector<std::vector<long long>> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw Error(ErrorCode::ParseError, "matrix row must have " + std::to_string(cols) + " entries");
    std::vector<long long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "matrix entries must be integers");
      r.push_back(x.get<long long>());
    }
    entries.push_back(std::move(r));
  }
  if (rows == 0) return Matrix(0, cols, p);
  return Matrix::from_rows(entries, p);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(1) << '\n';
}

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::size_t> parse_object_ids(const std::string& list, const OrbitCategory& c) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string id = list.substr(start, end - start);
    if (!id.empty()) {
      auto x = c.object_of(subgroup_by_id(c.group(), id));
      if (!x) throw Error(ErrorCode::UnknownSubgroupId, id + " is not in the family");
      out.push_back(*x);
    }
    start = end + 1;
  }
  return out;
}

std::string subgroup_label(const OrbitCategory& c, std::size_t x) {
  return "S" + std::to_string(c.family().subgroup_id[*c.family().index_of(c.object(x))]);
}

}  // namespace

FiniteGroup group_from_json(const Json& j) {
  FiniteGroup g;
  if (j.contains("cayley")) {
    g = group_from_cayley(field<std::vector<std::vector<long long>>>(j, "cayley"));
  } else if (j.contains("generators")) {
    const auto gens = field<std::vector<std::vector<long long>>>(j, "generators");
    const auto points = field<std::size_t>(j, "points");
    for (const auto& gen : gens)
      if (gen.size() != points) throw Error(ErrorCode::NotAPermutation, "generator acts on the wrong number of points");
    g = group_from_permutations(gens);
  } else {
    throw Error(ErrorCode::ParseError, "group file needs 'cayley' or 'generators'");
  }
  g.set_name(j.value("name", std::string("file")));
  return g;
}

GroupPtr load_group(const std::string& spec) {
  if (spec.ends_with(".json") || std::filesystem::exists(spec))
    return std::make_shared<const FiniteGroup>(group_from_json(read_json_file(spec)));
  return std::make_shared<const FiniteGroup>(builtin_group(spec));
}

GGRep rep_from_json(const Json& j, GroupPtr g, std::uint32_t p) {
  const auto dim = field<std::size_t>(j, "dim");
  const auto gens = field<std::vector<Elem>>(j, "generators");
  const Json images = j.at("images");
  if (!images.is_array() || images.size() != gens.size())
    throw Error(ErrorCode::ParseError, "one image per generator expected");
  std::vector<Matrix> mats;
  for (const auto& m : images) mats.push_back(matrix_from_json(m, dim, dim, p));
  for (Elem x : gens)
    if (x >= g->order()) throw Error(ErrorCode::InvalidRepresentation, "generator outside the group");
  return rep_from_generators(std::move(g), p, dim, gens, mats);
}

GGRep parse_rep(const std::string& spec, GroupPtr g, std::uint32_t p) {
  if (spec == "trivial") return trivial_rep(std::move(g), p);
  if (spec == "regular") return regular_rep(std::move(g), p);
  if (spec.starts_with("perm:")) {
    const Subgroup k = subgroup_by_id(*g, spec.substr(5));
    return perm_rep(std::move(g), p, k);
  }
  if (spec.starts_with("file:")) return rep_from_json(read_json_file(spec.substr(5)), std::move(g), p);
  throw Error(ErrorCode::UnknownName, "unknown coefficient spec '" + spec + "'");
}

ModulePtr module_from_json(const Json& j, const CatPtr& cat, std::uint32_t p) {
  const auto dims = field<std::vector<std::size_t>>(j, "dims");
  if (dims.size() != cat->num_objects()) throw Error(ErrorCode::InvalidModule, "one dimension per object expected");
  const Json act = j.at("act");
  if (!act.is_array() || act.size() != cat->num_morphisms())
    throw Error(ErrorCode::InvalidModule, "one matrix per morphism expected");
  std::vector<Matrix> mats;
  for (std::size_t f = 0; f < cat->num_morphisms(); ++f) {
    const Morphism& m = cat->morphism(f);
    mats.push_back(matrix_from_json(act[f], dims[m.source], dims[m.target], p));
  }
  return make_module(cat, p, dims, std::move(mats));
}

Json module_to_json(const GammaModule& m) {
  Json act = Json::array();
  for (const auto& a : m.act) act.push_back(matrix_to_json(a));
  return Json{{"schema", kSchemaVersion}, {"dims", m.dim}, {"act", std::move(act)}};
}

ModulePtr parse_module(const std::string& spec, const CatPtr& cat, std::uint32_t p) {
  if (spec == "constant") return constant_module(cat, p);
  if (spec == "zero") return zero_module(cat, p);
  if (spec.starts_with("interval:")) return interval_module(cat, p, parse_object_ids(spec.substr(9), *cat));
  if (spec.starts_with("fixed:")) return fixed_point_module(cat, parse_rep(spec.substr(6), cat->group_ptr(), p));
  if (spec.starts_with("free:")) {
    const auto ids = parse_object_ids(spec.substr(5), *cat);
    if (ids.size() != 1) throw Error(ErrorCode::ParseError, "free: takes one subgroup id");
    return free_module(cat, p, ids.front());
  }
  if (spec.starts_with("file:")) return module_from_json(read_json_file(spec.substr(5)), cat, p);
  throw Error(ErrorCode::UnknownName, "unknown module spec '" + spec + "'");
}

Json category_to_json(const OrbitCategory& c, bool with_composition) {
  Json objects = Json::array();
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const Subgroup& h = c.object(x);
    objects.push_back(Json{{"id", subgroup_label(c, x)}, {"order", h.size()}, {"elements", h.elements},
                           {"class", c.family().class_id[*c.family().index_of(h)]}});
  }
  Json census = Json::array();
  for (std::size_t h = 0; h < c.num_objects(); ++h) {
    Json row = Json::array();
    for (std::size_t k = 0; k < c.num_objects(); ++k) row.push_back(c.hom(h, k).size());
    census.push_back(std::move(row));
  }
  Json out{{"schema", kSchemaVersion},
           {"group", c.group().name()},
           {"order", c.group().order()},
           {"objects", std::move(objects)},
           {"census", std::move(census)},
           {"morphisms", c.num_morphisms()}};
  if (with_composition) {
    Json mors = Json::array();
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
      const Morphism& m = c.morphism(f);
      mors.push_back(Json{{"source", m.source}, {"target", m.target}, {"rep", m.rep}});
    }
    Json table = Json::array();
    for (std::size_t f = 0; f < c.num_morphisms(); ++f)
      for (std::size_t g : c.out(c.morphism(f).target)) table.push_back(Json::array({f, g, c.compose(f, g)}));
    out["morphism_list"] = std::move(mors);
    out["composition"] = std::move(table);
  }
  return out;
}

namespace {

Json hom_to_json(const GammaHom& h) {
  Json comps = Json::array();
  for (const auto& m : h.comp) comps.push_back(matrix_to_json(m));
  return comps;
}

GammaHom hom_from_json(const Json& j, const ModulePtr& source, const ModulePtr& target) {
  const std::size_t n = source->cat->num_objects();
  if (!j.is_array() || j.size() != n) throw Error(ErrorCode::ParseError, "one component per object expected");
  GammaHom h{source, target, {}};
  for (std::size_t x = 0; x < n; ++x) h.comp.push_back(matrix_from_json(j[x], target->dim[x], source->dim[x], source->p));
  return h;
}

}  // namespace

Json resolution_to_json(const Resolution& res) {
  Json degrees = Json::array();
  for (std::size_t d = 0; d < res.length(); ++d) {
    Json entry{{"generators", res.free[d].decl.objects}};
    entry["map"] = d == 0 ? hom_to_json(res.complex.augmentation) : hom_to_json(res.complex.boundaries[d - 1]);
    degrees.push_back(std::move(entry));
  }
  return Json{{"degrees", std::move(degrees)}};
}

Resolution resolution_from_json(const Json& j, const ModulePtr& target) {
  const Json& degrees = j.at("degrees");
  if (!degrees.is_array() || degrees.empty()) throw Error(ErrorCode::ParseError, "resolution has no degrees");
  Resolution res;
  res.complex.target = target;
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    FreeDecl decl{field<std::vector<std::size_t>>(degrees[d], "generators")};
    for (std::size_t x : decl.objects)
      if (x >= target->cat->num_objects()) throw Error(ErrorCode::ParseError, "generator object out of range");
    res.free.push_back(realize_free(target->cat, target->p, decl));
    res.complex.terms.push_back(res.free.back().module);
    const ModulePtr& below = d == 0 ? target : res.complex.terms[d - 1];
    GammaHom h = hom_from_json(degrees[d].at("map"), res.complex.terms[d], below);
    if (d == 0)
      res.complex.augmentation = std::move(h);
    else
      res.complex.boundaries.push_back(std::move(h));
  }
  return res;
}

GoldenResolution make_golden(const std::string& group, const std::string& family, std::uint32_t p,
                             const std::string& module, const std::string& coefficients, std::size_t max_deg,
                             const ResolveOptions& options) {
  const CatPtr cat = orbit_category(load_group(group), family);
  const ModulePtr m = parse_module(module, cat, p);
  const ModulePtr n = parse_module(coefficients, cat, p);
  const Resolution res = resolve(m, max_deg + 1, options);
  GoldenResolution g{group, family, p, module, coefficients, resolution_to_json(res), {}};
  for (const auto& b : cohomology_bases(hom_complex(res, n))) g.ext.push_back(b.dim());
  g.ext.resize(max_deg + 1);
  return g;
}

Json golden_to_json(const GoldenResolution& g) {
  return Json{{"schema", kSchemaVersion}, {"group", g.group},   {"family", g.family},
              {"char", g.p},              {"module", g.module}, {"coefficients", g.coefficients},
              {"ext", g.ext},             {"resolution", g.resolution}};
}

GoldenResolution golden_from_json(const Json& j) {
  if (field<int>(j, "schema") != kSchemaVersion) throw Error(ErrorCode::ParseError, "unsupported schema version");
  return GoldenResolution{field<std::string>(j, "group"),        field<std::string>(j, "family"),
                          field<std::uint32_t>(j, "char"),       field<std::string>(j, "module"),
                          field<std::string>(j, "coefficients"), j.at("resolution"),
                          field<std::vector<std::size_t>>(j, "ext")};
}

std::optional<std::string> check_golden(const GoldenResolution& g, const ResolveOptions& fresh) {
  const CatPtr cat = orbit_category(load_group(g.group), g.family);
  const ModulePtr m = parse_module(g.module, cat, g.p);
  const ModulePtr n = parse_module(g.coefficients, cat, g.p);
  const Resolution stored = resolution_from_json(g.resolution, m);
  if (stored.length() < g.ext.size() + 1) return "stored resolution is too short for the recorded degrees";
  for (std::size_t d = 0; d < stored.length(); ++d) {
    const GammaHom& h = d == 0 ? stored.complex.augmentation : stored.complex.boundaries[d - 1];
    if (auto bad = check_hom(h)) return "degree " + std::to_string(d) + ": " + *bad;
  }
  if (auto bad = check_resolution(stored.complex)) return "stored complex: " + *bad;
  std::vector<std::size_t> replay;
  for (const auto& b : cohomology_bases(hom_complex(stored, n))) replay.push_back(b.dim());
  replay.resize(g.ext.size());
  if (replay != g.ext) return "Ext from the stored resolution differs from the recorded dims";
  std::vector<std::size_t> again = ext_dims(m, n, g.ext.size() - 1, fresh);
  if (again != g.ext) return "Ext from a fresh resolution differs from the recorded dims";
  return std::nullopt;
}

}  // namespace orbicoh
