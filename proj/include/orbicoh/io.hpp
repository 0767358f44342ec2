#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "orbicoh/homalg.hpp"
#include "orbicoh/representation.hpp"

namespace orbicoh {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rows of entries.  Reading checks the expected shape, which also fixes
/// empty matrices.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::uint32_t p);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// {"name", "cayley": [[...]]} or {"name", "points", "generators": [[...]]}.
FiniteGroup group_from_json(const Json& j);
/// A builtin name, or a path to a group JSON file.
GroupPtr load_group(const std::string& spec);

/// {"dim", "generators": [elements], "images": [matrices]}.
GGRep rep_from_json(const Json& j, GroupPtr g, std::uint32_t p);
/// trivial, regular, perm:S<k>, file:<path>.
GGRep parse_rep(const std::string& spec, GroupPtr g, std::uint32_t p);

/// {"dims": [...], "act": [matrix per morphism id]}.
ModulePtr module_from_json(const Json& j, const CatPtr& cat, std::uint32_t p);
Json module_to_json(const GammaModule& m);
/// constant, interval:S<i>,S<j>,..., fixed:<rep spec>, free:S<k>, file:<path>.
ModulePtr parse_module(const std::string& spec, const CatPtr& cat, std::uint32_t p);

/// Objects with subgroup ids, the morphism census and optionally every
/// composition.
Json category_to_json(const OrbitCategory& c, bool with_composition = false);

/// A replayable resolution: per degree the free generators and the boundary
/// matrices per object, plus the augmentation and the Ext dims it yields
/// against `coefficients`.
struct GoldenResolution {
  std::string group;
  std::string family;
  std::uint32_t p = 2;
  std::string module;        // parse_module spec of the resolved module
  std::string coefficients;  // parse_module spec
  Json resolution;
  std::vector<std::size_t> ext;
};

Json resolution_to_json(const Resolution& res);
/// Rebuilds the complex over `cat` from stored matrices; does not re-verify.
Resolution resolution_from_json(const Json& j, const ModulePtr& target);

GoldenResolution make_golden(const std::string& group, const std::string& family, std::uint32_t p,
                             const std::string& module, const std::string& coefficients, std::size_t max_deg,
                             const ResolveOptions& options = {});
Json golden_to_json(const GoldenResolution& g);
GoldenResolution golden_from_json(const Json& j);

/// Replays a golden file: rebuilds the stored complex, checks that it is a
/// resolution, recomputes Ext from it and from a fresh resolution, and
/// compares both with the stored dims.  Returns the first discrepancy.
std::optional<std::string> check_golden(const GoldenResolution& g, const ResolveOptions& fresh = {});

}  // namespace orbicoh
