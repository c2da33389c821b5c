#include <algorithm>
#include <regex>

#include <nlohmann/json.hpp>

#include "balg/errors.hpp"
#include "balg/verify.hpp"

namespace balg {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw ConfigError(field + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }))
      schema_error(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const json& require_key(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key))
    schema_error(path.empty() ? key : path + "." + key, "missing required key");
  return obj.at(key);
}

std::string require_string(const json& v, const std::string& field) {
  if (!v.is_string()) schema_error(field, "expected a string");
  return v.get<std::string>();
}

std::int64_t require_integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) schema_error(field, "expected an integer");
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    schema_error(field, "integer out of range");
  return v.get<std::int64_t>();
}

AlgebraConfig parse_algebra(const json& v, const std::string& path, const Caps& caps) {
  if (!v.is_object()) schema_error(path, "expected an object");
  reject_unknown(v, path, {"name", "kind", "atoms", "trivial"});
  AlgebraConfig a;
  a.name = require_string(require_key(v, path, "name"), path + ".name");
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  if (!std::regex_match(a.name, ident))
    schema_error(path + ".name", "'" + a.name + "' is not an identifier");
  a.kind = require_string(require_key(v, path, "kind"), path + ".kind");
  if (a.kind != "powerset" && a.kind != "finite_cofinite")
    schema_error(path + ".kind", "expected \"powerset\" or \"finite_cofinite\", got \"" +
                                     a.kind + "\"");
  if (v.contains("trivial")) {
    if (!v.at("trivial").is_boolean()) schema_error(path + ".trivial", "expected a boolean");
    a.trivial = v.at("trivial").get<bool>();
  }
  if (v.contains("atoms")) {
    if (a.kind != "powerset") schema_error(path + ".atoms", "only powerset algebras have atoms");
    if (a.trivial) schema_error(path + ".atoms", "a trivial algebra has no atoms");
    const std::int64_t n = require_integer(v.at("atoms"), path + ".atoms");
    if (n < 1) schema_error(path + ".atoms", "atom count must be at least 1");
    if (n > caps.max_atoms)
      schema_error(path + ".atoms", "cap exceeded (" + std::to_string(n) + " > max_atoms " +
                                        std::to_string(caps.max_atoms) + ")");
    a.atoms = static_cast<int>(n);
  } else if (a.kind == "powerset" && !a.trivial) {
    schema_error(path + ".atoms", "missing required key for a powerset algebra");
  }
  if (a.trivial)
    a.algebra = Algebra::trivial(a.name);
  else if (a.kind == "powerset")
    a.algebra = Algebra::powerset(a.atoms, a.name);
  else
    a.algebra = Algebra::finite_cofinite(a.name);
  return a;
}

SuiteRequest parse_suite(const json& v, const std::string& path,
                         const std::vector<AlgebraConfig>& declared) {
  SuiteRequest s;
  if (v.is_string()) {
    s.name = v.get<std::string>();
  } else if (v.is_object()) {
    reject_unknown(v, path, {"name", "algebras", "fixture"});
    s.name = require_string(require_key(v, path, "name"), path + ".name");
    if (v.contains("algebras")) {
      const json& list = v.at("algebras");
      if (!list.is_array()) schema_error(path + ".algebras", "expected an array");
      for (std::size_t i = 0; i < list.size(); ++i)
        s.algebras.push_back(
            require_string(list[i], path + ".algebras[" + std::to_string(i) + "]"));
    }
    if (v.contains("fixture"))
      s.fixture = require_string(v.at("fixture"), path + ".fixture");
  } else {
    schema_error(path, "expected a suite name or object");
  }
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), s.name) == names.end())
    schema_error(path + (v.is_object() ? ".name" : ""), "unknown suite '" + s.name + "'");
  for (std::size_t i = 0; i < s.algebras.size(); ++i) {
    const bool known = std::any_of(declared.begin(), declared.end(),
                                   [&](const AlgebraConfig& a) { return a.name == s.algebras[i]; });
    if (!known)
      schema_error(path + ".algebras[" + std::to_string(i) + "]",
                   "undeclared algebra '" + s.algebras[i] + "' in suite " + s.name);
  }
  if (!s.fixture.empty()) {
    const bool ok = (s.fixture == "broken_homomorphism" && s.name == "homomorphisms") ||
                    (s.fixture == "broken_bimorphism" && s.name == "tensor_iso");
    if (!ok)
      schema_error(path + ".fixture", "fixture '" + s.fixture + "' does not apply to suite " +
                                          s.name);
  }
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "core_axioms", "homomorphisms",      "free_product", "place_addition", "regularity",
      "tensor_iso",  "universal_property", "bands",        "completeness"};
  return names;
}

SuiteConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // "[json.exception.parse_error.101] parse error at line 3, column 5: ..."
    const auto at = msg.find("at line");
    throw ConfigError("syntax error " + (at == std::string::npos ? msg : msg.substr(at)));
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  reject_unknown(doc, "", {"algebras", "suites", "trials", "seed", "caps"});

  SuiteConfig cfg;
  if (doc.contains("caps")) {
    const json& caps = doc.at("caps");
    if (!caps.is_object()) schema_error("caps", "expected an object");
    reject_unknown(caps, "caps", {"max_atoms", "max_subset_enum"});
    if (caps.contains("max_atoms")) {
      const std::int64_t n = require_integer(caps.at("max_atoms"), "caps.max_atoms");
      if (n < 1 || n > kMaxPowersetAtoms)
        schema_error("caps.max_atoms", "cap exceeded (must lie in 1.." +
                                           std::to_string(kMaxPowersetAtoms) + ")");
      cfg.caps.max_atoms = static_cast<int>(n);
    }
    if (caps.contains("max_subset_enum")) {
      const std::int64_t n = require_integer(caps.at("max_subset_enum"), "caps.max_subset_enum");
      if (n < 0 || n > kMaxSubsetEnumAtoms)
        schema_error("caps.max_subset_enum", "cap exceeded (must lie in 0.." +
                                                 std::to_string(kMaxSubsetEnumAtoms) + ")");
      cfg.caps.max_subset_enum = static_cast<int>(n);
    }
  }

  const json& algebras = require_key(doc, "", "algebras");
  if (!algebras.is_array() || algebras.empty())
    schema_error("algebras", "expected a nonempty array");
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    AlgebraConfig a = parse_algebra(algebras[i], "algebras[" + std::to_string(i) + "]", cfg.caps);
    for (const AlgebraConfig& b : cfg.algebras)
      if (b.name == a.name)
        schema_error("algebras[" + std::to_string(i) + "].name",
                     "duplicate algebra name '" + a.name + "'");
    cfg.algebras.push_back(std::move(a));
  }

  const json& suites = require_key(doc, "", "suites");
  if (!suites.is_array() || suites.empty()) schema_error("suites", "expected a nonempty array");
  for (std::size_t i = 0; i < suites.size(); ++i)
    cfg.suites.push_back(parse_suite(suites[i], "suites[" + std::to_string(i) + "]", cfg.algebras));

  if (doc.contains("trials")) {
    const std::int64_t t = require_integer(doc.at("trials"), "trials");
    if (t < 1) schema_error("trials", "expected a positive count");
    if (static_cast<std::uint64_t>(t) > kMaxTrials)
      schema_error("trials", "cap exceeded (" + std::to_string(t) + " > " +
                                 std::to_string(kMaxTrials) + ")");
    cfg.trials = static_cast<std::size_t>(t);
  }
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
      schema_error("seed", "expected an unsigned 64-bit integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  return cfg;
}

}  // namespace balg
