#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/certificate.hpp"
#include "balg/verdict.hpp"

namespace balg {

inline constexpr int kReportVersion = 1;
inline constexpr int kMaxSubsetEnumAtoms = 4;
inline constexpr std::size_t kMaxTrials = 100000;

struct AlgebraConfig {
  std::string name;
  std::string kind;  // "powerset" or "finite_cofinite"
  int atoms = 0;
  bool trivial = false;
  Algebra algebra = Algebra::trivial();
};

struct SuiteRequest {
  std::string name;
  /// Declared algebra names; empty means every declared algebra.
  std::vector<std::string> algebras;
  /// "", "broken_homomorphism" (homomorphisms) or "broken_bimorphism"
  /// (tensor_iso).
  std::string fixture;
};

struct Caps {
  int max_atoms = kMaxPowersetAtoms;
  int max_subset_enum = kMaxSubsetEnumAtoms;
};

struct SuiteConfig {
  std::vector<AlgebraConfig> algebras;
  std::vector<SuiteRequest> suites;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  Caps caps;
};

/// core_axioms, homomorphisms, free_product, place_addition, regularity,
/// tensor_iso, universal_property, bands, completeness.
const std::vector<std::string>& suite_names();

/// Parses and validates a JSON configuration. Throws ConfigError with the
/// offending line (syntax) or field path (schema).
SuiteConfig parse_config(std::string_view text);

enum class SuiteStatus { pass, fail, skipped };

struct SuiteResult {
  std::string name;
  std::string target;
  SuiteStatus status = SuiteStatus::pass;
  Verdict verdict;
  std::optional<Certificate> certificate;
  /// Extra report fields, already serialized.
  std::vector<std::pair<std::string, std::string>> info;
  double elapsed_ms = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<SuiteResult> suites;

  bool pass() const;
};

/// Runs every requested suite on each of its targets. Each (suite, target)
/// job draws from its own stream seeded by the configured seed and its
/// label, so results do not depend on scheduling.
Report run_suite(const SuiteConfig& cfg, bool parallel = true);

/// One suite on one target list; throws ConfigError for unknown suites.
std::vector<SuiteResult> run_one(const SuiteConfig& cfg, const SuiteRequest& request);

enum class ReportFormat { json, text };

std::string render_report(const Report& report, ReportFormat format,
                          bool include_timing = true);

}  // namespace balg
