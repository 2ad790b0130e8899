#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "mperturb/text_input.hpp"

namespace mperturb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class InvariantKind { hs, hk, h1cond, dim };

std::string to_string(InvariantKind kind);
/// Accepts "hs", "hk", "h1", "h1cond" and "dim".
InvariantKind parse_invariant(std::string_view text);

/// Exact rational from "a", "a/b" or a decimal such as "0.05".
mpq_class parse_rational(std::string_view text);

struct Limits {
  std::uint64_t max_steps = 1'000'000;
  std::uint64_t monomial_cap = 100'000;
  unsigned n_max = 12;
  unsigned e_max = 4;
  std::string delta = "1/20";
};

enum class ScanMode {
  /// Replace f_i by f_i + eps_i for eps of order T.
  perturbation,
  /// Adjoin u_i with u_i^n = f_i for each scanned n; the base is R/(f).
  root_adjunction,
};

/// A scan described entirely by text, so it can come from a task file or the
/// built-in catalog.
struct ScanConfig {
  RingSpec ring;
  std::vector<std::string> ideal;
  InvariantKind invariant = InvariantKind::hs;
  /// Generators of J, or the single word "maximal".
  std::vector<std::string> j = {"maximal"};
  ScanMode mode = ScanMode::perturbation;
  /// Scanned orders T (root exponents n in root-adjunction mode).
  std::vector<unsigned> orders;
  unsigned trials = 1;
  /// When non-empty, fixed perturbations per order (one string per generator)
  /// replace random sampling.
  std::map<unsigned, std::vector<std::string>> fixed_eps;
  unsigned degree_window = 2;
  unsigned terms_per_eps = 3;
  std::uint64_t seed = 0;
  Limits limits;
  unsigned jobs = 1;
  /// Optional expectations for the base value and per order.
  std::optional<std::string> expected_base;
  std::map<unsigned, std::string> expected;
  std::string expected_source;
  /// Hypotheses verified by hand for catalog entries; user scans carry
  /// "unchecked".
  std::vector<std::string> hypotheses = {"unchecked"};
};

struct ScanRow {
  unsigned T = 0;
  unsigned trial = 0;
  std::vector<std::string> perturbation;
  std::vector<std::string> generators;
  /// Headline value of the invariant, as exact text.
  std::string value;
  Json values = Json::object();
  /// "match", "differs", "undetermined" or "error".
  std::string verdict;
  std::optional<std::string> expected;
  std::optional<bool> matches_expected;
  std::optional<std::string> error;
};

struct ScanReport {
  Json meta = Json::object();
  Json base = Json::object();
  std::vector<ScanRow> rows;
  /// Smallest scanned T from which every row at that and all larger scanned
  /// orders matches the base.
  std::optional<unsigned> threshold;
  std::string threshold_note;

  Json to_json() const;
  static ScanReport from_json(const Json& j);
  /// Two-space indented JSON with a trailing newline.
  std::string dump() const;
  /// RFC 4180: header plus one CRLF-terminated record per row.
  std::string to_csv() const;
  /// Every embedded expectation (base and rows) is met.
  bool meets_expectations() const;
};

/// Runs the scan. Row failures (budget, preconditions) are recorded in the
/// row; errors in the base computation propagate.
ScanReport stability_scan(const ScanConfig& config);

struct CatalogEntry {
  std::string name;
  std::string description;
  ScanConfig config;
};

std::vector<CatalogEntry> example_catalog();
/// Throws PreconditionError for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace mperturb
