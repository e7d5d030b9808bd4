#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/corpus.hpp"
#include "mlat/quantale.hpp"

namespace mlat {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string id;                  // e.g. "T16.11"
  CheckStatus status = CheckStatus::Pass;
  std::string reason;              // skip reason, e.g. "not-reduced"
  std::optional<std::vector<ElementId>> witness;  // set on FAIL when one exists
  std::string detail;              // human-readable note, text output only

  /// "PASS", "FAIL" or "SKIPPED(<reason>)".
  std::string status_text() const;
};

struct TheoremReport {
  std::string lattice;
  std::vector<CheckResult> checks;
  double wall_seconds = 0;

  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::Fail) == 0; }
  const CheckResult* find(std::string_view id) const;

  /// Array of {id, status, witness}; deterministic for a given input.
  std::string to_json() const;
  std::string to_text() const;
};

struct CheckInfo {
  std::string id;
  std::string title;
  bool reduced_only = false;
};

/// The stable catalog T1 .. T23 with one id per numbered clause.
const std::vector<CheckInfo>& check_catalog();

struct SuiteOptions {
  /// Id filters: "T16" selects T16 and T16.*, "T16.3" selects that clause.
  std::vector<std::string> only;
  /// Run reduced-only checks on non-reduced input instead of skipping them.
  bool ignore_reduced = false;
};

/// True if `id` is selected by `filter` ("T1" matches T1 and T1.x, not T16).
bool id_matches(std::string_view id, std::string_view filter);

TheoremReport run_suite(const MultLattice& M, const SuiteOptions& options = {},
                        std::string lattice_name = {});

struct SearchResult {
  std::optional<MultLattice> hit;
  std::vector<ElementId> witness;
  std::size_t examined = 0;
};

/// Predicates understood by search().
const std::vector<std::string>& search_predicates();

/// True when M satisfies the named predicate; fills `witness` where useful.
/// Throws Error{UnknownPredicate}.
bool evaluate_predicate(std::string_view predicate, const MultLattice& M,
                        std::vector<ElementId>& witness);

/// First structure, in enumeration order, satisfying the predicate. The
/// one-element lattice is not examined.
SearchResult search(const EnumerationConfig& config, std::string_view predicate);

}  // namespace mlat
