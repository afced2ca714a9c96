#pragma once

// Brute-force references for the criteria in parabolic/fibration. These use
// only root closure, subset enumeration and set containment, never the
// criteria they are compared against.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crflag/parabolic.hpp"

namespace crflag {

/// closure(Q ∪ sigma Q) == R
bool oracle_fundamental(const CrossedDiagram& cd);

struct WeakOracleResult {
  bool nondegenerate = true;
  /// ⊆-smallest Psi ⊊ Phi with Q_Psi ⊆ Q ∪ sigma Q, when one exists.
  std::optional<NodeSet> largest;
};

/// Enumerates every proper subset of Phi. Throws AmbiguousLargest when the
/// satisfying subsets have two incomparable minimal elements.
WeakOracleResult oracle_weak_largest(const CrossedDiagram& cd);

struct Mismatch {
  std::string form;
  NodeSet cross;
  std::string property;
  std::string expected;
  std::string got;
};

struct SweepReport {
  int rank_bound = 0;
  std::size_t forms_checked = 0;
  std::size_t instances_checked = 0;
  /// Number of evaluations per property name.
  std::map<std::string, std::size_t> checks;
  /// Sorted by form name, then cross bitmask.
  std::vector<Mismatch> mismatches;
};

struct SweepForm {
  std::string name;
  SatakeDiagram diagram;
};

/// Catalog forms of rank <= rank_bound plus all direct sums of two of them
/// with total rank <= rank_bound, sorted by name.
std::vector<SweepForm> sweep_forms(int rank_bound);

/// Checks every (form, Phi) instance; see README for the property list.
/// `threads` <= 0 picks the hardware concurrency.
SweepReport sweep_consistency(int rank_bound, int threads = 0);

/// Runs all checks on a single instance, appending mismatches to `report`.
void check_instance(const std::string& form, const CrossedDiagram& cd, SweepReport& report);

}  // namespace crflag
