#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cograph_hc/graph.hpp"

namespace cohc::oracle {

enum class TheoremId { T1, L2, L3, GreedyIff, T3, T4, Count };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::T1, TheoremId::L2, TheoremId::L3, TheoremId::GreedyIff,
                                             TheoremId::T3, TheoremId::T4, TheoremId::Count};

/// "T1", "L2", "L3", "T-greedy-iff", "T3", "T4", "COUNT".
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

struct Counterexample {
  std::size_t instance = 0;
  std::string graph;     // edges as "a-b c-d", empty when there are none
  std::string cotree;    // Newick, empty when no single cotree is involved
  std::string coloring;  // colors in vertex order
  std::string detail;
};

struct TheoremReport {
  TheoremId id = TheoremId::T1;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // the first few, by instance
  std::vector<std::string> notes;

  bool passed() const { return counterexample_count == 0; }
};

struct CheckOptions {
  std::vector<TheoremId> theorems;  // empty: all
  std::size_t threads = 0;          // 0: auto
  std::size_t max_listed = 5;       // counterexamples kept per theorem
};

/// Parallelism to use: `requested`, or the hardware count when 0, capped by
/// COGRAPH_HC_THREADS when that is set to a positive number.
std::size_t resolve_threads(std::size_t requested);

/// Runs the selected cross-checks on every corpus graph. Non-cographs are
/// skipped with a "not-a-cograph" note. Results do not depend on the thread
/// count. Throws "size-guard" for graphs above the oracle limits.
std::vector<TheoremReport> check_theorems(const std::vector<Graph>& corpus, const CheckOptions& options = {});

/// Details per report followed by one line
/// `THEOREM <id> PASS|FAIL checked=<k> counterexamples=<m>` each.
std::string format_reports(const std::vector<TheoremReport>& reports);

}  // namespace cohc::oracle
