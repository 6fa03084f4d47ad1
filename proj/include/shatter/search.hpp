#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shatter/concept_class.hpp"

namespace shatter {

enum class SearchGoal {
  dual_vc,  // vc* - 2·vc
  radon,    // r - 2·vc
};

std::string_view to_string(SearchGoal g);
SearchGoal parse_goal(std::string_view name);

struct SearchConfig {
  SearchGoal goal = SearchGoal::radon;
  std::size_t d = 1;
  /// Domain size; 0 picks 4(d+1).
  std::size_t n = 0;
  /// Cap on |C|; 0 picks 4·n.
  std::size_t max_size = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000;
};

/// Local search over extremal classes with vc = d.
struct SearchState {
  std::uint64_t seed = 0;
  SearchGoal goal = SearchGoal::radon;
  std::size_t d = 0;
  ConceptClass current;
  long long current_objective = 0;
  ConceptClass best;
  long long best_objective = 0;
  std::uint64_t iterations = 0;

  /// The objective exceeds +1: an extremal class beating the proven bound.
  bool refuted() const { return best_objective > 1; }
};

/// Objective of a class under a goal.
long long search_objective(SearchGoal goal, const ConceptClass& c);

/// Hamming ball of radius d around a seeded random centre in {0,1}^n.
ConceptClass search_initial_class(const SearchConfig& config);

/// Seeded simulated annealing. Only moves that keep the class extremal with
/// vc = d and within the size cap are considered. Stops early once the
/// objective reaches +1; otherwise spends the whole budget.
SearchState stochastic_search(const SearchConfig& config);

/// One search per seed in [config.seed, config.seed + restarts), run on up to
/// `workers` threads. Results are in seed order.
std::vector<SearchState> stochastic_search_many(const SearchConfig& config, std::size_t restarts,
                                                std::size_t workers);

nlohmann::ordered_json to_json(const SearchState& s);

}  // namespace shatter
