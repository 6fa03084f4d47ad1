#include "shatter/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "shatter/convexity.hpp"
#include "shatter/errors.hpp"
#include "shatter/generators.hpp"

namespace shatter {

std::string_view to_string(SearchGoal g) { return g == SearchGoal::dual_vc ? "dual-vc" : "radon"; }

SearchGoal parse_goal(std::string_view name) {
  if (name == "dual-vc" || name == "vc-star") return SearchGoal::dual_vc;
  if (name == "radon") return SearchGoal::radon;
  throw PreconditionError("unknown goal '" + std::string(name) + "' (expected dual-vc or radon)");
}

long long search_objective(SearchGoal goal, const ConceptClass& c) {
  const auto d = vc(c);
  const auto two_d = 2 * static_cast<long long>(d);
  if (goal == SearchGoal::dual_vc) return static_cast<long long>(vc_star(c)) - two_d;
  return static_cast<long long>(radon_number(c, 2 * d + 2).value) - two_d;
}

namespace {

SearchConfig resolved(SearchConfig config) {
  if (config.d < 1) throw PreconditionError("search: d must be at least 1");
  if (config.n == 0) config.n = 4 * (config.d + 1);
  if (config.max_size == 0) config.max_size = 4 * config.n;
  if (config.n <= config.d) throw PreconditionError("search: n must exceed d");
  if (config.n > 64) throw PreconditionError("search: n must be at most 64");
  return config;
}

Concept random_concept(std::size_t n, std::mt19937_64& rng) {
  Concept c(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) c.set(i);
  }
  return c;
}

bool admissible(const ConceptClass& c, std::size_t d, std::size_t max_size) {
  return !c.empty() && c.size() <= max_size && vc(c) == d && is_extremal(c);
}

// Proposes a neighbouring class: add a neighbour of a member, remove a
// member, or move one member along an edge.
ConceptClass propose(const ConceptClass& c, std::mt19937_64& rng) {
  const std::size_t n = c.domain_size();
  std::vector<Concept> members(c.begin(), c.end());
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::uniform_int_distribution<std::size_t> coord(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: {
      Concept x = members[pick(rng)];
      x.flip(coord(rng));
      if (!c.contains(x)) members.push_back(std::move(x));
      break;
    }
    case 1:
      if (members.size() > 1) members.erase(members.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
      break;
    default: {
      const auto i = pick(rng);
      Concept x = members[i];
      x.flip(coord(rng));
      if (!c.contains(x)) members[i] = std::move(x);
      break;
    }
  }
  return ConceptClass::deduplicated(n, std::move(members));
}

}  // namespace

ConceptClass search_initial_class(const SearchConfig& config) {
  const auto cfg = resolved(config);
  std::mt19937_64 rng(cfg.seed);
  return gen_ball(random_concept(cfg.n, rng), cfg.d);
}

SearchState stochastic_search(const SearchConfig& config) {
  const auto cfg = resolved(config);
  std::mt19937_64 rng(cfg.seed);
  SearchState s;
  s.seed = cfg.seed;
  s.goal = cfg.goal;
  s.d = cfg.d;
  s.current = gen_ball(random_concept(cfg.n, rng), cfg.d);
  s.current_objective = search_objective(cfg.goal, s.current);
  s.best = s.current;
  s.best_objective = s.current_objective;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (s.iterations < cfg.budget && s.best_objective < 1) {
    ++s.iterations;
    auto candidate = propose(s.current, rng);
    if (candidate == s.current || !admissible(candidate, cfg.d, cfg.max_size)) continue;
    const auto objective = search_objective(cfg.goal, candidate);
    const double progress = static_cast<double>(s.iterations) / static_cast<double>(cfg.budget);
    const double temperature = std::max(0.05, 1.0 - progress);
    const auto delta = static_cast<double>(objective - s.current_objective);
    if (delta >= 0 || unit(rng) < std::exp(delta / temperature)) {
      s.current = std::move(candidate);
      s.current_objective = objective;
      if (objective > s.best_objective) {
        s.best = s.current;
        s.best_objective = objective;
      }
    }
  }
  return s;
}

std::vector<SearchState> stochastic_search_many(const SearchConfig& config, std::size_t restarts,
                                                std::size_t workers) {
  std::vector<SearchState> out(restarts);
  std::vector<std::exception_ptr> errors(restarts);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < restarts;) {
      try {
        auto cfg = config;
        cfg.seed = config.seed + i;
        out[i] = stochastic_search(cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(workers, restarts));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

nlohmann::ordered_json to_json(const SearchState& s) {
  nlohmann::ordered_json j;
  j["seed"] = s.seed;
  j["goal"] = to_string(s.goal);
  j["d"] = s.d;
  j["iterations"] = s.iterations;
  j["current_objective"] = s.current_objective;
  j["best_objective"] = s.best_objective;
  j["refuted"] = s.refuted();
  j["best"] = s.best.to_strings();
  j["current"] = s.current.to_strings();
  return j;
}

}  // namespace shatter
