#include "donut/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "donut/errors.hpp"

namespace donut {

const char* to_string(TourPolicy p) {
  return p == TourPolicy::BTour ? "b-tour" : "hierholzer";
}

const char* to_string(MatchingMode m) {
  return m == MatchingMode::Structural ? "structural" : "oracle";
}

double default_epsilon(int k) { return std::sqrt(std::log(double(k)) / k); }

namespace {

struct TrialResult {
  long long euler = 0;
  long long shortcut_cost = 0;
  long long m1 = 0;
  long long m2 = 0;
};

struct TrialRunner {
  const KDonut& g;
  const Metric& metric;
  MatchingMode mode;
  TourPolicy policy;
  uint64_t seed;

  TrialResult run_choice(ChoiceVector cv, uint64_t trial) const {
    OneTree tree = build_one_tree(g, std::move(cv));
    TrialResult r;
    try {
      std::vector<int> odds = odd_vertices(g, tree);
      StructuralMatchings sm = structural_matchings(odds, metric);
      r.m1 = sm.m1.cost;
      r.m2 = sm.m2.cost;
      const PerfectMatching* pm = &sm.best();
      PerfectMatching oracle;
      if (mode == MatchingMode::Oracle) {
        oracle = oracle_min_matching(odds, metric);
        pm = &oracle;
      }
      EulerianSubgraph a = eulerian_subgraph(g, metric, tree, *pm);
      r.euler = a.cost;
      Tour tour = policy == TourPolicy::BTour
                      ? (pm->kind == MatchKind::M1 ? b_tour_m1(g, a)
                                                   : b_tour_m2(g, a))
                      : hierholzer_tour(a, mix64(seed ^ (trial * 0x9e3779b97f4a7c15ULL) ^ 0xe7037ed1a0b428dbULL));
      HamiltonianCycle h = shortcut(tour, metric);
      r.shortcut_cost = h.cost;
      if (policy == TourPolicy::BTour) {
        long long budget = pm->kind == MatchKind::M1 ? 9 : 2;
        if (r.euler - r.shortcut_cost > budget)
          throw claim_violation("shortcut-loss",
                                "B-tour lost more than the lemma allows");
      }
    } catch (claim_violation& cv_err) {
      cv_err.set_instance(g.k, tree.choice.to_string());
      throw;
    }
    return r;
  }

  TrialResult run_trial(uint64_t trial) const {
    return run_choice(
        ChoiceVector::draw(g.k, BitSource::from_seed(seed, trial)), trial);
  }
};

std::string rational(long long num, long long den) {
  long long g = std::gcd(num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

void run_parallel(long long trials, int threads,
                  const std::function<void(long long)>& body) {
  if (threads <= 1) {
    for (long long t = 0; t < trials; ++t) body(t);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<long long> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      try {
        for (long long t = next++; t < trials; t = next++) body(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

ExperimentReport estimate_ratio(const ExperimentConfig& cfg) {
  if (cfg.k < 3) throw std::invalid_argument("k must be at least 3");
  if (!cfg.exhaustive && cfg.trials < 1)
    throw std::invalid_argument("at least one trial required");
  if (cfg.matching == MatchingMode::Oracle && 2 * cfg.k > 24)
    throw std::invalid_argument("oracle matching is capped at 2k <= 24");
  if (cfg.matching == MatchingMode::Oracle && cfg.policy == TourPolicy::BTour)
    throw std::invalid_argument("B-tours are defined for the structural matchings only");

  KDonut g = build_kdonut(cfg.k);
  Metric metric = shortest_path_metric(g);
  TrialRunner runner{g, metric, cfg.matching, cfg.policy, cfg.seed};

  double eps = cfg.epsilon >= 0 ? cfg.epsilon : default_epsilon(cfg.k);
  long long opt = 4LL * cfg.k + 2;
  // both-matchings-large threshold: c >= (3/2 - eps) k
  double thr = (1.5 - eps) * cfg.k;

  long long trials = cfg.trials;
  if (cfg.exhaustive) {
    if (cfg.k > 10)
      throw std::invalid_argument("exhaustive mode is capped at k <= 10");
    trials = 1LL << (2 * cfg.k + 1);
  }

  std::vector<TrialResult> results(trials);
  run_parallel(trials, cfg.threads, [&](long long t) {
    results[t] = cfg.exhaustive
                     ? runner.run_choice(ChoiceVector::from_index(cfg.k, t), t)
                     : runner.run_trial(t);
  });

  long long sum_euler = 0, sum_short = 0, both_large = 0;
  long long sum_euler_sq = 0;
  for (const TrialResult& r : results) {
    sum_euler += r.euler;
    sum_short += r.shortcut_cost;
    sum_euler_sq += r.euler * r.euler;
    if (double(r.m1) >= thr - 1e-12 && double(r.m2) >= thr - 1e-12)
      ++both_large;
  }

  ExperimentReport rep;
  rep.k = cfg.k;
  rep.trials = trials;
  rep.seed = cfg.seed;
  rep.matching_mode = to_string(cfg.matching);
  rep.tour_policy = to_string(cfg.policy);
  rep.exhaustive = cfg.exhaustive;
  rep.epsilon = eps;
  rep.mean_euler_cost = double(sum_euler) / trials;
  rep.mean_shortcut_cost = double(sum_short) / trials;
  rep.ratio_euler = rep.mean_euler_cost / opt;
  rep.ratio_shortcut = rep.mean_shortcut_cost / opt;
  rep.concentration = double(both_large) / trials;
  if (cfg.exhaustive) {
    rep.std_error = 0;  // exact average, no sampling error
    rep.ratio_euler_exact = rational(sum_euler, trials * opt);
    rep.concentration_exact = rational(both_large, trials);
  } else {
    double var = (double(sum_euler_sq) -
                  double(sum_euler) * double(sum_euler) / trials) /
                 std::max<long long>(1, trials - 1);
    rep.std_error = std::sqrt(var / trials) / opt;
  }
  return rep;
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["trials"] = trials;
  j["seed"] = seed;
  j["matching"] = matching_mode;
  j["policy"] = tour_policy;
  j["exhaustive"] = exhaustive;
  j["epsilon"] = epsilon;
  j["mean_euler_cost"] = mean_euler_cost;
  j["mean_shortcut_cost"] = mean_shortcut_cost;
  j["ratio_euler"] = ratio_euler;
  j["ratio_shortcut"] = ratio_shortcut;
  j["std_error"] = std_error;
  j["concentration"] = concentration;
  if (!ratio_euler_exact.empty()) {
    j["ratio_euler_exact"] = ratio_euler_exact;
    j["concentration_exact"] = concentration_exact;
  }
  return j;
}

ConcentrationResult concentration_check(int k, long long trials, double epsilon,
                                        uint64_t seed, bool exhaustive,
                                        int threads) {
  if (epsilon <= 0 || epsilon >= 0.5)
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  ExperimentConfig cfg;
  cfg.k = k;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.matching = MatchingMode::Structural;
  cfg.policy = TourPolicy::BTour;
  cfg.epsilon = epsilon;
  cfg.exhaustive = exhaustive;
  cfg.threads = threads;
  ExperimentReport rep = estimate_ratio(cfg);
  ConcentrationResult res;
  res.fraction = rep.concentration;
  res.bound = 1.0 - 2.0 * std::exp(-2.0 * epsilon * epsilon * k / 3.0);
  res.std_error =
      std::sqrt(res.fraction * (1.0 - res.fraction) / double(rep.trials));
  res.exact = rep.concentration_exact;
  return res;
}

std::vector<ExperimentReport> ratio_sweep(const std::vector<int>& ks,
                                          long long trials, uint64_t seed,
                                          TourPolicy policy, int threads) {
  if (ks.empty()) throw std::invalid_argument("sweep needs at least one k");
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  std::vector<ExperimentReport> reports;
  for (int k : ks) {
    ExperimentConfig cfg;
    cfg.k = k;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.policy = policy;
    cfg.threads = threads;
    reports.push_back(estimate_ratio(cfg));
  }
  return reports;
}

std::string sweep_csv(const std::vector<ExperimentReport>& reports) {
  std::string csv = "k,trials,ratio_euler,ratio_shortcut,stderr\n";
  char line[160];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof(line), "%d,%lld,%.6f,%.6f,%.6f\n", r.k, r.trials,
                  r.ratio_euler, r.ratio_shortcut, r.std_error);
    csv += line;
  }
  return csv;
}

}  // namespace donut
