#include "ccsim/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccsim/analytics.hpp"

namespace ccsim {
namespace optimizer {

namespace {

std::vector<int> support_of(const std::vector<Rat>& beta) {
  std::vector<int> support;
  for (int l = 0; l < static_cast<int>(beta.size()); ++l)
    if (beta[l] != 0) support.push_back(l);
  return support;
}

}  // namespace

int optimal_fixed_cardinality(int K, int N, const Rat& M, int I) {
  Rat t = Rat(K) * M / N;
  if (t < 1) throw std::invalid_argument("optimal_fixed_cardinality: KM/N < 1");
  if (I < 0 || I > K - 1) throw std::invalid_argument("optimal_fixed_cardinality: bad I");
  return static_cast<int>(to_int64(floor_rat(t)));
}

CoefficientVector coefficient_vector(int K, int I) {
  if (K < 2 || I < 1 || I > K - 1) throw std::invalid_argument("coefficient_vector: bad (K,I)");
  CoefficientVector cv;
  cv.K = K;
  cv.I = I;
  cv.c.reserve(K);
  for (int l = 0; l <= K - 1; ++l) {
    Rat value = make_rat(binomial(K, l + 1), binomial(K, l));
    if (l <= I - 1) value -= make_rat(binomial(I, l + 1), binomial(K, l));
    cv.c.push_back(value);
  }
  for (int l = 0; l + 1 <= K - 1; ++l) cv.d.push_back(cv.c[l + 1] - cv.c[l]);
  for (int l = 0; l + 1 <= K - 2; ++l) cv.e.push_back(cv.d[l + 1] - cv.d[l]);
  return cv;
}

LpSolution solve_lp_closed_form(int K, int N, const Rat& M, int I) {
  Rat t = Rat(K) * M / N;
  if (t <= 0 || t > K) throw std::invalid_argument("solve_lp_closed_form: t outside (0,K]");
  if (I < 0 || I > K - 1) throw std::invalid_argument("solve_lp_closed_form: bad I");
  std::vector<Rat> beta(K + 1, Rat(0));
  if (is_integer(t)) {
    beta[static_cast<std::size_t>(to_int64(numerator(t)))] = 1;
  } else {
    std::int64_t lo = to_int64(floor_rat(t));
    std::int64_t hi = lo + 1;
    Rat eta = Rat(hi) - t;  // ceil(t) - t
    beta[static_cast<std::size_t>(lo)] = eta;
    beta[static_cast<std::size_t>(hi)] = 1 - eta;
  }
  Rat objective = analytics::load_weighted(K, I, beta);
  return {WeightVector(std::move(beta)), objective, SolutionSource::ClosedForm};
}

std::vector<WeightVector> tight_vertices(int K, const Rat& t) {
  if (t < 0 || t > K) throw std::invalid_argument("tight_vertices: infeasible t");
  std::vector<WeightVector> vertices;
  if (is_integer(t)) {
    std::vector<Rat> beta(K + 1, Rat(0));
    beta[static_cast<std::size_t>(to_int64(numerator(t)))] = 1;
    vertices.emplace_back(std::move(beta));
  }
  for (int l1 = 0; l1 <= K; ++l1) {
    for (int l2 = l1 + 1; l2 <= K; ++l2) {
      if (Rat(l1) > t || Rat(l2) < t) continue;
      Rat b1 = (Rat(l2) - t) / (l2 - l1);
      Rat b2 = (t - Rat(l1)) / (l2 - l1);
      if (b1 <= 0 || b2 <= 0) continue;  // degenerate pairs collapse to singles
      std::vector<Rat> beta(K + 1, Rat(0));
      beta[l1] = b1;
      beta[l2] = b2;
      vertices.emplace_back(std::move(beta));
    }
  }
  return vertices;
}

LpSolution solve_lp_vertex_oracle(int K, int N, const Rat& M, int I) {
  if (K > 20) throw std::invalid_argument("solve_lp_vertex_oracle: K beyond oracle scale");
  Rat t = Rat(K) * M / N;
  if (t < 0 || t > K) throw std::invalid_argument("solve_lp_vertex_oracle: infeasible t");
  if (I < 0 || I > K - 1) throw std::invalid_argument("solve_lp_vertex_oracle: bad I");

  std::vector<std::vector<Rat>> candidates;
  // Single-index points, capacity possibly slack; includes l = 0.
  for (int l = 0; Rat(l) <= t && l <= K; ++l) {
    std::vector<Rat> beta(K + 1, Rat(0));
    beta[l] = 1;
    candidates.push_back(std::move(beta));
  }
  for (const WeightVector& w : tight_vertices(K, t)) candidates.push_back(w.values());

  const std::vector<Rat> closed = solve_lp_closed_form(K, N, M, I).weights.values();

  const std::vector<Rat>* best = nullptr;
  Rat best_objective;
  auto better = [&](const std::vector<Rat>& candidate, const Rat& objective) {
    if (!best) return true;
    if (objective != best_objective) return objective < best_objective;
    auto cs = support_of(candidate);
    auto bs = support_of(*best);
    if (cs.size() != bs.size()) return cs.size() < bs.size();
    bool c_canonical = candidate == closed;
    bool b_canonical = *best == closed;
    if (c_canonical != b_canonical) return c_canonical;
    return cs < bs;
  };
  for (const auto& candidate : candidates) {
    Rat objective = analytics::load_weighted(K, I, candidate);
    if (better(candidate, objective)) {
      best = &candidate;
      best_objective = objective;
    }
  }
  return {WeightVector(*best), best_objective, SolutionSource::VertexOracle};
}

}  // namespace optimizer
}  // namespace ccsim
