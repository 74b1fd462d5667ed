#include "ccsim/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace ccsim {
namespace analytics {

namespace {

void require_users(int K) {
  if (K < 2) throw std::invalid_argument("need at least two users");
}

int integer_replication(int K, int N, const Rat& M) {
  Rat t = Rat(K) * M / N;
  if (!is_integer(t)) throw std::invalid_argument("KM/N must be an integer here");
  return static_cast<int>(to_int64(numerator(t)));
}

}  // namespace

Rat load_fixed(int K, int N, const Rat& M, int l, int I) {
  require_users(K);
  (void)N;
  (void)M;
  if (l < 1 || l > K - 1) throw std::invalid_argument("load_fixed: cardinality out of range");
  if (I < 0 || I > K) throw std::invalid_argument("load_fixed: I out of range");
  if (l + 1 > I) return make_rat(binomial(K, l + 1), binomial(K, l));
  return make_rat(binomial(K, l + 1) - binomial(I, l + 1), binomial(K, l));
}

Rat load_weighted(int K, int I, const std::vector<Rat>& beta) {
  require_users(K);
  if (static_cast<int>(beta.size()) != K + 1)
    throw std::invalid_argument("load_weighted: need K+1 weights");
  if (I < 0 || I > K) throw std::invalid_argument("load_weighted: I out of range");
  Rat total = 0;
  for (int l = 0; l <= K - 1; ++l) {
    Rat coeff = make_rat(binomial(K, l + 1), binomial(K, l));
    if (l <= I - 1) coeff -= make_rat(binomial(I, l + 1), binomial(K, l));
    total += coeff * beta[l];
  }
  return total;
}

double load_decentralized(int K, const Rat& M, int N, int I) {
  if (K < 1) throw std::invalid_argument("load_decentralized: need at least one user");
  if (I < 0 || I > K) throw std::invalid_argument("load_decentralized: I out of range");
  Rat q = M / N;
  if (q < 0 || q > 1) throw std::invalid_argument("load_decentralized: M/N out of range");
  int J = K - I;
  if (q == 0) return static_cast<double>(J);
  if (q == 1) return 0.0;
  double qd = to_double(q);
  return (1.0 - qd) / qd * (1.0 - std::pow(1.0 - qd, J));
}

Rat load_ideal_man(int K, int N, const Rat& M, int I) {
  require_users(K);
  if (I < 0 || I > K) throw std::invalid_argument("load_ideal_man: I out of range");
  int J = K - I;
  Rat ratio = M / N;
  return Rat(J) * (Rat(1) - ratio) / (Rat(1) + Rat(J) * ratio);
}

Rat load_ideal_man_floor(int K, int N, const Rat& M, int I) {
  require_users(K);
  if (I < 0 || I >= K) throw std::invalid_argument("load_ideal_man_floor: I out of range");
  int J = K - I;
  std::int64_t lt = to_int64(floor_rat(Rat(J) * M / N));
  return make_rat(binomial(J, lt + 1), binomial(J, lt));
}

Rat load_unicast(int K, int N, const Rat& M, int I) {
  require_users(K);
  if (I < 0 || I > K) throw std::invalid_argument("load_unicast: I out of range");
  return Rat(K - I) * (Rat(1) - M / N);
}

double gain_cd(int K, int N, const Rat& M, int I) {
  int t = integer_replication(K, N, M);
  if (I < 1 || I > K - 1) throw std::invalid_argument("gain_cd: I out of range");
  return load_decentralized(K, M, N, I) - to_double(load_fixed(K, N, M, t, I));
}

Rat gap_vs_ideal(int K, int N, const Rat& M, int I) {
  int t = integer_replication(K, N, M);
  if (I < 1 || I > K) throw std::invalid_argument("gap_vs_ideal: I out of range");
  return load_fixed(K, N, M, t, I) - load_ideal_man(K, N, M, I);
}

Rat gap_start_delta(int K, int t) {
  if (K < 3 || t < 1 || t > K - 2) throw std::invalid_argument("gap_start_delta: bad (K,t)");
  Rat M(t);  // N = K makes M/N = t/K with integer replication t
  return gap_vs_ideal(K, K, M, t + 2) - gap_vs_ideal(K, K, M, t + 1);
}

GapStartSign classify_gap_start(int K, int t) {
  if (K < 3 || t < 1 || t > K - 2)
    throw std::invalid_argument("classify_gap_start: outside table domain");
  if (t == K - 2) return GapStartSign::Negative;
  if (K >= 9) return GapStartSign::Positive;           // t in [1..K-3]
  if (K >= 6) return t <= K - 4 ? GapStartSign::Positive : GapStartSign::Negative;
  return GapStartSign::Negative;                       // K in [4..5], t in [1..K-3]
}

void LoadCurve::append(long x, std::variant<Rat, double> load) {
  if (!points.empty() && points.back().x >= x)
    throw std::invalid_argument("LoadCurve: x must be strictly increasing");
  points.push_back({x, std::move(load)});
}

}  // namespace analytics
}  // namespace ccsim
