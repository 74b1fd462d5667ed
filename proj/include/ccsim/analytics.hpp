#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccsim/rational.hpp"

namespace ccsim {
namespace analytics {

/// Worst-case load of the fixed-cardinality scheme with I inactive users:
/// C(K,l+1)/C(K,l) when l+1 > I, else (C(K,l+1) - C(I,l+1))/C(K,l).
/// Exact. I may be K, where the load is 0.
Rat load_fixed(int K, int N, const Rat& M, int l, int I);

/// Exact objective of the weighted subpacketization problem:
/// sum_l (K-l)/(l+1) beta[l] - sum_{l<I} C(I,l+1)/C(K,l) beta[l].
Rat load_weighted(int K, int I, const std::vector<Rat>& beta);

/// Decentralized load (1-q)/q (1-(1-q)^(K-I)) with q = M/N, in double
/// precision; q -> 0 gives K-I, q -> 1 gives 0.
double load_decentralized(int K, const Rat& M, int N, int I);

/// Load of the rebuilt scheme that knows the inactive set before placement:
/// J(1-M/N)/(1+JM/N) with J = K-I, exact. I may be K (load 0).
Rat load_ideal_man(int K, int N, const Rat& M, int I);

/// Floor variant of the ideal baseline when JM/N is not an integer:
/// C(J,lt+1)/C(J,lt) with lt = floor(JM/N).
Rat load_ideal_man_floor(int K, int N, const Rat& M, int I);

/// Uncoded unicast baseline (K-I)(1-M/N), exact.
Rat load_unicast(int K, int N, const Rat& M, int I);

/// Gain of the coordinated scheme over the decentralized one,
/// load_decentralized - load_fixed(l=t); requires integer t = KM/N.
double gain_cd(int K, int N, const Rat& M, int I);

/// Exact gap load_fixed(l=t) - load_ideal_man; requires integer t = KM/N.
/// I may be K, where the gap is 0.
Rat gap_vs_ideal(int K, int N, const Rat& M, int I);

/// First difference of the gap at the start of its second branch:
/// gap(t+2) - gap(t+1) evaluated with M/N = t/K, exact.
Rat gap_start_delta(int K, int t);

enum class GapStartSign { Positive, Negative };

/// Predicted sign of gap_start_delta from the case table over (K, t);
/// K >= 3, t in [1..K-2].
GapStartSign classify_gap_start(int K, int t);

// A swept curve for CSV emission: exact points for centralized formulas,
// floating point for decentralized ones.
struct LoadPoint {
  long x;
  std::variant<Rat, double> load;
};

struct LoadCurve {
  std::string scheme;
  char axis;  // 'I' or 'M'
  std::vector<LoadPoint> points;

  void append(long x, std::variant<Rat, double> load);
};

}  // namespace analytics
}  // namespace ccsim
