#pragma once

#include <vector>

#include "ccsim/placement.hpp"
#include "ccsim/rational.hpp"

namespace ccsim {
namespace optimizer {

/// Best fixed subpacketization cardinality in the presence of inactivity:
/// floor(KM/N), independent of I. Requires KM/N >= 1.
int optimal_fixed_cardinality(int K, int N, const Rat& M, int I);

// The objective coefficients of the weighted problem and their first and
// second differences. c[l] for l in [0..K-1], d[l] = c[l+1]-c[l],
// e[l] = d[l+1]-d[l]; the vector is piecewise around l = I.
struct CoefficientVector {
  int K;
  int I;
  std::vector<Rat> c;
  std::vector<Rat> d;
  std::vector<Rat> e;

  /// Last coefficient of the inactivity-corrected piece, c[I-1].
  const Rat& before_junction() const { return c.at(I - 1); }
  /// First coefficient of the plain piece, c[I].
  const Rat& after_junction() const { return c.at(I); }
  /// First difference across the junction, c[I] - c[I-1].
  Rat junction_difference() const { return c.at(I) - c.at(I - 1); }
  /// First difference just after the junction, c[I+1] - c[I]; needs I <= K-2.
  Rat post_junction_difference() const { return c.at(I + 1) - c.at(I); }
};

CoefficientVector coefficient_vector(int K, int I);

enum class SolutionSource { ClosedForm, VertexOracle };

struct LpSolution {
  WeightVector weights;
  Rat objective;
  SolutionSource source;
};

/// Closed-form optimum: weight 1 at t when t = KM/N is an integer, otherwise
/// ceil(t)-t at floor(t) and the rest at ceil(t). Requires 0 < t < K... the
/// boundary t = K (full replication) is also accepted and yields weight 1 at K.
LpSolution solve_lp_closed_form(int K, int N, const Rat& M, int I);

/// Independent brute-force optimum by exact vertex enumeration of
/// {sum beta = 1, sum l beta <= t, beta >= 0}: all single-index points with
/// l <= t (capacity possibly slack) and all two-index points that meet the
/// capacity with equality. Ties prefer fewest nonzeros, then the closed-form
/// support, then lexicographically smallest support. K <= 20.
LpSolution solve_lp_vertex_oracle(int K, int N, const Rat& M, int I);

/// Every vertex of the capacity-tight polytope face, for constant-objective
/// sweeps: beta with support {l} (integer t only) or {l1,l2}, sum l beta = t.
std::vector<WeightVector> tight_vertices(int K, const Rat& t);

}  // namespace optimizer
}  // namespace ccsim
