#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "pvertex/graph.hpp"
#include "pvertex/witness.hpp"

namespace pvertex {

struct SearchConfig {
  int restarts = 16;
  int max_iters = 400;
  double residual_tol = 1e-10;  // target for max_i |(A^-1)_ii|
  double det_floor = 1e-4;      // minimum |det A| accepted
  std::uint64_t seed = 1;
  long rationalize_max_denominator = 1000000;
};

// Floating-point candidate: symmetric matrix on the graph's pattern with
// every off-diagonal entry's magnitude kept >= 1e-3 by construction.
struct NumericWitness {
  Eigen::MatrixXd matrix;
  double residual = 0;  // max_i |(A^-1)_ii| at this point
  double det_estimate = 0;
  double condition_estimate = 0;
  int restart_index = -1;
  std::uint64_t seed = 0;  // config seed that produced this point
};

// Levenberg-Marquardt least squares on the residuals r_i = (A^-1)_ii with the
// analytic Jacobian d(A^-1)_ii/da_kl = -2 (A^-1)_ik (A^-1)_li for k != l and
// -((A^-1)_ik)^2 for k = l, plus a hinge residual that activates when |det A|
// sinks below det_floor. Edge weights are reparametrized through a softplus
// map with floor 1e-3 and a per-restart random sign; diagonals start uniform
// in (-2, 2), edge magnitudes uniform in (0.5, 2). Restarts draw from a
// generator seeded by (cfg.seed, restart index), and the winner is the
// successful restart with the lexicographically smallest (residual, index),
// so sequential and parallel schedules agree. Returns nullopt when no restart
// reaches residual_tol with |det| >= det_floor. Requires a connected graph
// with n >= 2 (std::invalid_argument).
std::optional<NumericWitness> search_witness(const Graph& g, const SearchConfig& cfg);

// point = (n diagonal entries, then one weight per edge in lexicographic edge
// order), taken literally with no reparametrization. Compares the analytic
// gradient of F = sum_i ((A^-1)_ii)^2 against central finite differences with
// step 1e-6 and returns the worst relative error, where each coordinate's
// error is |ga - gn| / max(1, |ga|, |gn|). Throws SingularPointError when
// A(point) is not comfortably invertible.
double gradient_check(const Graph& g, const std::vector<double>& point);

// Rounds every entry to the nearest rational with denominator <= max_den via
// continued fractions. Edge entries keep their sign: a round-to-zero or sign
// flip is replaced by sign * 1/max_den so the support stays exact. Returns a
// Witness only when exact re-verification succeeds.
std::optional<Witness> rationalize(const NumericWitness& nw, const Graph& g, long max_den);

}  // namespace pvertex
