#include "pvertex/numeric_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pvertex/exact_linalg.hpp"

namespace pvertex {

namespace {

constexpr double kEdgeFloor = 1e-3;
constexpr double kPenaltyWeight = 0.1;

double softplus(double t) { return t > 30 ? t : std::log1p(std::exp(t)); }
double softplus_slope(double t) { return 1.0 / (1.0 + std::exp(-t)); }
double softplus_inverse(double y) { return y > 30 ? y : std::log(std::expm1(y)); }

// One search instance: fixed edge signs, softplus-floored edge magnitudes.
struct Model {
  const Graph& g;
  std::vector<double> edge_sign;

  int n() const { return g.vertex_count(); }
  int m() const { return g.edge_count(); }
  int vars() const { return n() + m(); }

  Eigen::MatrixXd assemble(const Eigen::VectorXd& theta) const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n(), n());
    for (int i = 0; i < n(); ++i) a(i, i) = theta(i);
    for (int e = 0; e < m(); ++e) {
      const auto& [p, q] = g.edges()[static_cast<std::size_t>(e)];
      const double w = edge_sign[static_cast<std::size_t>(e)] * (kEdgeFloor + softplus(theta(n() + e)));
      a(p, q) = w;
      a(q, p) = w;
    }
    return a;
  }

  // Residuals: the n inverse-diagonal entries, then the det-floor hinge.
  // Returns false when A is numerically singular.
  bool residuals(const Eigen::VectorXd& theta, double det_floor, Eigen::VectorXd& r, Eigen::MatrixXd* jac,
                 Eigen::MatrixXd* inv_out = nullptr, double* det_out = nullptr) const {
    const Eigen::MatrixXd a = assemble(theta);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) return false;
    const double det = lu.determinant();
    const Eigen::MatrixXd b = lu.inverse();
    if (!b.allFinite()) return false;
    if (inv_out) *inv_out = b;
    if (det_out) *det_out = det;

    r.resize(n() + 1);
    for (int i = 0; i < n(); ++i) r(i) = b(i, i);
    const double shortfall = det_floor / std::abs(det) - 1.0;
    r(n()) = shortfall > 0 ? kPenaltyWeight * shortfall : 0.0;

    if (jac) {
      jac->setZero(n() + 1, vars());
      for (int i = 0; i < n(); ++i) {
        for (int k = 0; k < n(); ++k) (*jac)(i, k) = -b(i, k) * b(k, i);
        for (int e = 0; e < m(); ++e) {
          const auto& [p, q] = g.edges()[static_cast<std::size_t>(e)];
          const double chain = edge_sign[static_cast<std::size_t>(e)] * softplus_slope(theta(n() + e));
          (*jac)(i, n() + e) = -2.0 * b(i, p) * b(q, i) * chain;
        }
      }
      if (shortfall > 0) {
        // d/dx [floor/|det| - 1] = -(floor/|det|) * dlog|det|/dx
        const double scale = -kPenaltyWeight * det_floor / std::abs(det);
        for (int k = 0; k < n(); ++k) (*jac)(n(), k) = scale * b(k, k);
        for (int e = 0; e < m(); ++e) {
          const auto& [p, q] = g.edges()[static_cast<std::size_t>(e)];
          const double chain = edge_sign[static_cast<std::size_t>(e)] * softplus_slope(theta(n() + e));
          (*jac)(n(), n() + e) = scale * 2.0 * b(p, q) * chain;
        }
      }
    }
    return true;
  }
};

struct RunResult {
  Eigen::MatrixXd matrix;
  double residual;
  double det;
};

std::optional<RunResult> run_restart(const Graph& g, const SearchConfig& cfg, std::uint64_t restart_seed) {
  std::mt19937_64 rng(restart_seed);
  std::uniform_real_distribution<double> diag_init(-2.0, 2.0);
  std::uniform_real_distribution<double> mag_init(0.5, 2.0);

  Model model{g, {}};
  model.edge_sign.reserve(static_cast<std::size_t>(g.edge_count()));
  Eigen::VectorXd theta(model.vars());
  for (int i = 0; i < g.vertex_count(); ++i) theta(i) = diag_init(rng);
  for (int e = 0; e < g.edge_count(); ++e) {
    model.edge_sign.push_back(rng() % 2 == 0 ? 1.0 : -1.0);
    theta(g.vertex_count() + e) = softplus_inverse(mag_init(rng) - kEdgeFloor);
  }

  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  if (!model.residuals(theta, cfg.det_floor, r, &jac)) return std::nullopt;
  double cost = r.squaredNorm();
  double lambda = 1e-3;

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    if (jtr.lpNorm<Eigen::Infinity>() < 1e-15) break;
    const Eigen::MatrixXd damped =
        jtj + lambda * Eigen::MatrixXd::Identity(model.vars(), model.vars());
    const Eigen::VectorXd step = damped.ldlt().solve(-jtr);
    Eigen::VectorXd r_next;
    Eigen::MatrixXd jac_next;
    const Eigen::VectorXd theta_next = theta + step;
    if (model.residuals(theta_next, cfg.det_floor, r_next, &jac_next) && r_next.squaredNorm() < cost) {
      theta = theta_next;
      r = std::move(r_next);
      jac = std::move(jac_next);
      cost = r.squaredNorm();
      lambda = std::max(lambda / 3.0, 1e-12);
    } else {
      lambda *= 4.0;
      if (lambda > 1e14) break;
    }
    if (r.head(g.vertex_count()).lpNorm<Eigen::Infinity>() <= cfg.residual_tol && r(g.vertex_count()) == 0.0) {
      break;
    }
  }

  Eigen::MatrixXd inv;
  double det = 0;
  if (!model.residuals(theta, cfg.det_floor, r, nullptr, &inv, &det)) return std::nullopt;
  const double residual = r.head(g.vertex_count()).lpNorm<Eigen::Infinity>();
  if (residual > cfg.residual_tol || std::abs(det) < cfg.det_floor) return std::nullopt;
  return RunResult{model.assemble(theta), residual, det};
}

Rational rational_approx(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  const bool neg = x < 0;
  double frac = std::abs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fa = std::floor(frac);
    if (fa > 9e17) break;  // give up on astronomically large terms
    const long long a = static_cast<long long>(fa);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Best semiconvergent still within the denominator bound.
      const long long t = (max_den - q0) / q1;
      const long long ps = t * p1 + p0;
      const long long qs = t * q1 + q0;
      const double target = std::abs(x);
      const double err_conv = std::abs(target - static_cast<double>(p1) / static_cast<double>(q1));
      const double err_semi =
          qs > 0 ? std::abs(target - static_cast<double>(ps) / static_cast<double>(qs)) : err_conv + 1;
      if (err_semi < err_conv) {
        p1 = ps;
        q1 = qs;
      }
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    frac -= fa;
    if (frac < 1e-12) break;
    frac = 1.0 / frac;
  }
  return make_rational(static_cast<long>(neg ? -p1 : p1), static_cast<long>(q1));
}

}  // namespace

std::optional<NumericWitness> search_witness(const Graph& g, const SearchConfig& cfg) {
  if (g.vertex_count() < 2 || connected_components(g).size() != 1) {
    throw std::invalid_argument("witness search needs a connected graph with n >= 2");
  }
  if (cfg.restarts <= 0 || cfg.max_iters <= 0 || cfg.residual_tol <= 0 || cfg.residual_tol >= 1 ||
      cfg.det_floor <= 0) {
    throw std::invalid_argument("search configuration values must be positive (and residual_tol < 1)");
  }

  std::optional<NumericWitness> best;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    const std::uint64_t restart_seed =
        cfg.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(restart + 1);
    const auto run = run_restart(g, cfg, restart_seed);
    if (!run) continue;
    if (!best || run->residual < best->residual) {
      NumericWitness nw;
      nw.matrix = run->matrix;
      nw.residual = run->residual;
      nw.det_estimate = run->det;
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(run->matrix);
      const double smin = svd.singularValues().minCoeff();
      nw.condition_estimate =
          smin > 0 ? svd.singularValues().maxCoeff() / smin : std::numeric_limits<double>::infinity();
      nw.restart_index = restart;
      nw.seed = cfg.seed;
      best = std::move(nw);
    }
  }
  return best;
}

double gradient_check(const Graph& g, const std::vector<double>& point) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(point.size()) != n + m) {
    throw std::invalid_argument("point needs n diagonal entries plus one weight per edge");
  }
  const auto assemble = [&](const std::vector<double>& x) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = x[static_cast<std::size_t>(i)];
    for (int e = 0; e < m; ++e) {
      const auto& [p, q] = g.edges()[static_cast<std::size_t>(e)];
      a(p, q) = x[static_cast<std::size_t>(n + e)];
      a(q, p) = x[static_cast<std::size_t>(n + e)];
    }
    return a;
  };
  const auto objective = [&](const std::vector<double>& x) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(assemble(x));
    if (!lu.isInvertible()) throw SingularPointError("objective evaluated at a singular matrix");
    const Eigen::MatrixXd b = lu.inverse();
    double f = 0;
    for (int i = 0; i < n; ++i) f += b(i, i) * b(i, i);
    return f;
  };

  Eigen::FullPivLU<Eigen::MatrixXd> lu(assemble(point));
  if (!lu.isInvertible()) throw SingularPointError("gradient check at a singular matrix");
  const Eigen::MatrixXd b = lu.inverse();

  // dF/dx_v = sum_i 2 r_i dr_i/dx_v with r_i = (A^-1)_ii.
  std::vector<double> analytic(static_cast<std::size_t>(n + m), 0.0);
  for (int i = 0; i < n; ++i) {
    const double ri = b(i, i);
    for (int k = 0; k < n; ++k) analytic[static_cast<std::size_t>(k)] += 2.0 * ri * (-b(i, k) * b(k, i));
    for (int e = 0; e < m; ++e) {
      const auto& [p, q] = g.edges()[static_cast<std::size_t>(e)];
      analytic[static_cast<std::size_t>(n + e)] += 2.0 * ri * (-2.0 * b(i, p) * b(q, i));
    }
  }

  constexpr double kStep = 1e-6;
  double worst = 0;
  for (int v = 0; v < n + m; ++v) {
    std::vector<double> hi = point, lo = point;
    hi[static_cast<std::size_t>(v)] += kStep;
    lo[static_cast<std::size_t>(v)] -= kStep;
    const double numeric = (objective(hi) - objective(lo)) / (2.0 * kStep);
    const double ga = analytic[static_cast<std::size_t>(v)];
    const double rel = std::abs(ga - numeric) / std::max({1.0, std::abs(ga), std::abs(numeric)});
    worst = std::max(worst, rel);
  }
  return worst;
}

std::optional<Witness> rationalize(const NumericWitness& nw, const Graph& g, long max_den) {
  const int n = g.vertex_count();
  if (nw.matrix.rows() != n || nw.matrix.cols() != n) {
    throw SizeMismatchError("numeric matrix does not match the graph order");
  }
  if (max_den < 1) throw std::invalid_argument("max_den must be at least 1");
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = rational_approx(nw.matrix(i, i), max_den);
  for (const auto& [u, v] : g.edges()) {
    const double w = nw.matrix(u, v);
    Rational r = rational_approx(w, max_den);
    if (r == 0 || (r > 0) != (w > 0)) {
      r = make_rational(w > 0 ? 1 : -1, max_den);
    }
    m(u, v) = r;
    m(v, u) = r;
  }
  try {
    return Witness::checked(g, std::move(m));
  } catch (const UnverifiedInputError&) {
    return std::nullopt;
  }
}

}  // namespace pvertex
