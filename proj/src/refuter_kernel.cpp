#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "udrig/refuter.hpp"

namespace udrig::kernel {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double dist(const Problem& p, const std::vector<double>& x, int a, int b) {
  double s = 0.0;
  for (int k = 0; k < p.dimension; ++k) {
    double d = x[a * p.dimension + k] - x[b * p.dimension + k];
    s += d * d;
  }
  return std::sqrt(s);
}

// Adds d|x_a - x_b| / dx into row `row`, scaled by `w`.
void add_distance_gradient(const Problem& p, const std::vector<double>& x, int a, int b, double w,
                           Eigen::MatrixXd& J, int row) {
  double d = dist(p, x, a, b);
  if (d < 1e-300) return;
  for (int k = 0; k < p.dimension; ++k) {
    double g = w * (x[a * p.dimension + k] - x[b * p.dimension + k]) / d;
    J(row, a * p.dimension + k) += g;
    J(row, b * p.dimension + k) -= g;
  }
}

// Claim quantity q(x) whose value the penalty steers toward `goal`.
double quantity(const Problem& p, const std::vector<double>& x) {
  if (p.kind == 1) return dist(p, x, p.i0, p.i1) - dist(p, x, p.i2, p.i3);
  return dist(p, x, p.i0, p.i1);
}

void residuals(const Problem& p, const std::vector<double>& x, double mu, double goal, Eigen::VectorXd& r,
               Eigen::MatrixXd& J) {
  const int m = static_cast<int>(p.edges.size()) + (mu > 0 ? 1 : 0);
  const int n = p.points * p.dimension;
  r.setZero(m);
  J.setZero(m, n);
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    auto [a, b] = p.edges[e];
    double s = 0.0;
    for (int k = 0; k < p.dimension; ++k) {
      double d = x[a * p.dimension + k] - x[b * p.dimension + k];
      s += d * d;
      J(e, a * p.dimension + k) = 2 * d;
      J(e, b * p.dimension + k) = -2 * d;
    }
    r(e) = s - 1.0;
  }
  if (mu > 0) {
    int row = m - 1;
    r(row) = mu * (quantity(p, x) - goal);
    add_distance_gradient(p, x, p.i0, p.i1, mu, J, row);
    if (p.kind == 1) add_distance_gradient(p, x, p.i2, p.i3, -mu, J, row);
  }
}

// Levenberg-Marquardt on the residual system; returns the final cost.
void levenberg_marquardt(const Problem& p, std::vector<double>& x, double mu, double goal, int iterations) {
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  residuals(p, x, mu, goal, r, J);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  const int n = static_cast<int>(x.size());
  for (int it = 0; it < iterations && cost > 1e-32; ++it) {
    Eigen::MatrixXd A = J.transpose() * J;
    Eigen::VectorXd g = J.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      Eigen::MatrixXd M = A;
      for (int i = 0; i < n; ++i) M(i, i) += lambda * (A(i, i) + 1e-12);
      Eigen::VectorXd step = M.ldlt().solve(-g);
      std::vector<double> trial(x);
      for (int i = 0; i < n; ++i) trial[i] += step(i);
      Eigen::VectorXd r2;
      Eigen::MatrixXd J2;
      residuals(p, trial, mu, goal, r2, J2);
      double c2 = r2.squaredNorm();
      if (std::isfinite(c2) && c2 < cost) {
        x.swap(trial);
        r.swap(r2);
        J.swap(J2);
        cost = c2;
        lambda = std::max(lambda / 3, 1e-15);
        improved = true;
      } else {
        lambda *= 4;
      }
    }
    if (!improved) break;
  }
}

}  // namespace

double claim_deviation(const Problem& p, const std::vector<double>& x) {
  switch (p.kind) {
    case 0:
      return std::abs(dist(p, x, p.i0, p.i1) - p.target);
    case 1:
      return std::abs(dist(p, x, p.i0, p.i1) - dist(p, x, p.i2, p.i3));
    default:
      return std::abs(dist(p, x, p.i0, p.i1) - p.target) - p.epsilon;
  }
}

double edge_residual(const Problem& p, const std::vector<double>& x) {
  double s = 0.0;
  for (auto [a, b] : p.edges) {
    double d = dist(p, x, a, b);
    double e = d * d - 1.0;
    s += e * e;
  }
  return std::sqrt(s);
}

Candidate run_restart(const Problem& p, const RefuterParams& params, int index) {
  std::mt19937_64 rng(splitmix64(params.seed + static_cast<std::uint64_t>(index)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Candidate c;
  c.restart = index;
  c.x.assign(static_cast<std::size_t>(p.points * p.dimension), 0.0);
  for (int i = 0; i < p.points; ++i) {
    // Uniform in the ball of radius p.radius.
    std::vector<double> dir(p.dimension);
    double norm = 0.0;
    for (double& v : dir) {
      v = gauss(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    double r = p.radius * std::pow(unit(rng), 1.0 / p.dimension);
    for (int k = 0; k < p.dimension; ++k) c.x[i * p.dimension + k] = norm > 0 ? r * dir[k] / norm : 0.0;
  }
  double goal = p.kind == 1 ? (2 * unit(rng) - 1) * p.bound : unit(rng) * p.bound;
  int first = std::max(1, params.max_iterations / 2);
  levenberg_marquardt(p, c.x, 0.5, goal, first);
  levenberg_marquardt(p, c.x, 0.0, goal, params.max_iterations);
  c.residual = edge_residual(p, c.x);
  c.deviation = claim_deviation(p, c.x);
  c.accepted = c.residual < params.residual_tol && c.deviation > params.deviation_tol;
  return c;
}

Candidate select_best(std::vector<Candidate> all) {
  Candidate best;
  bool have_accepted = false;
  for (Candidate& c : all) {
    if (c.accepted) {
      if (!have_accepted || c.deviation > best.deviation) {
        best = std::move(c);
        have_accepted = true;
      }
    } else if (!have_accepted && (best.restart < 0 || c.residual < best.residual)) {
      best = std::move(c);
    }
  }
  return best;
}

Candidate search_serial(const Problem& p, const RefuterParams& params) {
  std::vector<Candidate> all(static_cast<std::size_t>(params.restarts));
  for (int i = 0; i < params.restarts; ++i) all[i] = run_restart(p, params, i);
  return select_best(std::move(all));
}

Candidate search_parallel(const Problem& p, const RefuterParams& params) {
  std::vector<Candidate> all(static_cast<std::size_t>(params.restarts));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < params.restarts; ++i) all[i] = run_restart(p, params, i);
  return select_best(std::move(all));
}

std::vector<Candidate> run_restarts(const Problem& p, const RefuterParams& params) {
  std::vector<Candidate> all(static_cast<std::size_t>(params.restarts));
  if (params.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < params.restarts; ++i) all[i] = run_restart(p, params, i);
  } else {
    for (int i = 0; i < params.restarts; ++i) all[i] = run_restart(p, params, i);
  }
  return all;
}

}  // namespace udrig::kernel
