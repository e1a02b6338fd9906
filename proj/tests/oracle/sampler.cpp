#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"

namespace oracle {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

namespace {

struct Solver {
  const Graph& g;
  std::vector<int> var;  // variable slot of each point, -1 when pinned

  explicit Solver(const Graph& graph) : g(graph), var(graph.n, -1) {
    int k = 0;
    for (int i = 0; i < g.n; ++i) {
      if (i != g.base0 && i != g.base1) var[i] = k++;
    }
  }

  int unknowns() const { return 2 * (g.n - 2); }

  std::vector<double> expand(const Eigen::VectorXd& v) const {
    std::vector<double> p(2 * g.n, 0.0);
    p[2 * g.base1] = 1.0;
    for (int i = 0; i < g.n; ++i) {
      if (var[i] < 0) continue;
      p[2 * i] = v[2 * var[i]];
      p[2 * i + 1] = v[2 * var[i] + 1];
    }
    return p;
  }

  Eigen::VectorXd residual(const std::vector<double>& p) const {
    Eigen::VectorXd r(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      double dx = p[2 * i] - p[2 * j], dy = p[2 * i + 1] - p[2 * j + 1];
      r[e] = dx * dx + dy * dy - 1.0;
    }
    return r;
  }

  Eigen::MatrixXd jacobian(const std::vector<double>& p) const {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(g.edges.size(), unknowns());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      double dx = p[2 * i] - p[2 * j], dy = p[2 * i + 1] - p[2 * j + 1];
      if (var[i] >= 0) {
        jac(e, 2 * var[i]) += 2 * dx;
        jac(e, 2 * var[i] + 1) += 2 * dy;
      }
      if (var[j] >= 0) {
        jac(e, 2 * var[j]) -= 2 * dx;
        jac(e, 2 * var[j] + 1) -= 2 * dy;
      }
    }
    return jac;
  }

  std::optional<std::vector<double>> solve(Eigen::VectorXd v) const {
    double lambda = 1e-3;
    std::vector<double> p = expand(v);
    Eigen::VectorXd r = residual(p);
    double cost = r.squaredNorm();
    for (int it = 0; it < 300 && r.lpNorm<Eigen::Infinity>() > 1e-15; ++it) {
      Eigen::MatrixXd jac = jacobian(p);
      Eigen::MatrixXd h = jac.transpose() * jac;
      Eigen::VectorXd grad = jac.transpose() * r;
      h.diagonal().array() += lambda * (1.0 + h.diagonal().array());
      Eigen::VectorXd step = h.ldlt().solve(-grad);
      Eigen::VectorXd trial = v + step;
      std::vector<double> tp = expand(trial);
      Eigen::VectorXd tr = residual(tp);
      double tc = tr.squaredNorm();
      if (tc < cost) {
        v = trial;
        p = std::move(tp);
        r = tr;
        cost = tc;
        lambda = std::max(lambda / 5, 1e-15);
      } else {
        lambda *= 4;
        if (lambda > 1e12) break;
      }
    }
    if (r.lpNorm<Eigen::Infinity>() > 1e-12) return std::nullopt;
    return p;
  }
};

void reflect_canonical(std::vector<double>& p) {
  for (std::size_t i = 1; i < p.size(); i += 2) {
    if (std::abs(p[i]) > 1e-7) {
      if (p[i] < 0) {
        for (std::size_t k = 1; k < p.size(); k += 2) p[k] = -p[k];
      }
      return;
    }
  }
}

}  // namespace

SampleResult sample_realizations(const Graph& g, int restarts, std::uint64_t seed, double radius, double merge_tol) {
  Solver solver(g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-radius, radius);
  SampleResult out;
  Eigen::VectorXd v(solver.unknowns());
  for (int r = 0; r < restarts; ++r) {
    for (int k = 0; k < v.size(); ++k) v[k] = u(rng);
    auto p = solver.solve(v);
    if (!p) continue;
    ++out.converged;
    reflect_canonical(*p);
    bool seen = false;
    for (const auto& c : out.clusters) {
      if (max_abs_diff(c, *p) < merge_tol) {
        seen = true;
        break;
      }
    }
    if (!seen) out.clusters.push_back(std::move(*p));
  }
  return out;
}

}  // namespace oracle
