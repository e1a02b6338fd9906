#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "udrig/claim.hpp"
#include "udrig/configuration.hpp"
#include "udrig/enumerator.hpp"

namespace udrig {

struct RefuterParams {
  int restarts = 64;
  std::uint64_t seed = 0;
  double residual_tol = 1e-12;
  double deviation_tol = 1e-6;
  int max_iterations = 200;
  /// Run restarts through the OpenMP kernel (results are identical either way).
  bool parallel = true;

  /// Throws PreconditionError on non-positive tolerances, residual_tol >=
  /// deviation_tol, or non-positive counts.
  void validate() const;
};

/// Upper bound on every achievable image distance |f(X) - f(Y)|: the
/// unit-graph distance between X and Y. Throws PreconditionError when the
/// labels are disconnected.
CReal linkage_bound(const Configuration& c, const std::string& x, const std::string& y);

/// Floating-point search for a unit-preserving map violating the claim,
/// followed by exact certification. Refuted only with an exact witness;
/// a numeric-only hit is Undecided("numeric-only counterexample") with the
/// numeric witness and evidence attached. Never returns Proven.
Verdict refute(const Configuration& c, const Claim& claim, const RefuterParams& params = {},
               int budget = kDefaultPrecision);

/// verify(), falling back to refute() when exact enumeration cannot close.
Verdict verify_or_refute(const Configuration& c, const Claim& claim, const RefuterParams& params = {},
                         int budget = kDefaultPrecision);

namespace kernel {

/// Claim reduced to point indices. kind 0: |xy| - target, 1: |kl| - |mn|,
/// 2: ||xy| - target| - epsilon.
struct Problem {
  int dimension = 2;
  int points = 0;
  std::vector<std::pair<int, int>> edges;
  int kind = 0;
  int i0 = 0, i1 = 0, i2 = 0, i3 = 0;
  double target = 0.0;
  double epsilon = 0.0;
  double bound = 1.0;   // linkage bound for the claim quantity
  double radius = 1.0;  // initial sampling disk radius
};

struct Candidate {
  std::vector<double> x;  // points * dimension
  double residual = 0.0;  // Euclidean norm of the edge residuals |.|^2 - 1
  double deviation = 0.0;
  int restart = -1;
  bool accepted = false;
};

Problem make_problem(const Configuration& c, const Claim& claim);

double claim_deviation(const Problem& p, const std::vector<double>& x);
double edge_residual(const Problem& p, const std::vector<double>& x);

/// One seeded restart: penalised search toward a sampled claim value, then a
/// pure-constraint polish. Deterministic in (params.seed, index).
Candidate run_restart(const Problem& p, const RefuterParams& params, int index);

/// Best accepted candidate (largest deviation, lowest index on ties), or the
/// lowest-residual one with accepted = false when none qualifies.
Candidate search_serial(const Problem& p, const RefuterParams& params);
Candidate search_parallel(const Problem& p, const RefuterParams& params);

/// Every restart result in index order (OpenMP when params.parallel).
std::vector<Candidate> run_restarts(const Problem& p, const RefuterParams& params);

/// The reduction used by search_serial / search_parallel.
Candidate select_best(std::vector<Candidate> all);

}  // namespace kernel

}  // namespace udrig
