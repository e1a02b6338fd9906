#include <array>
#include <cmath>
#include <numbers>

#include "oracle.hpp"

namespace oracle {

namespace {

struct P {
  double x, y;
};

// Both intersections of the unit circles around a and b (|a - b| <= 2).
std::array<P, 2> unit_pair(P a, P b) {
  double dx = b.x - a.x, dy = b.y - a.y;
  double d2 = dx * dx + dy * dy;
  double h = std::sqrt(std::max(0.0, 1.0 / d2 - 0.25));
  P m{(a.x + b.x) / 2, (a.y + b.y) / 2};
  return {P{m.x - h * dy, m.y + h * dx}, P{m.x + h * dy, m.y - h * dx}};
}

double dist2(P a, P b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

}  // namespace

int moser_spindle_placements(int steps) {
  const P a{0, 0}, b{1, 0};
  int total = 0;
  for (P c1 : unit_pair(a, b)) {
    for (P d1 : unit_pair(b, c1)) {
      for (int c2_choice = 0; c2_choice < 2; ++c2_choice) {
        for (int d2_choice = 0; d2_choice < 2; ++d2_choice) {
          auto g = [&](double theta) {
            P b2{std::cos(theta), std::sin(theta)};
            P c2 = unit_pair(a, b2)[c2_choice];
            P d2 = unit_pair(b2, c2)[d2_choice];
            return dist2(d1, d2) - 1.0;
          };
          const double h = 2 * std::numbers::pi / steps;
          double prev = g(0.0);
          for (int s = 1; s <= steps; ++s) {
            double cur = g(s * h);
            if ((prev < 0) != (cur < 0)) ++total;
            prev = cur;
          }
        }
      }
    }
  }
  // Every placement was counted once with C1 above and once mirrored below.
  return total / 2;
}

std::optional<mpq_class> simplest_brute(const mpq_class& lo, const mpq_class& hi, long max_den) {
  for (long q = 1; q <= max_den; ++q) {
    mpq_class lq = lo * q;
    mpz_class p;
    mpz_cdiv_q(p.get_mpz_t(), lq.get_num_mpz_t(), lq.get_den_mpz_t());
    if (p < 1) p = 1;
    mpq_class r(p, q);
    r.canonicalize();
    if (r <= hi && r >= lo) return r;
  }
  return std::nullopt;
}

}  // namespace oracle
