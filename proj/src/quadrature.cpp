#include "slicefock/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slicefock/error.hpp"

namespace slicefock {

std::vector<QuadNode> gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre rule needs n >= 1");
  std::vector<QuadNode> nodes(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Newton iteration on P_n from the Tricomi initial guess.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = {mid - half * x, half * w};
    nodes[n - 1 - i] = {mid + half * x, half * w};
  }
  if (n % 2 == 1) nodes[n / 2].x = mid;
  return nodes;
}

std::vector<double> chebyshev_lobatto(std::size_t n, double R) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Chebyshev-Lobatto points need n >= 2");
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = 0.5 * R * (1.0 - std::cos(std::numbers::pi * static_cast<double>(k) /
                                     static_cast<double>(n - 1)));
  }
  r.front() = 0.0;
  r.back() = R;
  return r;
}

double golden_section_max(const std::function<double(double)>& g, double a, double b,
                          double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = a;
  double hi = b;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c);
  double gd = g(d);
  while (hi - lo > tol * std::max(1.0, std::abs(lo) + std::abs(hi))) {
    if (gc >= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  double best_x = 0.5 * (lo + hi);
  double best = g(best_x);
  for (double x : {a, b, c, d}) {
    const double v = g(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

QuadratureGrid::QuadratureGrid(std::size_t radial_count, std::size_t angular_count, double radius)
    : angular_count_(angular_count), radius_(radius) {
  if (radial_count == 0 || angular_count == 0) {
    throw Error(ErrorKind::InvalidArgument, "quadrature grid needs positive node counts");
  }
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "quadrature radius must be positive");
  radial_ = gauss_legendre(radial_count, 0.0, radius);
}

double QuadratureGrid::angle(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular_count_);
}

double QuadratureGrid::polar_weight(std::size_t i) const {
  return radial_[i].x * radial_[i].weight * 2.0 * std::numbers::pi /
         static_cast<double>(angular_count_);
}

double QuadratureGrid::disk_area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < radial_.size(); ++i) s += polar_weight(i);
  return s * static_cast<double>(angular_count_);
}

QuadratureGrid QuadratureGrid::refined() const {
  return QuadratureGrid(2 * radial_count(), 2 * angular_count_, radius_);
}

bool QuadratureGrid::at_cap() const {
  return radial_count() >= kMaxRadial || angular_count_ >= kMaxAngular;
}

std::string QuadratureGrid::describe() const {
  return std::to_string(radial_count()) + "x" + std::to_string(angular_count_) +
         " (R=" + std::to_string(radius_) + ")";
}

}  // namespace slicefock
