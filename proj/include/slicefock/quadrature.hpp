#pragma once

// Polar quadrature on a slice disk and 1-D search helpers.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace slicefock {

struct QuadNode {
  double x;
  double weight;
};

/// n-point Gauss-Legendre rule mapped to [a, b]; exact for polynomials of
/// degree <= 2n - 1. Nodes ascend.
std::vector<QuadNode> gauss_legendre(std::size_t n, double a, double b);

/// n >= 2 Chebyshev-Lobatto points R (1 - cos(k pi / (n-1))) / 2 on [0, R],
/// both endpoints included, ascending.
std::vector<double> chebyshev_lobatto(std::size_t n, double R);

/// Golden-section search for the maximum of a unimodal g on [a, b]. Returns
/// the abscissa; the endpoints are compared too, so the result is never worse
/// than max(g(a), g(b)).
double golden_section_max(const std::function<double(double)>& g, double a, double b,
                          double tol = 1e-13);

/// Gauss-Legendre in r on [0, R] times the periodic trapezoid rule in theta.
/// The area element r dr dtheta is applied by `polar_weight`, not stored in
/// the radial weights.
class QuadratureGrid {
public:
  static constexpr std::size_t kDefaultRadial = 64;
  static constexpr std::size_t kDefaultAngular = 128;
  static constexpr std::size_t kMaxRadial = 512;
  static constexpr std::size_t kMaxAngular = 1024;

  QuadratureGrid(std::size_t radial_count = kDefaultRadial,
                 std::size_t angular_count = kDefaultAngular, double radius = 1.0);

  const std::vector<QuadNode>& radial_nodes() const { return radial_; }
  std::size_t radial_count() const { return radial_.size(); }
  std::size_t angular_count() const { return angular_count_; }
  double radius() const { return radius_; }

  double angle(std::size_t j) const;
  /// r_i w_i (2 pi / M): weight of node (i, j) for integrals against dx dy.
  double polar_weight(std::size_t i) const;

  /// Sum of all node weights, i.e. the quadrature of 1 over the disk.
  double disk_area() const;

  QuadratureGrid refined() const;
  bool at_cap() const;
  std::string describe() const;

private:
  std::vector<QuadNode> radial_;
  std::size_t angular_count_;
  double radius_;
};

}  // namespace slicefock
