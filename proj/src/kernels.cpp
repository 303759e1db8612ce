#include "slicefock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "slicefock/error.hpp"

namespace slicefock {

namespace {

double factorial_tail(double x, std::size_t N) {
  // x^{N+1} / (N+1)!
  double t = 1.0;
  for (std::size_t m = 1; m <= N + 1; ++m) t *= x / static_cast<double>(m);
  return t;
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
}

}  // namespace

KernelValue star_exp_eval(const Quaternion& q, const Quaternion& w, double alpha, std::size_t N) {
  require_alpha(alpha);
  const Quaternion wbar = w.conj();
  Quaternion q_pow = Quaternion::one();
  Quaternion w_pow = Quaternion::one();
  double scalar = 1.0;  // alpha^n / n!
  Quaternion sum = Quaternion::one();
  for (std::size_t n = 1; n <= N; ++n) {
    q_pow = q_pow * q;
    w_pow = w_pow * wbar;
    scalar *= alpha / static_cast<double>(n);
    sum += q_pow * (w_pow * scalar);
  }
  const double x = alpha * q.modulus() * w.modulus();
  return {sum, factorial_tail(x, N) * std::exp(x)};
}

KernelValue normalized_kernel_eval(const Quaternion& z_k, const Quaternion& q, double alpha,
                                   std::size_t N) {
  KernelValue k = star_exp_eval(q, z_k, alpha, N);
  const double norm = std::exp(-0.5 * alpha * z_k.norm_sq());
  return {k.value * norm, k.tail_bound * norm};
}

SliceSeries atomic_synthesis(const AtomicData& data, const ImaginaryUnit& I) {
  require_alpha(data.alpha);
  if (data.points.size() != data.coeffs.size()) {
    throw Error(ErrorKind::InvalidArgument, "atomic data needs as many coefficients as points");
  }
  for (std::size_t k = 0; k < data.points.size(); ++k) {
    const Quaternion& z = data.points[k];
    // Component of Im(z) orthogonal to I.
    const double along = z.x * I.x() + z.y * I.y() + z.z * I.z();
    const Quaternion off{0.0, z.x - along * I.x(), z.y - along * I.y(), z.z - along * I.z()};
    if (off.modulus() > 1e-10) {
      throw Error(ErrorKind::PointOffSlice, "point " + std::to_string(k) + " is not in C_I");
    }
  }
  const std::size_t N = data.trunc_degree;
  std::vector<Quaternion> c(N + 1);
  std::vector<Quaternion> zbar_pow(data.points.size(), Quaternion::one());
  std::vector<double> norm(data.points.size());
  double tail = 0.0;
  for (std::size_t k = 0; k < data.points.size(); ++k) {
    norm[k] = std::exp(-0.5 * data.alpha * data.points[k].norm_sq());
    const double x = data.alpha * data.points[k].modulus();
    tail += data.coeffs[k].modulus() * norm[k] * factorial_tail(x, N) * std::exp(x);
  }
  double scalar = 1.0;  // alpha^n / n!
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) scalar *= data.alpha / static_cast<double>(n);
    Quaternion s{};
    for (std::size_t k = 0; k < data.points.size(); ++k) {
      if (n > 0) zbar_pow[k] = zbar_pow[k] * data.points[k].conj();
      s += (zbar_pow[k] * (scalar * norm[k])) * data.coeffs[k];
    }
    c[n] = s;
  }
  return SliceSeries(std::move(c), 1.0, tail);
}

std::vector<Quaternion> lattice_points(double spacing, const ImaginaryUnit& I, double radius) {
  if (!(spacing > 0.0)) throw Error(ErrorKind::InvalidArgument, "lattice spacing must be positive");
  if (!(radius >= 0.0)) throw Error(ErrorKind::InvalidArgument, "lattice radius must be nonnegative");
  const long bound = static_cast<long>(std::floor(radius / spacing)) + 1;
  struct Site {
    long m, n;
    long norm2;
    double angle;
  };
  std::vector<Site> sites;
  for (long m = -bound; m <= bound; ++m) {
    for (long n = -bound; n <= bound; ++n) {
      const double re = spacing * static_cast<double>(m);
      const double im = spacing * static_cast<double>(n);
      if (std::hypot(re, im) > radius) continue;
      double angle = std::atan2(static_cast<double>(n), static_cast<double>(m));
      if (angle < 0.0) angle += 2.0 * std::numbers::pi;
      sites.push_back({m, n, m * m + n * n, angle});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
    return std::tie(a.norm2, a.angle) < std::tie(b.norm2, b.angle);
  });
  std::vector<Quaternion> out;
  out.reserve(sites.size());
  for (const auto& s : sites) {
    out.push_back(I.embed(spacing * static_cast<double>(s.m), spacing * static_cast<double>(s.n)));
  }
  return out;
}

}  // namespace slicefock
