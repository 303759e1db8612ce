#include "slicefock/slice_series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "slicefock/error.hpp"
#include "slicefock/parallel.hpp"

namespace slicefock {

namespace {

constexpr double kOrthogonalityTol = 1e-10;
constexpr double kSameUnitTol = 1e-12;

void require_orthogonal(const ImaginaryUnit& I, const ImaginaryUnit& J) {
  const double c = dot(I, J);
  if (!(std::abs(c) < kOrthogonalityTol)) {
    throw Error(ErrorKind::NotOrthogonal, "|<I, J>| = " + std::to_string(std::abs(c)));
  }
}

// Solves M u = b for the 4x4 matrix whose columns are 1, I, J, IJ, by
// Gaussian elimination with partial pivoting. Factored once per split.
class SliceBasisSolver {
public:
  SliceBasisSolver(const ImaginaryUnit& I, const ImaginaryUnit& J) {
    const Quaternion cols[4] = {Quaternion::one(), I.as_quaternion(), J.as_quaternion(),
                                I.as_quaternion() * J.as_quaternion()};
    for (int c = 0; c < 4; ++c) {
      lu_[0][c] = cols[c].w;
      lu_[1][c] = cols[c].x;
      lu_[2][c] = cols[c].y;
      lu_[3][c] = cols[c].z;
    }
    for (int r = 0; r < 4; ++r) perm_[r] = r;
    for (int c = 0; c < 4; ++c) {
      int pivot = c;
      for (int r = c + 1; r < 4; ++r) {
        if (std::abs(lu_[r][c]) > std::abs(lu_[pivot][c])) pivot = r;
      }
      std::swap(lu_[c], lu_[pivot]);
      std::swap(perm_[c], perm_[pivot]);
      for (int r = c + 1; r < 4; ++r) {
        lu_[r][c] /= lu_[c][c];
        for (int k = c + 1; k < 4; ++k) lu_[r][k] -= lu_[r][c] * lu_[c][k];
      }
    }
  }

  std::array<double, 4> solve(const Quaternion& a) const {
    const double rhs[4] = {a.w, a.x, a.y, a.z};
    std::array<double, 4> u{};
    for (int r = 0; r < 4; ++r) {
      double s = rhs[perm_[r]];
      for (int k = 0; k < r; ++k) s -= lu_[r][k] * u[k];
      u[r] = s;
    }
    for (int r = 3; r >= 0; --r) {
      double s = u[r];
      for (int k = r + 1; k < 4; ++k) s -= lu_[r][k] * u[k];
      u[r] = s / lu_[r][r];
    }
    return u;
  }

private:
  std::array<std::array<double, 4>, 4> lu_{};
  std::array<int, 4> perm_{};
};

}  // namespace

SliceSeries::SliceSeries() : coeffs_{Quaternion{}} {}

SliceSeries::SliceSeries(std::vector<Quaternion> coeffs, double nominal_radius, double tail_bound)
    : coeffs_(std::move(coeffs)), nominal_radius_(nominal_radius), tail_bound_(tail_bound) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a slice series needs at least one coefficient");
  }
  if (!(nominal_radius_ > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "nominal radius must be positive");
  }
  if (!(tail_bound_ >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tail bound must be nonnegative");
  }
}

std::complex<double> ComplexSlicePolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = *it + z * acc;
  return acc;
}

Quaternion eval(const SliceSeries& f, const Quaternion& q) {
  const auto a = f.coeffs();
  Quaternion acc = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) acc = a[k] + q * acc;
  return acc;
}

SliceSeries operator+(const SliceSeries& f, const SliceSeries& g) {
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<Quaternion> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = f.coeff_or_zero(k) + g.coeff_or_zero(k);
  return SliceSeries(std::move(c), f.nominal_radius(), f.tail_bound() + g.tail_bound());
}

SliceSeries operator-(const SliceSeries& f, const SliceSeries& g) {
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<Quaternion> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = f.coeff_or_zero(k) - g.coeff_or_zero(k);
  return SliceSeries(std::move(c), f.nominal_radius(), f.tail_bound() + g.tail_bound());
}

SliceSeries operator*(const SliceSeries& f, const Quaternion& c) {
  std::vector<Quaternion> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : out) a = a * c;
  return SliceSeries(std::move(out), f.nominal_radius(), f.tail_bound() * c.modulus());
}

SliceSeries star_mul(const SliceSeries& f, const SliceSeries& g) {
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  const std::size_t n_out = a.size() + b.size() - 1;
  std::vector<Quaternion> c(n_out);
  auto coefficient = [&](std::size_t n) {
    const std::size_t k_lo = n >= b.size() ? n - (b.size() - 1) : 0;
    const std::size_t k_hi = std::min(n, a.size() - 1);
    Quaternion s{};
    for (std::size_t k = k_lo; k <= k_hi; ++k) s += a[k] * b[n - k];
    c[n] = s;
  };
  if (a.size() * b.size() >= (1u << 16)) {
    parallel_for(n_out, coefficient);
  } else {
    for (std::size_t n = 0; n < n_out; ++n) coefficient(n);
  }
  return SliceSeries(std::move(c), std::min(f.nominal_radius(), g.nominal_radius()));
}

SliceSeries regular_conjugate(const SliceSeries& f) {
  std::vector<Quaternion> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : out) a = a.conj();
  return SliceSeries(std::move(out), f.nominal_radius(), f.tail_bound());
}

SliceSeries symmetrization(const SliceSeries& f) { return star_mul(f, regular_conjugate(f)); }

Quaternion star_inverse_eval(const SliceSeries& f, const Quaternion& q) {
  const Quaternion s = eval(symmetrization(f), q);
  if (s.modulus() < 1e-12) {
    throw Error(ErrorKind::SingularPoint, "f * f^c vanishes at the evaluation point");
  }
  return inverse(s) * eval(regular_conjugate(f), q);
}

Quaternion transform_point(const SliceSeries& f, const Quaternion& q) {
  const Quaternion v = eval(f, q);
  if (v.modulus() < 1e-12) {
    throw Error(ErrorKind::ZeroValue, "f(q) vanishes; the transformed point is undefined");
  }
  return inverse(v) * q * v;
}

std::pair<ComplexSlicePolynomial, ComplexSlicePolynomial> split(const SliceSeries& f,
                                                                const ImaginaryUnit& I,
                                                                const ImaginaryUnit& J) {
  require_orthogonal(I, J);
  const SliceBasisSolver solver(I, J);
  ComplexSlicePolynomial f1{I, {}};
  ComplexSlicePolynomial f2{I, {}};
  f1.coeffs.reserve(f.coeffs().size());
  f2.coeffs.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    // a = u + vI + (s + tI) J
    const auto [u, v, s, t] = solver.solve(a);
    f1.coeffs.emplace_back(u, v);
    f2.coeffs.emplace_back(s, t);
  }
  return {std::move(f1), std::move(f2)};
}

SliceSeries extend(const ComplexSlicePolynomial& f1, const ComplexSlicePolynomial& f2,
                   const ImaginaryUnit& J, double nominal_radius) {
  const ImaginaryUnit& I = f1.unit;
  if (!(1.0 - dot(I, f2.unit) < kSameUnitTol)) {
    throw Error(ErrorKind::UnitMismatch, "f1 and f2 are defined on different slices");
  }
  require_orthogonal(I, J);
  const std::size_t n = std::max<std::size_t>({f1.coeffs.size(), f2.coeffs.size(), 1});
  const Quaternion Jq = J.as_quaternion();
  std::vector<Quaternion> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto c1 = k < f1.coeffs.size() ? f1.coeffs[k] : std::complex<double>{};
    const auto c2 = k < f2.coeffs.size() ? f2.coeffs[k] : std::complex<double>{};
    out[k] = I.embed(c1) + I.embed(c2) * Jq;
  }
  return SliceSeries(std::move(out), nominal_radius);
}

Quaternion representation_formula(const ImaginaryUnit& I, const Quaternion& q,
                                  const std::function<Quaternion(const Quaternion&)>& on_slice) {
  const SliceCoords c = decompose(q);
  const Quaternion plus = on_slice(I.embed(c.re, c.im));
  const Quaternion minus = on_slice(I.embed(c.re, -c.im));
  const Quaternion prod = c.unit.as_quaternion() * I.as_quaternion();
  return 0.5 * ((Quaternion::one() - prod) * plus + (Quaternion::one() + prod) * minus);
}

Quaternion rep_eval(const SliceSeries& f, const ImaginaryUnit& I, const Quaternion& q) {
  return representation_formula(I, q, [&f](const Quaternion& z) { return eval(f, z); });
}

SliceSeries derivative(const SliceSeries& f, std::size_t t) {
  if (t == 0) return f;
  if (t > f.degree()) return SliceSeries({Quaternion{}}, f.nominal_radius());
  std::vector<Quaternion> out(f.degree() - t + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    double falling = 1.0;  // (k+t)!/k!
    for (std::size_t m = k + 1; m <= k + t; ++m) falling *= static_cast<double>(m);
    out[k] = f.coeff(k + t) * falling;
  }
  return SliceSeries(std::move(out), f.nominal_radius());
}

SliceSeries dilate(const SliceSeries& f, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorKind::BadRadius, "dilation radius must lie in (0, 1], got " + std::to_string(r));
  }
  std::vector<Quaternion> out(f.coeffs().begin(), f.coeffs().end());
  double rk = 1.0;
  for (auto& a : out) {
    a = a * rk;
    rk *= r;
  }
  return SliceSeries(std::move(out), f.nominal_radius(), f.tail_bound());
}

SliceSeries truncate(const SliceSeries& f, std::size_t k) {
  if (k >= f.degree()) return f;
  // The dropped terms join the tail bound.
  double tail = f.tail_bound();
  const double R = f.nominal_radius();
  for (std::size_t m = k + 1; m <= f.degree(); ++m) {
    tail += std::pow(R, static_cast<double>(m)) * f.coeff(m).modulus();
  }
  return SliceSeries(std::vector<Quaternion>(f.coeffs().begin(), f.coeffs().begin() + k + 1),
                     R, tail);
}

}  // namespace slicefock
