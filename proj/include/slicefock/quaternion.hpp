#pragma once

/**
 * Quaternion arithmetic over binary64, the sphere S of imaginary units, and
 * the slice decomposition q = x + y I_q.
 *
 * Basis rules: i^2 = j^2 = k^2 = ijk = -1, hence ij = k, jk = i, ki = j.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <tuple>
#include <vector>

namespace slicefock {

struct Quaternion {
  double w = 0.0;  // real part
  double x = 0.0;  // i
  double y = 0.0;  // j
  double z = 0.0;  // k

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w{w_}, x{x_}, y{y_}, z{z_} {}

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double modulus() const { return std::sqrt(norm_sq()); }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return {a.w / s, a.x / s, a.y / s, a.z / s}; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

double distance(const Quaternion& a, const Quaternion& b);

/// q^{-1} = conj(q) / |q|^2. Throws ZeroDivisor when |q| < 1e-300.
Quaternion inverse(const Quaternion& q);

struct ConjModInv {
  Quaternion conjugate;
  double modulus;
  Quaternion inverse;
};

/// Returns (conj(q), |q|, q^{-1}); throws ZeroDivisor for q = 0.
ConjModInv quat_conj_mod_inv(const Quaternion& q);

/// A point of the unit sphere S of purely imaginary quaternions. Construction
/// normalizes; a zero vector is rejected.
class ImaginaryUnit {
public:
  ImaginaryUnit() = default;  // i
  ImaginaryUnit(double x, double y, double z);

  static ImaginaryUnit i() { return {}; }
  static ImaginaryUnit j() { return {0.0, 1.0, 0.0}; }
  static ImaginaryUnit k() { return {0.0, 0.0, 1.0}; }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }
  ImaginaryUnit operator-() const { return {-x_, -y_, -z_}; }

  /// Embeds re + im*I.
  Quaternion embed(double re, double im) const { return {re, im * x_, im * y_, im * z_}; }
  Quaternion embed(std::complex<double> c) const { return embed(c.real(), c.imag()); }

private:
  double x_ = 1.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

double dot(const ImaginaryUnit& a, const ImaginaryUnit& b);

/// q = re + im * unit with im >= 0.
struct SliceCoords {
  double re = 0.0;
  double im = 0.0;
  ImaginaryUnit unit;

  Quaternion compose() const { return unit.embed(re, im); }
};

/// Slice decomposition; a real q gets the unit i.
SliceCoords decompose(const Quaternion& q);

/// Deterministic J in S with <I, J> = 0: Gram-Schmidt of the first of i, j, k
/// whose component orthogonal to I has length at least 1/2.
ImaginaryUnit orthonormal_partner(const ImaginaryUnit& I);

/// Fibonacci lattice on S^2; count = 1 yields [i]. Throws InvalidArgument for
/// count = 0. Antipodal symmetry is not guaranteed.
std::vector<ImaginaryUnit> sphere_sample(std::size_t count);

/// sphere_sample(count) followed by the canonical units i, j, k.
std::vector<ImaginaryUnit> default_sphere(std::size_t count = 64);

}  // namespace slicefock
