#pragma once

// Slice-regular functions of one quaternionic variable, represented by
// truncated power series f(q) = sum_k q^k a_k with right coefficients.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "slicefock/quaternion.hpp"

namespace slicefock {

class SliceSeries {
public:
  /// The zero-degree constant series [0].
  SliceSeries();
  /// Throws InvalidArgument for an empty coefficient list or radius <= 0.
  explicit SliceSeries(std::vector<Quaternion> coeffs, double nominal_radius = 1.0,
                       double tail_bound = 0.0);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Quaternion> coeffs() const { return coeffs_; }
  const Quaternion& coeff(std::size_t k) const { return coeffs_[k]; }
  /// Zero beyond the stored degree.
  Quaternion coeff_or_zero(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Quaternion{};
  }
  double nominal_radius() const { return nominal_radius_; }
  /// Upper bound on sum_{k>N} R^k |a_k| of the series this one truncates;
  /// zero when the series is an exact polynomial.
  double tail_bound() const { return tail_bound_; }

  bool operator==(const SliceSeries&) const = default;

private:
  std::vector<Quaternion> coeffs_;
  double nominal_radius_ = 1.0;
  double tail_bound_ = 0.0;
};

/// Holomorphic C_I-valued polynomial sum_k z^k c_k with c_k = re + im*I.
struct ComplexSlicePolynomial {
  ImaginaryUnit unit;
  std::vector<std::complex<double>> coeffs;

  std::complex<double> eval(std::complex<double> z) const;
};

/// Horner evaluation of sum q^k a_k.
Quaternion eval(const SliceSeries& f, const Quaternion& q);

SliceSeries operator+(const SliceSeries& f, const SliceSeries& g);
SliceSeries operator-(const SliceSeries& f, const SliceSeries& g);
/// Right multiplication of every coefficient: (f c)(q) = f(q) c.
SliceSeries operator*(const SliceSeries& f, const Quaternion& c);

/// c_n = sum_{k=0}^{n} a_k b_{n-k}. Each coefficient is summed in increasing
/// k regardless of how many threads share the work.
SliceSeries star_mul(const SliceSeries& f, const SliceSeries& g);
SliceSeries regular_conjugate(const SliceSeries& f);
/// f * f^c; every coefficient is real up to rounding.
SliceSeries symmetrization(const SliceSeries& f);

/// Pointwise value of the star-reciprocal: (f * f^c)(q)^{-1} f^c(q).
/// Throws SingularPoint when |(f * f^c)(q)| < 1e-12.
Quaternion star_inverse_eval(const SliceSeries& f, const Quaternion& q);

/// f(q)^{-1} q f(q). Throws ZeroValue when |f(q)| < 1e-12.
Quaternion transform_point(const SliceSeries& f, const Quaternion& q);

/// Q_I: a_n = a_{n,1} + a_{n,2} J with a_{n,l} in C_I.
/// Throws NotOrthogonal when |<I, J>| >= 1e-10.
std::pair<ComplexSlicePolynomial, ComplexSlicePolynomial> split(const SliceSeries& f,
                                                                const ImaginaryUnit& I,
                                                                const ImaginaryUnit& J);

/// Inverse of split. Throws UnitMismatch when f1 and f2 live on different
/// slices, NotOrthogonal when J is not orthogonal to that slice.
SliceSeries extend(const ComplexSlicePolynomial& f1, const ComplexSlicePolynomial& f2,
                   const ImaginaryUnit& J, double nominal_radius = 1.0);

/// Representation formula for a function known on the slice C_I:
/// f(x + y I_q) = 1/2 [(1 - I_q I) f(x + yI) + (1 + I_q I) f(x - yI)].
Quaternion representation_formula(const ImaginaryUnit& I, const Quaternion& q,
                                  const std::function<Quaternion(const Quaternion&)>& on_slice);

/// representation_formula with eval(f, .) on C_I.
Quaternion rep_eval(const SliceSeries& f, const ImaginaryUnit& I, const Quaternion& q);

/// t-th slice derivative: b_k = (k+t)!/k! a_{k+t}. Returns [0] when t > degree.
SliceSeries derivative(const SliceSeries& f, std::size_t t);

/// f_r(q) = f(rq). Throws BadRadius unless 0 < r <= 1.
SliceSeries dilate(const SliceSeries& f, double r);

/// Drops coefficients of index > k.
SliceSeries truncate(const SliceSeries& f, std::size_t k);

}  // namespace slicefock
