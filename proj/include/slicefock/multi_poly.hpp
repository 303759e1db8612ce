#pragma once

// Several-variable slice polynomials. Only slice evaluation is defined: every
// coordinate z_k lies in the same complex plane C_I.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock {

struct MultiMonomial {
  std::vector<unsigned> multi_index;  // m = (m_1, ..., m_n)
  Quaternion coeff;                   // a_m

  std::size_t dimension() const { return multi_index.size(); }
  unsigned total_degree() const;
  /// (prod_k z_k^{m_k}) a_m for z in C_I^n. Throws InvalidArgument on a
  /// dimension mismatch.
  Quaternion eval_on_slice(std::span<const std::complex<double>> z, const ImaginaryUnit& I) const;
};

class MultiPolynomial {
public:
  /// Throws InvalidArgument when n = 0 or a monomial has the wrong dimension.
  MultiPolynomial(std::size_t n, std::vector<MultiMonomial> monomials);

  std::size_t dimension() const { return n_; }
  std::span<const MultiMonomial> monomials() const { return monomials_; }

  Quaternion eval_on_slice(std::span<const std::complex<double>> z, const ImaginaryUnit& I) const;

  /// The n = 1 case as a SliceSeries (like powers are summed).
  SliceSeries to_series(double nominal_radius = 1.0) const;
  static MultiPolynomial from_series(const SliceSeries& f);

private:
  std::size_t n_;
  std::vector<MultiMonomial> monomials_;
};

}  // namespace slicefock
