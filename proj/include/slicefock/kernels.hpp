#pragma once

// Slice-regular exponential kernel e_*^{alpha q conj(w)} and atomic synthesis
// of Fock functions from finitely many normalized kernels.

#include <cstddef>
#include <vector>

#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock {

struct KernelValue {
  Quaternion value;
  /// (alpha|q||w|)^{N+1} / (N+1)! * e^{alpha|q||w|}
  double tail_bound = 0.0;
};

/// sum_{n=0}^{N} q^n (alpha^n / n!) conj(w)^n, powers of q on the left.
KernelValue star_exp_eval(const Quaternion& q, const Quaternion& w, double alpha, std::size_t N);

/// star_exp_eval(q, z_k, alpha, N) * e^{-alpha|z_k|^2/2}; the tail bound is
/// scaled by the same factor.
KernelValue normalized_kernel_eval(const Quaternion& z_k, const Quaternion& q, double alpha,
                                   std::size_t N);

struct AtomicData {
  std::vector<Quaternion> points;  // z_k
  std::vector<Quaternion> coeffs;  // a_k
  double alpha = 1.0;
  std::size_t trunc_degree = 32;   // N
};

/// sum_k w_{z_k}(q) a_k as a degree-N SliceSeries:
///   c_n = sum_k (alpha^n / n!) conj(z_k)^n e^{-alpha|z_k|^2/2} a_k.
/// Every z_k must lie in C_I (PointOffSlice otherwise). The series' tail
/// bound covers |q| <= 1.
SliceSeries atomic_synthesis(const AtomicData& data, const ImaginaryUnit& I);

/// Square lattice {spacing (m + n I)} within `radius`, ordered by modulus then
/// by angle in [0, 2 pi).
std::vector<Quaternion> lattice_points(double spacing, const ImaginaryUnit& I, double radius);

}  // namespace slicefock
