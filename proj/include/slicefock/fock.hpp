#pragma once

/**
 * Gaussian-weighted norms on slice disks B_I = {x + yI : x^2 + y^2 < R^2}.
 *
 * For 0 < p < inf the slice norm is
 *
 *   ||f||_{alpha,I} = ( (alpha/pi)^n  int_{B_I} |f(z) e^{-alpha|z|^2/2}|^p dA_I(z) )^{1/p},
 *   dA_I = dx dy / pi,
 *
 * and the Fock norm is its supremum over I in S, discretized by a finite set
 * of imaginary units. The sup family uses |f(q)| e^{-alpha|q|^2/2}.
 *
 * Slice values are computed through the splitting f(z) = f1(z) + f2(z) J,
 * so |f(z)|^2 = |f1(z)|^2 + |f2(z)|^2 costs two complex Horner passes.
 */

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slicefock/multi_poly.hpp"
#include "slicefock/quadrature.hpp"
#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock {

struct FockParams {
  double alpha = 1.0;
  double p = 2.0;  // +infinity selects the sup family
  std::size_t n = 1;
  double radius = 1.0;

  bool is_sup() const { return std::isinf(p); }
  /// Throws InvalidArgument unless alpha > 0, radius > 0, p > 0, n >= 1.
  void validate() const;
};

struct GridSpec {
  std::size_t radial = 0;
  std::size_t angular = 0;
  double radius = 1.0;
  std::size_t sphere_count = 0;
  std::size_t refinements = 0;  // grid doublings beyond the requested grid
  std::string kind;             // "quadrature" or "sup-search"
};

struct NormReport {
  double value = 0.0;
  std::vector<std::pair<ImaginaryUnit, double>> per_slice;
  double tail_bound = 0.0;
  GridSpec grid;
};

/// A slice integral with the grid it converged on.
struct SliceIntegral {
  double value = 0.0;
  QuadratureGrid grid;
  std::size_t refinements = 0;
};

/// (alpha/pi)^n int_{B_I} |f e^{-alpha|z|^2/2}|^p dA_I, i.e. the p-th power
/// of the slice norm. Doubles the grid until successive values agree to 1e-8
/// relative; throws GridTooCoarse when the cap is reached with a disagreement
/// above 1e-6.
SliceIntegral slice_norm_pow(const SliceSeries& f, const ImaginaryUnit& I,
                             const FockParams& params, const QuadratureGrid& grid);

/// Single-grid quadrature, no refinement.
double slice_norm_pow_fixed(const SliceSeries& f, const ImaginaryUnit& I,
                            const FockParams& params, const QuadratureGrid& grid);

double slice_norm_p(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params,
                    const QuadratureGrid& grid);

NormReport fock_norm_p(const SliceSeries& f, const FockParams& params, const QuadratureGrid& grid,
                       const std::vector<ImaginaryUnit>& sphere);

struct SupSearch {
  std::size_t radial_samples = 64;
  std::size_t angular_samples = 128;
};

/// sup over B_I of |f(z)| e^{-alpha|z|^2/2}: Chebyshev-Lobatto radii times a
/// uniform angular grid, then golden-section refinement around the best node.
double slice_sup_norm(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params,
                      SupSearch search = {});

/// Maximum of slice_sup_norm over the sampled units.
NormReport sup_norm(const SliceSeries& f, const FockParams& params,
                    const std::vector<ImaginaryUnit>& sphere, SupSearch search = {});

/// int_{B_I} f(z) conj(g(z)) (alpha/pi)^n e^{-alpha|z|^2} dA_I(z), computed
/// as written; no sesquilinearity law is assumed. Refines like slice_norm_pow.
Quaternion inner_product(const SliceSeries& f, const SliceSeries& g, const ImaginaryUnit& I,
                         const FockParams& params, const QuadratureGrid& grid);

struct EquivalenceReport {
  double p = 2.0;
  std::vector<std::pair<ImaginaryUnit, double>> slice_pow;  // ||f||_{alpha,I}^p
  double fock_pow = 0.0;                                    // max over slices
  double sandwich_bound = 0.0;                              // 2^p
  double pair_bound = 0.0;                                  // 2^{max(p,1)}
  double worst_sandwich_ratio = 1.0;  // max_I fock_pow / slice_pow(I)
  double worst_pair_ratio = 1.0;      // max_{I,J} slice_pow(J) / slice_pow(I)
  std::size_t worst_sandwich_slice = 0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
};

/// Checks ||f||_I^p <= ||f||^p <= 2^p ||f||_I^p for every sampled I and
/// ||f||_J^p <= 2^{max(p,1)} ||f||_I^p for every sampled pair, with slack
/// 1e-9 on the ratios. Requires 1 < p < inf (InvalidArgument otherwise).
/// Throws ViolationDetected naming the offending units.
EquivalenceReport norm_equivalence_check(const SliceSeries& f, const FockParams& params,
                                         const QuadratureGrid& grid,
                                         const std::vector<ImaginaryUnit>& sphere);

struct SupEquivalenceReport {
  std::vector<std::pair<ImaginaryUnit, double>> slice_sup;
  double sup = 0.0;
  double worst_ratio = 1.0;  // max_I sup / slice_sup(I), bounded by 2
  std::size_t worst_slice = 0;
};

/// ||f||_{inf,alpha,I} <= ||f||_{inf,alpha} <= 2 ||f||_{inf,alpha,I} over the
/// sampled units, slack 1e-9. Throws ViolationDetected.
SupEquivalenceReport sup_equivalence_check(const SliceSeries& f, const FockParams& params,
                                           const std::vector<ImaginaryUnit>& sphere,
                                           SupSearch search = {});

struct MonomialBoundReport {
  double lhs = 0.0;  // ||a_m z^m||_{inf,alpha}
  double rhs = 0.0;  // 2^{max(p,1)} prod sqrt(m_k/2) sup_{B_I} |f| e^{-alpha|z|^2/2}
  bool vacuous = false;  // some m_k = 0 makes the product vanish; not checked
  bool pass = true;
};

/// sup over the ball of prod |z_k|^{m_k} e^{-alpha|z|^2/2} (closed form).
double monomial_weight_sup(std::span<const unsigned> m, double alpha, double radius);

/// `mono` must be a term of f (coefficient match within 1e-12); requires
/// 1 < p < inf.
MonomialBoundReport monomial_bound_check(const MultiMonomial& mono, const SliceSeries& f,
                                         const FockParams& params, const ImaginaryUnit& I,
                                         SupSearch search = {});
MonomialBoundReport monomial_bound_check(const MultiMonomial& mono, const MultiPolynomial& f,
                                         const FockParams& params, const ImaginaryUnit& I,
                                         std::size_t samples = 20000);

/// sup over B_I^n of |P(z)| e^{-alpha|z|^2/2}: Halton sampling of the ball
/// followed by compass search from the best sample.
double multi_slice_sup(const MultiPolynomial& P, const ImaginaryUnit& I, const FockParams& params,
                       std::size_t samples = 20000);

/// ||f_r - f||_{inf,alpha} for each r in r_list (strictly increasing, in (0,1)).
std::vector<double> dilation_convergence(const SliceSeries& f, const FockParams& params,
                                         const std::vector<double>& r_list,
                                         const std::vector<ImaginaryUnit>& sphere,
                                         SupSearch search = {});

struct DerivativeSlice {
  ImaginaryUnit unit;
  double f_ratio = 0.0;   // sup |d^t f| e^{..} / (1+|z|)^t on B_I
  double f1_ratio = 0.0;  // same for the first split component
  double f2_ratio = 0.0;
};

struct DerivativeReport {
  std::size_t t = 0;
  double sup_ratio = 0.0;  // max over slices of f_ratio
  std::vector<DerivativeSlice> per_slice;
  double worst_margin = -std::numeric_limits<double>::infinity();  // max f - (f1 + f2)
  bool pass = true;
};

/// Weighted t-th derivative sup and the split-sum inequality
/// sup_I |d^t f| <= sup_I |f1^(t)| + sup_I |f2^(t)| + 1e-9 on every sampled
/// slice, with J = orthonormal_partner(I). d^t f is evaluated directly in H.
DerivativeReport derivative_criterion(const SliceSeries& f, std::size_t t,
                                      const FockParams& params,
                                      const std::vector<ImaginaryUnit>& sphere,
                                      SupSearch search = {});

struct LittleSpaceProfile {
  std::vector<double> rho;
  std::vector<double> values;  // M(rho)
  bool decreasing_tail = false;  // last three values nonincreasing
  bool member = false;           // decreasing tail and M(rho_last) <= tolerance
  double tolerance = 1e-3;
};

/// M(rho) = max over sampled I and theta of |f(rho e^{I theta})| e^{-alpha rho^2/2}
/// for increasing rho in (0, R].
LittleSpaceProfile little_space_profile(const SliceSeries& f, const FockParams& params,
                                        const std::vector<double>& rho_list,
                                        const std::vector<ImaginaryUnit>& sphere,
                                        std::size_t angular_samples = 256);

}  // namespace slicefock
