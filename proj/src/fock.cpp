#include "slicefock/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "slicefock/error.hpp"
#include "slicefock/parallel.hpp"

namespace slicefock {

namespace {

constexpr double kConvergedTol = 1e-8;
constexpr double kAcceptAtCapTol = 1e-6;
constexpr double kRatioSlack = 1e-9;

// Complex Horner with explicit arithmetic; std::complex multiplication goes
// through the Annex G NaN recovery path, which dominates the quadrature cost.
struct Poly {
  std::vector<double> re;
  std::vector<double> im;

  explicit Poly(const ComplexSlicePolynomial& p) {
    re.reserve(p.coeffs.size());
    im.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
  }

  void eval(double x, double y, double& out_re, double& out_im) const {
    double ar = 0.0;
    double ai = 0.0;
    for (std::size_t k = re.size(); k-- > 0;) {
      const double tr = x * ar - y * ai + re[k];
      const double ti = x * ai + y * ar + im[k];
      ar = tr;
      ai = ti;
    }
    out_re = ar;
    out_im = ai;
  }

  double abs(double x, double y) const {
    double r, i;
    eval(x, y, r, i);
    return std::hypot(r, i);
  }
};

// f restricted to C_I as f1 + f2 J.
class SliceView {
public:
  SliceView(const SliceSeries& f, const ImaginaryUnit& I)
      : SliceView(split(f, I, orthonormal_partner(I)), I) {}

  double modulus_sq(double x, double y) const {
    double r1, i1, r2, i2;
    f1_.eval(x, y, r1, i1);
    f2_.eval(x, y, r2, i2);
    return r1 * r1 + i1 * i1 + r2 * r2 + i2 * i2;
  }

  Quaternion value(double x, double y) const {
    double r1, i1, r2, i2;
    f1_.eval(x, y, r1, i1);
    f2_.eval(x, y, r2, i2);
    return unit_.embed(r1, i1) + unit_.embed(r2, i2) * partner_.as_quaternion();
  }

  const Poly& f1() const { return f1_; }
  const Poly& f2() const { return f2_; }

private:
  SliceView(std::pair<ComplexSlicePolynomial, ComplexSlicePolynomial> parts, const ImaginaryUnit& I)
      : unit_(I), partner_(orthonormal_partner(I)), f1_(parts.first), f2_(parts.second) {}

  ImaginaryUnit unit_;
  ImaginaryUnit partner_;
  Poly f1_;
  Poly f2_;
};

double density_prefactor(const FockParams& params) {
  // (alpha/pi)^n from the measure, 1/pi from dA_I = dx dy / pi
  return std::pow(params.alpha / std::numbers::pi, static_cast<double>(params.n)) /
         std::numbers::pi;
}

void require_one_variable(const FockParams& params) {
  params.validate();
  if (params.n != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "slice series are one-variable functions; params.n must be 1, got " +
                    std::to_string(params.n));
  }
}

void require_p_above_one(const FockParams& params, const char* what) {
  if (!(params.p > 1.0) || params.is_sup()) {
    std::ostringstream os;
    os << what << " holds for 1 < p < inf; refusing p = " << params.p;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

struct Accumulated {
  double value = 0.0;
  double scale = 0.0;
};

struct AccumulatedQ {
  Quaternion value;
  double scale = 0.0;
};

double diff_of(double a, double b) { return std::abs(a - b); }
double diff_of(const Quaternion& a, const Quaternion& b) { return distance(a, b); }

// Doubles the grid until two successive values agree to kConvergedTol
// relative to the integrand scale.
template <class Result, class Compute>
std::pair<Result, SliceIntegral> refine(const QuadratureGrid& start, Compute compute) {
  std::vector<std::string> trace;
  QuadratureGrid grid = start;
  Result prev = compute(grid);
  std::size_t refinements = 0;
  if (grid.at_cap()) {
    return {prev, SliceIntegral{0.0, grid, 0}};
  }
  for (;;) {
    QuadratureGrid next = grid.refined();
    Result cur = compute(next);
    ++refinements;
    const double diff = diff_of(cur.value, prev.value);
    const double scale = std::max(cur.scale, prev.scale);
    std::ostringstream os;
    os.precision(17);
    os << grid.describe() << " -> " << next.describe() << ": |delta| = " << diff
       << ", scale = " << scale;
    trace.push_back(os.str());
    if (diff <= kConvergedTol * scale) {
      return {cur, SliceIntegral{0.0, next, refinements}};
    }
    if (next.at_cap()) {
      if (diff <= kAcceptAtCapTol * scale) {
        return {cur, SliceIntegral{0.0, next, refinements}};
      }
      throw GridTooCoarseError("quadrature did not converge at the refinement cap", trace);
    }
    grid = std::move(next);
    prev = std::move(cur);
  }
}

struct AngleTable {
  std::vector<double> c;
  std::vector<double> s;
  explicit AngleTable(const QuadratureGrid& grid) {
    c.resize(grid.angular_count());
    s.resize(grid.angular_count());
    for (std::size_t j = 0; j < grid.angular_count(); ++j) {
      c[j] = std::cos(grid.angle(j));
      s[j] = std::sin(grid.angle(j));
    }
  }
};

Accumulated integrate_pow(const SliceView& view, const FockParams& params,
                          const QuadratureGrid& grid) {
  const AngleTable ang(grid);
  const double half_p = 0.5 * params.p;
  const bool square = params.p == 2.0;
  double total = 0.0;
  for (std::size_t i = 0; i < grid.radial_count(); ++i) {
    const double r = grid.radial_nodes()[i].x;
    const double weight = grid.polar_weight(i) * std::exp(-half_p * params.alpha * r * r);
    double ring = 0.0;
    for (std::size_t j = 0; j < grid.angular_count(); ++j) {
      const double m2 = view.modulus_sq(r * ang.c[j], r * ang.s[j]);
      ring += square ? m2 : std::pow(m2, half_p);
    }
    total += weight * ring;
  }
  const double v = density_prefactor(params) * total;
  return {v, v};
}

// Best nodes first; used to seed local refinement.
struct GridHit {
  double value;
  std::size_t i;
  std::size_t j;
};

// Maximizes g(r, theta) over the disk of radius R. Refines the three best
// grid nodes by alternating golden-section passes in r and theta.
template <class G>
double maximize_on_disk(const G& g, double R, const SupSearch& search) {
  const auto radii = chebyshev_lobatto(std::max<std::size_t>(search.radial_samples, 2), R);
  const std::size_t M = std::max<std::size_t>(search.angular_samples, 1);
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(M);
  std::array<GridHit, 3> top{};
  for (auto& h : top) h = {-1.0, 0, 0};
  auto consider = [&top](double v, std::size_t i, std::size_t j) {
    if (v <= top.back().value) return;
    top.back() = {v, i, j};
    std::sort(top.begin(), top.end(), [](const GridHit& a, const GridHit& b) { return a.value > b.value; });
  };
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const std::size_t count = i == 0 ? 1 : M;  // the center is a single point
    for (std::size_t j = 0; j < count; ++j) {
      consider(g(radii[i], dtheta * static_cast<double>(j)), i, j);
    }
  }
  double best = std::max(0.0, top.front().value);
  for (const auto& hit : top) {
    if (hit.value < 0.0) continue;
    const double r_lo = radii[hit.i == 0 ? 0 : hit.i - 1];
    const double r_hi = radii[std::min(hit.i + 1, radii.size() - 1)];
    double theta = dtheta * static_cast<double>(hit.j);
    double r = golden_section_max([&](double rr) { return g(rr, theta); }, r_lo, r_hi);
    const double t0 = theta;
    theta = golden_section_max([&](double tt) { return g(r, tt); }, t0 - dtheta, t0 + dtheta);
    r = golden_section_max([&](double rr) { return g(rr, theta); }, r_lo, r_hi);
    best = std::max(best, g(r, theta));
  }
  return best;
}

double weight_sup(double alpha, double r) { return std::exp(-0.5 * alpha * r * r); }

double slice_sup_view(const SliceView& view, const FockParams& params, const SupSearch& search) {
  return maximize_on_disk(
      [&](double r, double theta) {
        return std::sqrt(view.modulus_sq(r * std::cos(theta), r * std::sin(theta))) *
               weight_sup(params.alpha, r);
      },
      params.radius, search);
}

GridSpec grid_spec_of(const QuadratureGrid& g, std::size_t sphere_count, std::size_t refinements) {
  return {g.radial_count(), g.angular_count(), g.radius(), sphere_count, refinements, "quadrature"};
}

void require_sphere(const std::vector<ImaginaryUnit>& sphere) {
  if (sphere.empty()) throw Error(ErrorKind::InvalidArgument, "sphere sample must be nonempty");
}

std::string unit_text(const ImaginaryUnit& u) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << u.x() << ", " << u.y() << ", " << u.z() << ")";
  return os.str();
}

// a / b with 0 / 0 = 1.
double ratio(double a, double b) {
  if (b == 0.0) return a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return a / b;
}

}  // namespace

void FockParams::validate() const {
  if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
  if (!(p > 0.0)) throw Error(ErrorKind::InvalidArgument, "p must be positive or infinite");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension n must be at least 1");
}

double slice_norm_pow_fixed(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params,
                            const QuadratureGrid& grid) {
  require_one_variable(params);
  if (params.is_sup()) throw Error(ErrorKind::InvalidArgument, "p = inf: use sup_norm");
  return integrate_pow(SliceView(f, I), params, grid).value;
}

SliceIntegral slice_norm_pow(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params,
                             const QuadratureGrid& grid) {
  require_one_variable(params);
  if (params.is_sup()) throw Error(ErrorKind::InvalidArgument, "p = inf: use sup_norm");
  const QuadratureGrid start(grid.radial_count(), grid.angular_count(), params.radius);
  const SliceView view(f, I);
  auto [acc, info] = refine<Accumulated>(
      start, [&](const QuadratureGrid& g) { return integrate_pow(view, params, g); });
  info.value = acc.value;
  return info;
}

double slice_norm_p(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params,
                    const QuadratureGrid& grid) {
  return std::pow(slice_norm_pow(f, I, params, grid).value, 1.0 / params.p);
}

NormReport fock_norm_p(const SliceSeries& f, const FockParams& params, const QuadratureGrid& grid,
                       const std::vector<ImaginaryUnit>& sphere) {
  require_sphere(sphere);
  std::vector<SliceIntegral> parts(sphere.size());
  parallel_for(sphere.size(),
               [&](std::size_t s) { parts[s] = slice_norm_pow(f, sphere[s], params, grid); });
  NormReport report;
  std::size_t refinements = 0;
  QuadratureGrid finest = parts.front().grid;
  for (std::size_t s = 0; s < sphere.size(); ++s) {
    const double norm = std::pow(parts[s].value, 1.0 / params.p);
    report.per_slice.emplace_back(sphere[s], norm);
    report.value = std::max(report.value, norm);
    if (parts[s].refinements > refinements) {
      refinements = parts[s].refinements;
      finest = parts[s].grid;
    }
  }
  report.tail_bound = f.tail_bound();
  report.grid = grid_spec_of(finest, sphere.size(), refinements);
  return report;
}

double slice_sup_norm(const SliceSeries& f, const ImaginaryUnit& I, const FockParams& params,
                      SupSearch search) {
  require_one_variable(params);
  return slice_sup_view(SliceView(f, I), params, search);
}

NormReport sup_norm(const SliceSeries& f, const FockParams& params,
                    const std::vector<ImaginaryUnit>& sphere, SupSearch search) {
  require_one_variable(params);
  require_sphere(sphere);
  std::vector<double> per(sphere.size());
  parallel_for(sphere.size(), [&](std::size_t s) {
    per[s] = slice_sup_view(SliceView(f, sphere[s]), params, search);
  });
  NormReport report;
  for (std::size_t s = 0; s < sphere.size(); ++s) {
    report.per_slice.emplace_back(sphere[s], per[s]);
    report.value = std::max(report.value, per[s]);
  }
  report.tail_bound = f.tail_bound();
  report.grid = {search.radial_samples, search.angular_samples, params.radius, sphere.size(), 0,
                 "sup-search"};
  return report;
}

Quaternion inner_product(const SliceSeries& f, const SliceSeries& g, const ImaginaryUnit& I,
                         const FockParams& params, const QuadratureGrid& grid) {
  require_one_variable(params);
  const SliceView vf(f, I);
  const SliceView vg(g, I);
  const double pref = density_prefactor(params);
  auto compute = [&](const QuadratureGrid& q) {
    const AngleTable ang(q);
    Quaternion total{};
    double scale = 0.0;
    for (std::size_t i = 0; i < q.radial_count(); ++i) {
      const double r = q.radial_nodes()[i].x;
      const double w = q.polar_weight(i) * std::exp(-params.alpha * r * r);
      Quaternion ring{};
      double ring_abs = 0.0;
      for (std::size_t j = 0; j < q.angular_count(); ++j) {
        const Quaternion a = vf.value(r * ang.c[j], r * ang.s[j]);
        const Quaternion b = vg.value(r * ang.c[j], r * ang.s[j]);
        ring += a * b.conj();
        ring_abs += a.modulus() * b.modulus();
      }
      total += ring * w;
      scale += ring_abs * w;
    }
    return AccumulatedQ{total * pref, scale * pref};
  };
  const QuadratureGrid start(grid.radial_count(), grid.angular_count(), params.radius);
  return refine<AccumulatedQ>(start, compute).first.value;
}

EquivalenceReport norm_equivalence_check(const SliceSeries& f, const FockParams& params,
                                         const QuadratureGrid& grid,
                                         const std::vector<ImaginaryUnit>& sphere) {
  require_p_above_one(params, "norm equivalence");
  require_sphere(sphere);
  std::vector<double> pow_vals(sphere.size());
  parallel_for(sphere.size(), [&](std::size_t s) {
    pow_vals[s] = slice_norm_pow(f, sphere[s], params, grid).value;
  });

  EquivalenceReport rep;
  rep.p = params.p;
  rep.sandwich_bound = std::pow(2.0, params.p);
  rep.pair_bound = std::pow(2.0, std::max(params.p, 1.0));
  for (std::size_t s = 0; s < sphere.size(); ++s) {
    rep.slice_pow.emplace_back(sphere[s], pow_vals[s]);
    rep.fock_pow = std::max(rep.fock_pow, pow_vals[s]);
  }
  rep.worst_sandwich_ratio = 1.0;
  for (std::size_t s = 0; s < sphere.size(); ++s) {
    const double ratio_s = ratio(rep.fock_pow, pow_vals[s]);
    if (ratio_s > rep.worst_sandwich_ratio) {
      rep.worst_sandwich_ratio = ratio_s;
      rep.worst_sandwich_slice = s;
    }
  }
  // The largest pairwise ratio is max / min.
  const auto [lo, hi] = std::minmax_element(pow_vals.begin(), pow_vals.end());
  rep.worst_pair_ratio = ratio(*hi, *lo);
  rep.worst_pair = {static_cast<std::size_t>(hi - pow_vals.begin()),
                    static_cast<std::size_t>(lo - pow_vals.begin())};

  if (rep.worst_sandwich_ratio > rep.sandwich_bound + kRatioSlack) {
    std::ostringstream os;
    os << "||f||^p / ||f||_I^p = " << rep.worst_sandwich_ratio << " > 2^p = " << rep.sandwich_bound
       << " at I = " << unit_text(sphere[rep.worst_sandwich_slice]);
    throw Error(ErrorKind::ViolationDetected, os.str());
  }
  if (rep.worst_pair_ratio > rep.pair_bound + kRatioSlack) {
    std::ostringstream os;
    os << "||f||_J^p / ||f||_I^p = " << rep.worst_pair_ratio << " > " << rep.pair_bound
       << " at J = " << unit_text(sphere[rep.worst_pair.first])
       << ", I = " << unit_text(sphere[rep.worst_pair.second]);
    throw Error(ErrorKind::ViolationDetected, os.str());
  }
  return rep;
}

SupEquivalenceReport sup_equivalence_check(const SliceSeries& f, const FockParams& params,
                                           const std::vector<ImaginaryUnit>& sphere,
                                           SupSearch search) {
  const NormReport sup = sup_norm(f, params, sphere, search);
  SupEquivalenceReport rep;
  rep.slice_sup = sup.per_slice;
  rep.sup = sup.value;
  for (std::size_t s = 0; s < sphere.size(); ++s) {
    const double ratio_s = ratio(rep.sup, rep.slice_sup[s].second);
    if (ratio_s > rep.worst_ratio) {
      rep.worst_ratio = ratio_s;
      rep.worst_slice = s;
    }
  }
  if (rep.worst_ratio > 2.0 + kRatioSlack) {
    std::ostringstream os;
    os << "||f||_inf / ||f||_inf,I = " << rep.worst_ratio << " > 2 at I = "
       << unit_text(sphere[rep.worst_slice]);
    throw Error(ErrorKind::ViolationDetected, os.str());
  }
  return rep;
}

double monomial_weight_sup(std::span<const unsigned> m, double alpha, double radius) {
  double total = 0.0;
  for (unsigned mk : m) total += mk;
  if (total == 0.0) return 1.0;
  // Maximize sum (m_k/2) log u_k - (alpha/2) sum u_k over sum u_k <= R^2,
  // u_k = |z_k|^2. Interior optimum u_k = m_k / alpha; otherwise the
  // constraint is active and u_k = R^2 m_k / |m|.
  const bool interior = total / alpha <= radius * radius;
  double log_value = 0.0;
  double sum_u = 0.0;
  for (unsigned mk : m) {
    if (mk == 0) continue;
    const double u = interior ? mk / alpha : radius * radius * mk / total;
    log_value += 0.5 * mk * std::log(u);
    sum_u += u;
  }
  log_value -= 0.5 * alpha * sum_u;
  return std::exp(log_value);
}

namespace {

double product_factor(std::span<const unsigned> m, bool& vacuous) {
  double prod = 1.0;
  vacuous = false;
  for (unsigned mk : m) {
    if (mk == 0) vacuous = true;
    prod *= std::sqrt(mk / 2.0);
  }
  return prod;
}

}  // namespace

MonomialBoundReport monomial_bound_check(const MultiMonomial& mono, const SliceSeries& f,
                                         const FockParams& params, const ImaginaryUnit& I,
                                         SupSearch search) {
  require_one_variable(params);
  require_p_above_one(params, "the monomial bound");
  if (mono.dimension() != 1) {
    throw Error(ErrorKind::InvalidArgument, "one-variable series needs a one-index monomial");
  }
  const std::size_t k = mono.multi_index[0];
  if (distance(f.coeff_or_zero(k), mono.coeff) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "monomial is not a term of f");
  }
  MonomialBoundReport rep;
  std::vector<Quaternion> c(k + 1);
  c[k] = mono.coeff;
  rep.lhs = sup_norm(SliceSeries(std::move(c)), params, {I}, search).value;
  const double prod = product_factor(mono.multi_index, rep.vacuous);
  if (rep.vacuous) return rep;
  rep.rhs = std::pow(2.0, std::max(params.p, 1.0)) * prod * slice_sup_norm(f, I, params, search);
  rep.pass = rep.lhs <= rep.rhs + kRatioSlack;
  return rep;
}

MonomialBoundReport monomial_bound_check(const MultiMonomial& mono, const MultiPolynomial& f,
                                         const FockParams& params, const ImaginaryUnit& I,
                                         std::size_t samples) {
  params.validate();
  require_p_above_one(params, "the monomial bound");
  if (mono.dimension() != f.dimension() || params.n != f.dimension()) {
    throw Error(ErrorKind::InvalidArgument, "monomial, polynomial and params disagree on n");
  }
  Quaternion term{};
  for (const auto& m : f.monomials()) {
    if (m.multi_index == mono.multi_index) term += m.coeff;
  }
  if (distance(term, mono.coeff) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "monomial is not a term of f");
  }
  MonomialBoundReport rep;
  rep.lhs = mono.coeff.modulus() * monomial_weight_sup(mono.multi_index, params.alpha, params.radius);
  const double prod = product_factor(mono.multi_index, rep.vacuous);
  if (rep.vacuous) return rep;
  rep.rhs = std::pow(2.0, std::max(params.p, 1.0)) * prod * multi_slice_sup(f, I, params, samples);
  rep.pass = rep.lhs <= rep.rhs + kRatioSlack;
  return rep;
}

namespace {

double radical_inverse(std::size_t index, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double result = 0.0;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return result;
}

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

}  // namespace

double multi_slice_sup(const MultiPolynomial& P, const ImaginaryUnit& I, const FockParams& params,
                       std::size_t samples) {
  params.validate();
  const std::size_t n = P.dimension();
  if (2 * n > std::size(kPrimes)) {
    throw Error(ErrorKind::InvalidArgument, "multi_slice_sup supports n <= 13");
  }
  const double R = params.radius;
  std::vector<std::complex<double>> z(n);
  auto value = [&](const std::vector<double>& xy) {
    double r2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      z[k] = {xy[2 * k], xy[2 * k + 1]};
      r2 += std::norm(z[k]);
    }
    return P.eval_on_slice(z, I).modulus() * std::exp(-0.5 * params.alpha * r2);
  };
  auto project = [&](std::vector<double>& xy) {
    double r2 = 0.0;
    for (double c : xy) r2 += c * c;
    if (r2 > R * R) {
      const double s = R / std::sqrt(r2);
      for (double& c : xy) c *= s;
    }
  };

  std::vector<double> best_xy(2 * n, 0.0);
  double best = value(best_xy);
  std::vector<double> xy(2 * n);
  std::size_t accepted = 0;
  // Moduli from the first n Halton coordinates (rejected outside the unit
  // ball), phases from the remaining n.
  for (std::size_t idx = 1; accepted < samples && idx < 64 * samples + 64; ++idx) {
    double norm2 = 0.0;
    std::vector<double> mod(n);
    for (std::size_t k = 0; k < n; ++k) {
      mod[k] = radical_inverse(idx, kPrimes[k]);
      norm2 += mod[k] * mod[k];
    }
    if (norm2 > 1.0) continue;
    ++accepted;
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = 2.0 * std::numbers::pi * radical_inverse(idx, kPrimes[n + k]);
      xy[2 * k] = R * mod[k] * std::cos(phase);
      xy[2 * k + 1] = R * mod[k] * std::sin(phase);
    }
    const double v = value(xy);
    if (v > best) {
      best = v;
      best_xy = xy;
    }
  }
  // Compass search with projection onto the ball.
  double step = 0.1 * R;
  while (step > 1e-10 * R) {
    bool improved = false;
    for (std::size_t c = 0; c < 2 * n; ++c) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> trial = best_xy;
        trial[c] += dir * step;
        project(trial);
        const double v = value(trial);
        if (v > best) {
          best = v;
          best_xy = std::move(trial);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

std::vector<double> dilation_convergence(const SliceSeries& f, const FockParams& params,
                                         const std::vector<double>& r_list,
                                         const std::vector<ImaginaryUnit>& sphere,
                                         SupSearch search) {
  if (r_list.empty()) throw Error(ErrorKind::InvalidArgument, "r_list must be nonempty");
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    if (!(r_list[i] > 0.0 && r_list[i] < 1.0)) {
      throw Error(ErrorKind::BadRadius, "dilation radii must lie in (0, 1)");
    }
    if (i > 0 && !(r_list[i] > r_list[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "r_list must be strictly increasing");
    }
  }
  std::vector<double> out;
  out.reserve(r_list.size());
  for (double r : r_list) out.push_back(sup_norm(dilate(f, r) - f, params, sphere, search).value);
  return out;
}

DerivativeReport derivative_criterion(const SliceSeries& f, std::size_t t,
                                      const FockParams& params,
                                      const std::vector<ImaginaryUnit>& sphere,
                                      SupSearch search) {
  require_one_variable(params);
  require_sphere(sphere);
  const SliceSeries g = derivative(f, t);
  const double tt = static_cast<double>(t);
  auto weight = [&](double r) { return std::exp(-0.5 * params.alpha * r * r) / std::pow(1.0 + r, tt); };

  DerivativeReport rep;
  rep.t = t;
  rep.per_slice.resize(sphere.size());
  parallel_for(sphere.size(), [&](std::size_t s) {
    const ImaginaryUnit& I = sphere[s];
    const SliceView view(g, I);
    DerivativeSlice d{I, 0.0, 0.0, 0.0};
    d.f_ratio = maximize_on_disk(
        [&](double r, double th) {
          return eval(g, I.embed(r * std::cos(th), r * std::sin(th))).modulus() * weight(r);
        },
        params.radius, search);
    d.f1_ratio = maximize_on_disk(
        [&](double r, double th) { return view.f1().abs(r * std::cos(th), r * std::sin(th)) * weight(r); },
        params.radius, search);
    d.f2_ratio = maximize_on_disk(
        [&](double r, double th) { return view.f2().abs(r * std::cos(th), r * std::sin(th)) * weight(r); },
        params.radius, search);
    rep.per_slice[s] = d;
  });
  for (const auto& d : rep.per_slice) {
    rep.sup_ratio = std::max(rep.sup_ratio, d.f_ratio);
    rep.worst_margin = std::max(rep.worst_margin, d.f_ratio - (d.f1_ratio + d.f2_ratio));
  }
  rep.pass = rep.worst_margin <= kRatioSlack;
  return rep;
}

LittleSpaceProfile little_space_profile(const SliceSeries& f, const FockParams& params,
                                        const std::vector<double>& rho_list,
                                        const std::vector<ImaginaryUnit>& sphere,
                                        std::size_t angular_samples) {
  require_one_variable(params);
  require_sphere(sphere);
  if (rho_list.empty()) throw Error(ErrorKind::InvalidArgument, "rho_list must be nonempty");
  for (std::size_t i = 0; i < rho_list.size(); ++i) {
    if (!(rho_list[i] > 0.0 && rho_list[i] <= params.radius)) {
      throw Error(ErrorKind::InvalidArgument, "profile radii must lie in (0, R]");
    }
    if (i > 0 && !(rho_list[i] > rho_list[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "rho_list must be strictly increasing");
    }
  }
  std::vector<SliceView> views;
  views.reserve(sphere.size());
  for (const auto& I : sphere) views.emplace_back(f, I);

  LittleSpaceProfile prof;
  prof.rho = rho_list;
  for (double rho : rho_list) {
    double m = 0.0;
    for (const auto& v : views) {
      for (std::size_t j = 0; j < angular_samples; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / angular_samples;
        m = std::max(m, v.modulus_sq(rho * std::cos(th), rho * std::sin(th)));
      }
    }
    prof.values.push_back(std::sqrt(m) * std::exp(-0.5 * params.alpha * rho * rho));
  }
  const std::size_t n = prof.values.size();
  prof.decreasing_tail = true;
  for (std::size_t i = n >= 3 ? n - 2 : 1; i < n; ++i) {
    if (prof.values[i] > prof.values[i - 1]) prof.decreasing_tail = false;
  }
  prof.member = prof.decreasing_tail && prof.values.back() <= prof.tolerance;
  return prof;
}

}  // namespace slicefock
