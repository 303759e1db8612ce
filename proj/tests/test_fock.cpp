#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "slicefock/fock.hpp"

using namespace slicefock;
using oracle::throws_kind;

namespace {

constexpr double kPi = std::numbers::pi;
const double kE = std::exp(1.0);

// p = 2 slice norm squared: the split components are holomorphic, so the
// monomials are orthogonal and only the diagonal moments survive.
double norm2_oracle(const SliceSeries& f, double alpha, double R) {
  double s = 0.0;
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    s += f.coeff(k).norm_sq() * oracle::radial_moment(static_cast<int>(k), alpha, R);
  }
  return 2.0 * alpha / kPi * s;
}

// Brute-force sup of |f| e^{-alpha|z|^2/2} on one slice: dense polar grid,
// then repeated zooming around the best node.
double brute_slice_sup(const SliceSeries& f, const ImaginaryUnit& I, double alpha, double R) {
  const auto g = [&](double r, double t) {
    return eval(f, I.embed(r * std::cos(t), r * std::sin(t))).modulus() * std::exp(-alpha * r * r / 2);
  };
  const int nr = 400;
  const int nt = 800;
  double best = 0.0, br = 0.0, bt = 0.0;
  for (int a = 0; a <= nr; ++a) {
    for (int b = 0; b < nt; ++b) {
      const double r = R * a / nr;
      const double t = 2 * kPi * b / nt;
      if (const double v = g(r, t); v > best) {
        best = v;
        br = r;
        bt = t;
      }
    }
  }
  double hr = R / nr;
  double ht = 2 * kPi / nt;
  for (int pass = 0; pass < 40; ++pass) {
    const double cr = br, ct = bt;
    for (int a = -10; a <= 10; ++a) {
      for (int b = -10; b <= 10; ++b) {
        const double r = std::clamp(cr + hr * a / 10, 0.0, R);
        const double t = ct + ht * b / 10;
        if (const double v = g(r, t); v > best) {
          best = v;
          br = r;
          bt = t;
        }
      }
    }
    hr /= 2;
    ht /= 2;
  }
  return best;
}

FockParams with_p(double p) {
  FockParams f;
  f.p = p;
  return f;
}

const FockParams kSup = with_p(std::numeric_limits<double>::infinity());

}  // namespace

TEST_CASE("parameter validation") {
  FockParams p;
  CHECK_NOTHROW(p.validate());
  p.alpha = 0;
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { p.validate(); }));
  p = {};
  p.radius = -1;
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { p.validate(); }));
  p = {};
  p.p = 0;
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { p.validate(); }));
  p = {};
  p.n = 0;
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { p.validate(); }));
  p = {};
  p.n = 2;
  CHECK(throws_kind(ErrorKind::InvalidArgument,
                    [&] { (void)slice_norm_p(SliceSeries({1}), ImaginaryUnit(), p, QuadratureGrid()); }));
  CHECK(kSup.is_sup());
}

TEST_CASE("closed-form slice norms") {
  const FockParams p2;
  const QuadratureGrid grid;
  const auto I = ImaginaryUnit::i();
  const double one = slice_norm_pow(SliceSeries({1}), I, p2, grid).value;
  CHECK(std::abs(one - (1 - 1 / kE) / kPi) <= 1e-8 * one);
  const double lin = slice_norm_pow(SliceSeries({0, 1}), I, p2, grid).value;
  CHECK(std::abs(lin - (1 - 2 / kE) / kPi) <= 1e-8 * lin);
  CHECK(slice_norm_p(SliceSeries({0}), I, p2, grid) == 0.0);
  CHECK(slice_norm_p(SliceSeries({1}), I, p2, grid) == doctest::Approx(std::sqrt((1 - 1 / kE) / kPi)).epsilon(1e-9));
}

TEST_CASE("p = 2 norms match the moment oracle") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const SliceSeries f = oracle::random_series(rng, t % 13);
    FockParams params;
    params.alpha = 0.5 + (t % 4);
    params.radius = 0.5 + 0.25 * (t % 5);
    const ImaginaryUnit I = oracle::random_unit(rng);
    const double v = slice_norm_pow(f, I, params, QuadratureGrid(64, 128, params.radius)).value;
    const double w = norm2_oracle(f, params.alpha, params.radius);
    REQUIRE(std::abs(v - w) <= 1e-10 * w);
  }
}

TEST_CASE("other exponents") {
  // f = 1: ((alpha/pi) (1/pi) 2 pi int_0^R r e^{-p alpha r^2/2} dr)^{1/p}
  for (double p : {0.5, 1.0, 3.0, 4.5}) {
    FockParams params = with_p(p);
    params.alpha = 2.0;
    const double integral = (1 - std::exp(-p * params.alpha / 2)) / (p * params.alpha);
    const double want = std::pow(params.alpha / kPi * 2 * integral, 1 / p);
    CHECK(slice_norm_p(SliceSeries({Quaternion(0, 0, 1)}), ImaginaryUnit(1, 1, 1), params, QuadratureGrid()) ==
          doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("Fock norm over sampled units") {
  std::mt19937_64 rng(32);
  const auto sphere = default_sphere(16);
  const QuadratureGrid grid;
  SUBCASE("real coefficients give equal slices") {
    for (double p : {1.5, 2.0, 3.0}) {
      const auto rep = fock_norm_p(oracle::random_real_series(rng, 7), with_p(p), grid, sphere);
      REQUIRE(rep.per_slice.size() == sphere.size());
      for (const auto& [u, v] : rep.per_slice) REQUIRE(std::abs(v - rep.value) <= 1e-10 * rep.value);
    }
  }
  SUBCASE("constants") {
    const double one = slice_norm_p(SliceSeries({1}), ImaginaryUnit(), FockParams{}, grid);
    const auto r1 = fock_norm_p(SliceSeries({1}), FockParams{}, grid, sphere);
    const auto rj = fock_norm_p(SliceSeries({Quaternion::j()}), FockParams{}, grid, sphere);
    CHECK(r1.value == doctest::Approx(one).epsilon(1e-14));
    CHECK(rj.value == doctest::Approx(one).epsilon(1e-14));
    CHECK(r1.grid.kind == "quadrature");
    CHECK(r1.grid.sphere_count == sphere.size());
  }
  SUBCASE("value is the largest slice") {
    const auto rep = fock_norm_p(oracle::random_series(rng, 6), with_p(3.0), grid, sphere);
    double m = 0.0;
    for (const auto& [u, v] : rep.per_slice) m = std::max(m, v);
    CHECK(rep.value == m);
  }
  SUBCASE("right scalar multiplication scales by the modulus") {
    const SliceSeries f = oracle::random_series(rng, 8);
    const Quaternion c{0.3, -2, 0.5, 1};
    for (double p : {1.0, 2.0, 3.5}) {
      const auto a = fock_norm_p(f, with_p(p), grid, sphere).value;
      const auto b = fock_norm_p(f * c, with_p(p), grid, sphere).value;
      CHECK(std::abs(b - a * c.modulus()) <= 1e-12 * b);
    }
  }
  SUBCASE("nondecreasing in the radius") {
    const SliceSeries f = oracle::random_series(rng, 8);
    double last = 0.0;
    for (double R : {0.25, 0.5, 1.0, 1.5, 2.0}) {
      FockParams params;
      params.radius = R;
      const double v = fock_norm_p(f, params, QuadratureGrid(64, 128, R), sphere).value;
      CHECK(v >= last);
      last = v;
    }
  }
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { (void)fock_norm_p(SliceSeries({1}), FockParams{}, grid, {}); }));
}

TEST_CASE("refinement that never settles reports its trace") {
  // Angular aliasing: each doubling of the trapezoid count stops aliasing one
  // more of these powers, so successive grids keep disagreeing.
  std::vector<Quaternion> c(513);
  c[0] = c[128] = c[256] = c[512] = Quaternion(1);
  try {
    (void)slice_norm_pow(SliceSeries(c), ImaginaryUnit(), FockParams{}, QuadratureGrid());
    FAIL("expected GridTooCoarse");
  } catch (const GridTooCoarseError& e) {
    CHECK(e.kind() == ErrorKind::GridTooCoarse);
    CHECK(e.trace().size() == 3);
  }
}

TEST_CASE("sup norms") {
  const auto sphere = default_sphere(8);
  CHECK(sup_norm(SliceSeries({Quaternion(0.5, 1, -1, 2)}), kSup, sphere).value ==
        doctest::Approx(std::sqrt(6.25)).epsilon(1e-14));
  CHECK(std::abs(sup_norm(SliceSeries({0, 1}), kSup, sphere).value - std::exp(-0.5)) < 1e-9);
  FockParams a4 = kSup;
  a4.alpha = 4;
  CHECK(std::abs(sup_norm(SliceSeries({0, 1}), a4, sphere).value - 0.5 * std::exp(-0.5)) < 1e-9);
  CHECK(slice_sup_norm(SliceSeries({1}), ImaginaryUnit::k(), kSup) == 1.0);
  CHECK(sup_norm(SliceSeries({1}), kSup, sphere).grid.kind == "sup-search");

  std::mt19937_64 rng(33);
  SUBCASE("real coefficients") {
    const SliceSeries f = oracle::random_real_series(rng, 6);
    const double s = sup_norm(f, kSup, sphere).value;
    CHECK(std::abs(slice_sup_norm(f, ImaginaryUnit(1, -2, 0.5), kSup) - s) < 1e-10);
  }
  SUBCASE("agrees with a dense search") {
    for (int t = 0; t < 6; ++t) {
      const SliceSeries f = oracle::random_series(rng, 3 + 2 * t);
      const ImaginaryUnit I = oracle::random_unit(rng);
      const double lib = slice_sup_norm(f, I, kSup);
      const double brute = brute_slice_sup(f, I, 1.0, 1.0);
      CHECK(lib >= brute * (1 - 1e-9));
      CHECK(lib <= brute * (1 + 1e-9));
    }
  }
  SUBCASE("sandwich on random functions") {
    for (int t = 0; t < 10; ++t) {
      const auto rep = sup_equivalence_check(oracle::random_series(rng, 8), kSup, sphere);
      CHECK(rep.worst_ratio >= 1.0);
      CHECK(rep.worst_ratio <= 2.0 + 1e-9);
    }
  }
}

TEST_CASE("inner product") {
  const FockParams p2;
  const QuadratureGrid grid;
  const auto I = ImaginaryUnit::i();
  const Quaternion one = inner_product(SliceSeries({1}), SliceSeries({1}), I, p2, grid);
  CHECK(std::abs(one.w - (1 - 1 / kE) / kPi) < 1e-12);
  CHECK(one.imag().modulus() < 1e-15);
  for (int n = 0; n < 5; ++n) {
    for (int m = 0; m < 5; ++m) {
      if (n == m) continue;
      std::vector<Quaternion> a(n + 1), b(m + 1);
      a[n] = b[m] = Quaternion(1);
      REQUIRE(inner_product(SliceSeries(a), SliceSeries(b), I, p2, grid).modulus() < 1e-12);
    }
  }
  std::mt19937_64 rng(34);
  for (int t = 0; t < 10; ++t) {
    const SliceSeries f = oracle::random_series(rng, 9);
    const ImaginaryUnit U = oracle::random_unit(rng);
    const Quaternion ff = inner_product(f, f, U, p2, grid);
    const double n2 = slice_norm_pow(f, U, p2, grid).value;
    REQUIRE(std::abs(ff.w - n2) <= 1e-10 * n2);
    REQUIRE(ff.imag().modulus() <= 1e-10 * n2);
  }
}

TEST_CASE("norm equivalence") {
  const auto sphere = default_sphere(12);
  const QuadratureGrid grid;
  std::mt19937_64 rng(35);
  SUBCASE("real coefficients") {
    const auto rep = norm_equivalence_check(oracle::random_real_series(rng, 9), with_p(3.0), grid, sphere);
    CHECK(std::abs(rep.worst_sandwich_ratio - 1.0) < 1e-9);
    CHECK(std::abs(rep.worst_pair_ratio - 1.0) < 1e-9);
  }
  SUBCASE("random quaternion coefficients") {
    for (double p : {1.5, 2.0, 4.0}) {
      const auto rep = norm_equivalence_check(oracle::random_series(rng, 10), with_p(p), grid, sphere);
      CHECK(rep.worst_sandwich_ratio >= 1.0);
      CHECK(rep.worst_sandwich_ratio <= std::pow(2.0, p) + 1e-9);
      CHECK(rep.worst_pair_ratio <= std::pow(2.0, p) + 1e-9);
      CHECK(rep.sandwich_bound == std::pow(2.0, p));
    }
  }
  SUBCASE("zero function") {
    const auto rep = norm_equivalence_check(SliceSeries({0}), with_p(2.0), grid, sphere);
    CHECK(rep.fock_pow == 0.0);
  }
  SUBCASE("exponent must exceed one") {
    CHECK(throws_kind(ErrorKind::InvalidArgument,
                      [&] { (void)norm_equivalence_check(SliceSeries({1}), with_p(1.0), grid, sphere); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument,
                      [&] { (void)norm_equivalence_check(SliceSeries({1}), kSup, grid, sphere); }));
  }
}

TEST_CASE("monomial weight sup") {
  const std::vector<unsigned> m1 = {1};
  CHECK(monomial_weight_sup(m1, 1.0, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(monomial_weight_sup(m1, 4.0, 1.0) == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-14));
  const std::vector<unsigned> m0 = {0, 0};
  CHECK(monomial_weight_sup(m0, 1.0, 1.0) == 1.0);
  // Two variables: maximize over |z1|^2 + |z2|^2 <= R^2 by brute force.
  for (double alpha : {0.5, 3.0, 10.0}) {
    const std::vector<unsigned> m = {1, 2};
    const double got = monomial_weight_sup(m, alpha, 1.0);
    const double want = oracle::brute_max(
        [&](double t) {
          // |z1| = r cos t, |z2| = r sin t, best r found by a nested search.
          return oracle::brute_max(
              [&](double r) {
                const double a = r * std::cos(t);
                const double b = r * std::sin(t);
                return a * b * b * std::exp(-alpha * r * r / 2);
              },
              0.0, 1.0, 400);
        },
        0.0, kPi / 2, 400);
    CHECK(got == doctest::Approx(want).epsilon(1e-6));
    CHECK(got >= want * (1 - 1e-12));
  }
}

TEST_CASE("monomial bound") {
  FockParams params;
  SUBCASE("single monomial") {
    const auto rep = monomial_bound_check({{1}, Quaternion(1)}, SliceSeries({0, 1}), params, ImaginaryUnit());
    CHECK(rep.pass);
    CHECK(!rep.vacuous);
    CHECK(rep.rhs / rep.lhs == doctest::Approx(4.0 * std::sqrt(0.5)).epsilon(1e-8));
  }
  SUBCASE("zero index is vacuous") {
    const auto rep = monomial_bound_check({{0}, Quaternion(2)}, SliceSeries({2, 1}), params, ImaginaryUnit());
    CHECK(rep.vacuous);
  }
  SUBCASE("every term of a random quintic") {
    std::mt19937_64 rng(36);
    const SliceSeries f = oracle::random_series(rng, 5);
    for (unsigned k = 1; k <= 5; ++k) {
      const auto rep = monomial_bound_check({{k}, f.coeff(k)}, f, params, ImaginaryUnit(0, 1, 1));
      CHECK(rep.pass);
    }
  }
  SUBCASE("not a term") {
    CHECK(throws_kind(ErrorKind::InvalidArgument, [&] {
      (void)monomial_bound_check({{1}, Quaternion(3)}, SliceSeries({0, 1}), params, ImaginaryUnit());
    }));
  }
  SUBCASE("several variables") {
    FockParams p2;
    p2.n = 2;
    const MultiPolynomial P(2, {{{1, 1}, Quaternion(0, 1)}, {{2, 0}, Quaternion(0.5, 0, 0, 1)}});
    for (const auto& mono : P.monomials()) {
      const auto rep = monomial_bound_check(mono, P, p2, ImaginaryUnit::j());
      if (rep.vacuous) continue;
      CHECK(rep.pass);
    }
    const MultiMonomial first = P.monomials()[0];
    const auto rep = monomial_bound_check(first, P, p2, ImaginaryUnit::j());
    CHECK(!rep.vacuous);
    CHECK(rep.lhs == doctest::Approx(monomial_weight_sup(first.multi_index, 1.0, 1.0)).epsilon(1e-14));
  }
}

TEST_CASE("several-variable slice sup") {
  FockParams p;
  p.n = 2;
  p.p = std::numeric_limits<double>::infinity();
  const MultiPolynomial P(2, {{{1, 0}, Quaternion(1)}});
  CHECK(std::abs(multi_slice_sup(P, ImaginaryUnit(), p) - std::exp(-0.5)) < 1e-8);
  const MultiPolynomial Q(2, {{{1, 2}, Quaternion(0, 0, 2)}});
  const std::vector<unsigned> m = {1, 2};
  CHECK(std::abs(multi_slice_sup(Q, ImaginaryUnit::k(), p) - 2 * monomial_weight_sup(m, 1.0, 1.0)) < 1e-8);
}

TEST_CASE("dilation convergence") {
  const auto sphere = default_sphere(8);
  const std::vector<double> rs = {0.5, 0.9, 0.99};
  for (double v : dilation_convergence(SliceSeries({Quaternion(3, 1)}), kSup, rs, sphere)) CHECK(v == 0.0);
  const auto lin = dilation_convergence(SliceSeries({0, 1}), kSup, rs, sphere);
  for (std::size_t k = 0; k < rs.size(); ++k) {
    CHECK(std::abs(lin[k] - (1 - rs[k]) * std::exp(-0.5)) < 1e-9);
  }
  std::mt19937_64 rng(37);
  for (int t = 0; t < 10; ++t) {
    const auto v = dilation_convergence(oracle::random_series(rng, 6), kSup, rs, sphere);
    CHECK(v[0] > v[1]);
    CHECK(v[1] > v[2]);
  }
  CHECK(throws_kind(ErrorKind::InvalidArgument,
                    [&] { (void)dilation_convergence(SliceSeries({0, 1}), kSup, {0.9, 0.5}, sphere); }));
}

TEST_CASE("derivative criterion") {
  const auto sphere = default_sphere(8);
  std::mt19937_64 rng(38);
  SUBCASE("t = 0 is the sup norm") {
    const SliceSeries f = oracle::random_series(rng, 5);
    const auto rep = derivative_criterion(f, 0, kSup, sphere);
    CHECK(std::abs(rep.sup_ratio - sup_norm(f, kSup, sphere).value) < 1e-12);
  }
  SUBCASE("q squared, first derivative") {
    const auto rep = derivative_criterion(SliceSeries({0, 0, 1}), 1, kSup, sphere);
    const double want =
        oracle::brute_max([](double r) { return 2 * r / (1 + r) * std::exp(-r * r / 2); }, 0.0, 1.0, 1000000);
    CHECK(std::abs(rep.sup_ratio - want) < 1e-9);
    CHECK(rep.pass);
  }
  SUBCASE("split-sum inequality") {
    for (int t = 0; t < 10; ++t) {
      const SliceSeries f = oracle::random_series(rng, 8);
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto rep = derivative_criterion(f, d, kSup, sphere);
        CHECK(rep.pass);
        CHECK(rep.worst_margin <= 1e-9);
        for (const auto& s : rep.per_slice) CHECK(s.f_ratio <= s.f1_ratio + s.f2_ratio + 1e-9);
      }
    }
  }
}

TEST_CASE("little space profile") {
  SUBCASE("fast decay") {
    FockParams p;
    p.alpha = 20;
    p.radius = 3;
    const std::vector<double> rho = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    const auto prof = little_space_profile(SliceSeries({1}), p, rho, default_sphere(4));
    for (std::size_t k = 0; k < rho.size(); ++k) {
      CHECK(prof.values[k] == doctest::Approx(std::exp(-10 * rho[k] * rho[k])).epsilon(1e-12));
    }
    CHECK(prof.decreasing_tail);
    CHECK(prof.member);
  }
  SUBCASE("unit ball") {
    const std::vector<double> rho = {0.25, 0.5, 0.75, 1.0};
    const auto prof = little_space_profile(SliceSeries({1}), FockParams{}, rho, default_sphere(4));
    CHECK(prof.values.back() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
    CHECK(prof.decreasing_tail);
    CHECK(!prof.member);
  }
  SUBCASE("zero") {
    const auto prof = little_space_profile(SliceSeries({0}), FockParams{}, {0.5, 0.75, 1.0}, default_sphere(4));
    for (double v : prof.values) CHECK(v == 0.0);
    CHECK(prof.member);
  }
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] {
    (void)little_space_profile(SliceSeries({1}), FockParams{}, {0.5, 0.25}, default_sphere(4));
  }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] {
    (void)little_space_profile(SliceSeries({1}), FockParams{}, {0.5, 1.5}, default_sphere(4));
  }));
}

// |f(z0)| <= sqrt(K(z0, z0)) ||f||_2 on the slice of z0, with K the weighted
// Bergman kernel of the disk built from the same moments.
TEST_CASE("point evaluation stays bounded by the kernel") {
  const Quaternion z0{0.3, 0.2};
  const double alpha = 1.0;
  double kdiag = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double ck = 2.0 * alpha / kPi * oracle::radial_moment(k, alpha, 1.0);
    kdiag += std::pow(z0.norm_sq(), k) / ck;
  }
  const double bound = std::sqrt(kdiag);
  std::mt19937_64 rng(39);
  const auto sphere = default_sphere(8);
  double worst = 0.0;
  for (std::size_t deg = 0; deg <= 16; ++deg) {
    for (int t = 0; t < 4; ++t) {
      const SliceSeries f = oracle::random_series(rng, deg);
      const double ratio = eval(f, z0).modulus() / fock_norm_p(f, FockParams{}, QuadratureGrid(), sphere).value;
      worst = std::max(worst, ratio);
    }
  }
  CHECK(worst <= bound * (1 + 1e-9));
  CHECK(std::isfinite(worst));
}
