#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "slicefock/error.hpp"
#include "slicefock/quaternion.hpp"

using namespace slicefock;
using oracle::dist;
using oracle::throws_kind;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("basis multiplication table") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == Quaternion(-1));
  CHECK(i * j * k == Quaternion(-1));
  CHECK(quat_mul(i, j) == k);
}

TEST_CASE("product with identity and a worked expansion") {
  const Quaternion q{0.3, -1.2, 2.5, 0.7};
  CHECK(q * Quaternion::one() == q);
  CHECK(Quaternion::one() * q == q);
  CHECK(Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("conjugate, modulus, inverse") {
  const auto r = quat_conj_mod_inv({1, 1, 1, 1});
  CHECK(r.conjugate == Quaternion(1, -1, -1, -1));
  CHECK(r.modulus == 2.0);
  CHECK(dist(r.inverse, Quaternion(0.25, -0.25, -0.25, -0.25)) < 1e-16);

  const auto ri = quat_conj_mod_inv(Quaternion::i());
  CHECK(ri.conjugate == -Quaternion::i());
  CHECK(ri.modulus == 1.0);
  CHECK(ri.inverse == -Quaternion::i());

  CHECK(throws_kind(ErrorKind::ZeroDivisor, [] { (void)quat_conj_mod_inv(Quaternion{}); }));
  CHECK(throws_kind(ErrorKind::ZeroDivisor, [] { (void)inverse(Quaternion{1e-310}); }));
}

TEST_CASE("random algebra identities") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion a = oracle::random_q(rng, 2.0);
    const Quaternion b = oracle::random_q(rng, 2.0);
    const Quaternion c = oracle::random_q(rng, 2.0);
    const Quaternion l = (a * b) * c;
    const Quaternion r = a * (b * c);
    REQUIRE(dist(l, r) <= 1e-12 * std::max(1.0, l.modulus()));
    const double ab = (a * b).modulus();
    REQUIRE(std::abs(ab - a.modulus() * b.modulus()) <= 1e-12 * std::max(1.0, ab));
    REQUIRE(a.conj().conj() == a);
    REQUIRE(a.norm_sq() == a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z);
    if (a.modulus() > 1e-3) REQUIRE(dist(a * inverse(a), Quaternion::one()) < 8 * 2.3e-16);
  }
}

TEST_CASE("imaginary units") {
  const ImaginaryUnit u(3, 0, 4);
  CHECK(u.x() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(u.z() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(dist(u.as_quaternion() * u.as_quaternion(), Quaternion(-1)) < 1e-12);
  CHECK(u.embed(2, 5) == Quaternion(2, 5 * u.x(), 0, 5 * u.z()));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { ImaginaryUnit(0, 0, 0); }));
  CHECK(ImaginaryUnit().as_quaternion() == Quaternion::i());
}

TEST_CASE("decompose") {
  SUBCASE("3 + 4i") {
    const auto s = decompose({3, 4, 0, 0});
    CHECK(s.re == 3);
    CHECK(s.im == 4);
    CHECK(s.unit.as_quaternion() == Quaternion::i());
  }
  SUBCASE("real point gets the unit i") {
    const auto s = decompose(Quaternion(5));
    CHECK(s.re == 5);
    CHECK(s.im == 0);
    CHECK(s.unit.as_quaternion() == Quaternion::i());
  }
  SUBCASE("1 + i + j + k") {
    const auto s = decompose({1, 1, 1, 1});
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(s.re == 1);
    CHECK(s.im == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(dist(s.unit.as_quaternion(), Quaternion(0, r3, r3, r3)) < 1e-15);
  }
  SUBCASE("negative imaginary part flips the unit") {
    const auto s = decompose({0, -2, 0, 0});
    CHECK(s.im == 2);
    CHECK(s.unit.as_quaternion() == -Quaternion::i());
  }
  SUBCASE("round trip") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10000; ++t) {
      const Quaternion q = oracle::random_q(rng, 3.0);
      const auto s = decompose(q);
      REQUIRE(s.im >= 0.0);
      REQUIRE(dist(s.compose(), q) < 1e-12);
    }
  }
}

TEST_CASE("orthonormal partner") {
  CHECK(dist(orthonormal_partner(ImaginaryUnit::i()).as_quaternion(), Quaternion::j()) < 1e-15);
  CHECK(dist(orthonormal_partner(ImaginaryUnit::j()).as_quaternion(), Quaternion::i()) < 1e-15);
  CHECK(dist(orthonormal_partner(ImaginaryUnit(1, 1, 0)).as_quaternion(), Quaternion(0, kS, -kS, 0)) < 1e-15);

  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) {
    const ImaginaryUnit I = oracle::random_unit(rng);
    const ImaginaryUnit J = orthonormal_partner(I);
    // Re(I conj(J)) = <I, J>
    REQUIRE(std::abs((I.as_quaternion() * J.as_quaternion().conj()).w) < 1e-12);
    REQUIRE(dist(I.as_quaternion() * J.as_quaternion(), -(J.as_quaternion() * I.as_quaternion())) < 1e-12);
  }
}

TEST_CASE("sphere sampling") {
  const auto one = sphere_sample(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].as_quaternion() == Quaternion::i());

  for (const auto& u : sphere_sample(2)) {
    CHECK(std::abs(u.x() * u.x() + u.y() * u.y() + u.z() * u.z() - 1.0) < 1e-12);
  }

  const auto pts = sphere_sample(100);
  REQUIRE(pts.size() == 100);
  double min_angle = 10.0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    const Quaternion sq = pts[a].as_quaternion() * pts[a].as_quaternion();
    CHECK(dist(sq, Quaternion(-1)) < 1e-12);
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      min_angle = std::min(min_angle, std::acos(std::clamp(dot(pts[a], pts[b]), -1.0, 1.0)));
    }
  }
  CHECK(min_angle > 0.1);

  CHECK(sphere_sample(17).size() == 17);
  const auto again = sphere_sample(100);
  for (std::size_t a = 0; a < pts.size(); ++a) CHECK(again[a].as_quaternion() == pts[a].as_quaternion());

  const auto def = default_sphere(10);
  REQUIRE(def.size() == 13);
  CHECK(def[10].as_quaternion() == Quaternion::i());
  CHECK(def[11].as_quaternion() == Quaternion::j());
  CHECK(def[12].as_quaternion() == Quaternion::k());

  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { (void)sphere_sample(0); }));
}
