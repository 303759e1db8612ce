#include "slicefock/quaternion.hpp"

#include <numbers>
#include <string>

#include "slicefock/error.hpp"

namespace slicefock {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::ZeroValue: return "ZeroValue";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::UnitMismatch: return "UnitMismatch";
    case ErrorKind::BadRadius: return "BadRadius";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::ViolationDetected: return "ViolationDetected";
    case ErrorKind::PointOffSlice: return "PointOffSlice";
  }
  return "Unknown";
}

double distance(const Quaternion& a, const Quaternion& b) { return (a - b).modulus(); }

Quaternion inverse(const Quaternion& q) {
  if (q.modulus() < 1e-300) {
    throw Error(ErrorKind::ZeroDivisor, "inverse of a zero quaternion");
  }
  return q.conj() / q.norm_sq();
}

ConjModInv quat_conj_mod_inv(const Quaternion& q) {
  return {q.conj(), q.modulus(), inverse(q)};
}

ImaginaryUnit::ImaginaryUnit(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::InvalidArgument, "imaginary unit needs a nonzero finite direction");
  }
  if (n == 1.0) {
    x_ = x;
    y_ = y;
    z_ = z;
  } else {
    x_ = x / n;
    y_ = y / n;
    z_ = z / n;
  }
}

double dot(const ImaginaryUnit& a, const ImaginaryUnit& b) {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

SliceCoords decompose(const Quaternion& q) {
  const double im = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (im == 0.0) {
    return {q.w, 0.0, ImaginaryUnit::i()};
  }
  return {q.w, im, ImaginaryUnit(q.x / im, q.y / im, q.z / im)};
}

ImaginaryUnit orthonormal_partner(const ImaginaryUnit& I) {
  const double basis[3][3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  const double u[3] = {I.x(), I.y(), I.z()};
  // Every unit vector has some component <= 1/sqrt(3), so one candidate
  // always leaves a residual of length >= sqrt(2/3).
  for (const auto& e : basis) {
    const double c = e[0] * u[0] + e[1] * u[1] + e[2] * u[2];
    double r[3] = {e[0] - c * u[0], e[1] - c * u[1], e[2] - c * u[2]};
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (len >= 0.5) {
      // One more projection pass keeps <I, J> at rounding level.
      ImaginaryUnit J(r[0], r[1], r[2]);
      const double c2 = dot(J, I);
      return ImaginaryUnit(J.x() - c2 * u[0], J.y() - c2 * u[1], J.z() - c2 * u[2]);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "orthonormal_partner: degenerate unit");
}

std::vector<ImaginaryUnit> sphere_sample(std::size_t count) {
  if (count == 0) {
    throw Error(ErrorKind::InvalidArgument, "sphere_sample needs count >= 1");
  }
  if (count == 1) {
    return {ImaginaryUnit::i()};
  }
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double n = static_cast<double>(count);
  std::vector<ImaginaryUnit> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double h = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - h * h));
    const double phi = golden_angle * static_cast<double>(k);
    out.emplace_back(h, rho * std::cos(phi), rho * std::sin(phi));
  }
  return out;
}

std::vector<ImaginaryUnit> default_sphere(std::size_t count) {
  auto out = sphere_sample(count);
  out.push_back(ImaginaryUnit::i());
  out.push_back(ImaginaryUnit::j());
  out.push_back(ImaginaryUnit::k());
  return out;
}

}  // namespace slicefock
