#include "slicefock/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "slicefock/error.hpp"

namespace slicefock {

unsigned MultiMonomial::total_degree() const {
  return std::accumulate(multi_index.begin(), multi_index.end(), 0u);
}

Quaternion MultiMonomial::eval_on_slice(std::span<const std::complex<double>> z,
                                        const ImaginaryUnit& I) const {
  if (z.size() != multi_index.size()) {
    throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(z.size()) +
                                                " coordinates, monomial expects " +
                                                std::to_string(multi_index.size()));
  }
  std::complex<double> prod{1.0, 0.0};
  for (std::size_t k = 0; k < z.size(); ++k) {
    for (unsigned e = 0; e < multi_index[k]; ++e) prod *= z[k];
  }
  return I.embed(prod) * coeff;
}

MultiPolynomial::MultiPolynomial(std::size_t n, std::vector<MultiMonomial> monomials)
    : n_(n), monomials_(std::move(monomials)) {
  if (n_ == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  for (const auto& m : monomials_) {
    if (m.dimension() != n_) {
      throw Error(ErrorKind::InvalidArgument, "monomial dimension differs from polynomial dimension");
    }
  }
}

Quaternion MultiPolynomial::eval_on_slice(std::span<const std::complex<double>> z,
                                          const ImaginaryUnit& I) const {
  Quaternion acc{};
  for (const auto& m : monomials_) acc += m.eval_on_slice(z, I);
  return acc;
}

SliceSeries MultiPolynomial::to_series(double nominal_radius) const {
  if (n_ != 1) throw Error(ErrorKind::InvalidArgument, "only one-variable polynomials convert to a series");
  unsigned deg = 0;
  for (const auto& m : monomials_) deg = std::max(deg, m.multi_index[0]);
  std::vector<Quaternion> c(deg + 1);
  for (const auto& m : monomials_) c[m.multi_index[0]] += m.coeff;
  return SliceSeries(std::move(c), nominal_radius);
}

MultiPolynomial MultiPolynomial::from_series(const SliceSeries& f) {
  std::vector<MultiMonomial> mons;
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    mons.push_back({{static_cast<unsigned>(k)}, f.coeff(k)});
  }
  return MultiPolynomial(1, std::move(mons));
}

}  // namespace slicefock
