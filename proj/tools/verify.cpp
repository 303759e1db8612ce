#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "slicefock/error.hpp"
#include "slicefock/parallel.hpp"

namespace slicefock::cli {

namespace {

constexpr double kStarTol = 1e-10;
constexpr double kSplitTol = 1e-14;
constexpr double kRepTol = 1e-11;
constexpr double kSlack = 1e-9;

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table = {
      {"derivative", "derivative_criterion"},
      {"dilation", "dilation_limit"},
      {"a_iff_b", "fock_a_iff_b"},
      {"sandwich_inf", "fock_sandwich_inf"},
      {"sandwich_p", "fock_sandwich_p"},
      {"sandwich", "fock_sandwich_p"},
      {"monomial", "monomial_bound"},
      {"repr", "representation_formula"},
      {"rep", "representation_formula"},
      {"split", "splitting_roundtrip"},
      {"star", "star_product"},
  };
  return table;
}

// Stable across standard libraries, unlike std::hash.
std::uint32_t name_tag(const std::string& name) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : name) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::mt19937_64 rng_for(std::uint64_t seed, const std::string& name) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    name_tag(name)};
  return std::mt19937_64(seq);
}

std::string describe(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Per-instance outcome; reduced in index order.
struct Outcome {
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t count = 0;
  std::string violation;
};

PropositionResult reduce(const std::string& name, double bound, const std::vector<Outcome>& parts) {
  PropositionResult r;
  r.name = name;
  r.bound = bound;
  r.worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    r.instances += parts[i].count;
    if (parts[i].count > 0) r.worst = std::max(r.worst, parts[i].worst);
    if (!parts[i].violation.empty() && r.detail.empty()) {
      r.detail = "instance " + std::to_string(i) + ": " + parts[i].violation;
    }
  }
  if (r.instances == 0) r.worst = 0.0;
  r.pass = r.detail.empty() && r.worst <= bound;
  if (!r.pass && r.detail.empty()) r.detail = "worst " + describe(r.worst) + " exceeds " + describe(bound);
  return r;
}

double relative(double residual, double scale) { return residual / std::max(1.0, scale); }

PropositionResult check_star(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  const std::string name = "star_product";
  auto rng = rng_for(o.seed, name);
  const std::size_t n = corpus.size();
  // Pre-draw points so the parallel section is RNG free.
  std::vector<std::vector<Quaternion>> points(n);
  for (auto& pts : points) {
    for (int s = 0; s < 5; ++s) pts.push_back(random_in_ball(rng));
  }
  std::vector<Outcome> parts(n);
  parallel_for(n, [&](std::size_t i) {
    const SliceSeries f = truncate(corpus[i], 8);
    const SliceSeries g = truncate(corpus[(i + 1) % n], 8);
    const SliceSeries fg = star_mul(f, g);
    Outcome& out = parts[i];
    for (const auto& q : points[i]) {
      const Quaternion fq = eval(f, q);
      if (fq.modulus() <= 1e-6) continue;
      const Quaternion lhs = eval(fg, q);
      const Quaternion rhs = fq * eval(g, transform_point(f, q));
      out.worst = std::max(out.worst, relative(distance(lhs, rhs), lhs.modulus()));
      ++out.count;
      // Zero rule on (q - q0) * g, which vanishes at q0 = q.
      const SliceSeries h({-q, Quaternion::one()});
      const Quaternion zero = eval(star_mul(h, g), q);
      out.worst = std::max(out.worst, zero.modulus());
      ++out.count;
    }
  });
  return reduce(name, kStarTol, parts);
}

PropositionResult check_split(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  const std::string name = "splitting_roundtrip";
  auto rng = rng_for(o.seed, name);
  std::vector<std::pair<ImaginaryUnit, ImaginaryUnit>> pairs;
  for (int s = 0; s < 20; ++s) {
    const ImaginaryUnit I = random_unit(rng);
    pairs.emplace_back(I, random_orthogonal_unit(rng, I));
  }
  std::vector<Outcome> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    Outcome& out = parts[i];
    for (const auto& [I, J] : pairs) {
      const auto [f1, f2] = split(corpus[i], I, J);
      const SliceSeries back = extend(f1, f2, J);
      double worst = 0.0;
      for (std::size_t k = 0; k <= corpus[i].degree(); ++k) {
        worst = std::max(worst, distance(back.coeff_or_zero(k), corpus[i].coeff(k)));
      }
      out.worst = std::max(out.worst, worst);
      ++out.count;
    }
  });
  return reduce(name, kSplitTol, parts);
}

PropositionResult check_rep(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  const std::string name = "representation_formula";
  auto rng = rng_for(o.seed, name);
  std::vector<std::vector<std::pair<ImaginaryUnit, Quaternion>>> draws(corpus.size());
  for (auto& d : draws) {
    for (int s = 0; s < 5; ++s) {
      const ImaginaryUnit I = random_unit(rng);
      d.emplace_back(I, random_in_ball(rng));
    }
  }
  std::vector<Outcome> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    Outcome& out = parts[i];
    for (const auto& [I, q] : draws[i]) {
      const Quaternion direct = eval(corpus[i], q);
      out.worst = std::max(out.worst, relative(distance(rep_eval(corpus[i], I, q), direct), direct.modulus()));
      ++out.count;
    }
  });
  return reduce(name, kRepTol, parts);
}

struct PNormResults {
  PropositionResult sandwich;
  PropositionResult a_iff_b;
};

PNormResults check_pnorm(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  const FockParams& params = o.params;
  const bool usable = params.p > 1.0 && !params.is_sup();
  const double p = usable ? params.p : 2.0;
  FockParams pp = params;
  pp.p = p;
  const auto sphere = default_sphere(o.sphere_count);
  const QuadratureGrid grid(o.radial, o.angular, params.radius);
  std::vector<Outcome> sandwich(corpus.size());
  std::vector<Outcome> pairs(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    try {
      const EquivalenceReport rep = norm_equivalence_check(corpus[i], pp, grid, sphere);
      sandwich[i] = {rep.worst_sandwich_ratio, 1, {}};
      pairs[i] = {rep.worst_pair_ratio, 1, {}};
    } catch (const Error& e) {
      sandwich[i] = {std::numeric_limits<double>::infinity(), 1, e.what()};
      pairs[i] = sandwich[i];
    }
  });
  PNormResults r{reduce("fock_sandwich_p", std::pow(2.0, p) + kSlack, sandwich),
                 reduce("fock_a_iff_b", std::pow(2.0, std::max(p, 1.0)) + kSlack, pairs)};
  if (!usable) {
    const std::string note = "requested p = " + describe(params.p) + " is outside (1, inf); ran p = 2";
    r.sandwich.detail = r.sandwich.detail.empty() ? note : r.sandwich.detail;
    r.a_iff_b.detail = r.a_iff_b.detail.empty() ? note : r.a_iff_b.detail;
  }
  return r;
}

FockParams sup_params(const VerifyOptions& o) {
  FockParams p = o.params;
  p.n = 1;
  return p;
}

SupSearch search_of(const VerifyOptions& o) { return {o.radial, o.angular}; }

PropositionResult check_sup(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  const auto sphere = default_sphere(o.sphere_count);
  std::vector<Outcome> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    try {
      const auto rep = sup_equivalence_check(corpus[i], sup_params(o), sphere, search_of(o));
      parts[i] = {rep.worst_ratio, 1, {}};
    } catch (const Error& e) {
      parts[i] = {std::numeric_limits<double>::infinity(), 1, e.what()};
    }
  });
  return reduce("fock_sandwich_inf", 2.0 + kSlack, parts);
}

PropositionResult check_monomial(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  FockParams params = sup_params(o);
  if (!(params.p > 1.0) || params.is_sup()) params.p = 2.0;
  std::vector<Outcome> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    Outcome& out = parts[i];
    const SliceSeries& f = corpus[i];
    for (std::size_t k = 1; k <= f.degree(); ++k) {
      const auto rep = monomial_bound_check({{static_cast<unsigned>(k)}, f.coeff(k)}, f, params,
                                            ImaginaryUnit::i(), search_of(o));
      // worst = lhs / rhs, must stay <= 1
      out.worst = std::max(out.worst, rep.rhs > 0.0 ? rep.lhs / rep.rhs : (rep.lhs > 0.0 ? 1e300 : 0.0));
      ++out.count;
      if (!rep.pass && out.violation.empty()) {
        out.violation = "term " + std::to_string(k) + ": lhs " + describe(rep.lhs) + " > rhs " + describe(rep.rhs);
      }
    }
  });
  return reduce("monomial_bound", 1.0 + kSlack, parts);
}

PropositionResult check_dilation(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  const std::vector<double> r_list = {0.5, 0.9, 0.99};
  const auto sphere = default_sphere(o.sphere_count);
  std::vector<Outcome> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const SliceSeries f = truncate(corpus[i], 6);
    if (f.degree() == 0) return;  // constants are fixed by dilation
    const auto v = dilation_convergence(f, sup_params(o), r_list, sphere, search_of(o));
    Outcome& out = parts[i];
    // worst = largest successive ratio; strictly decreasing means < 1
    for (std::size_t k = 1; k < v.size(); ++k) out.worst = std::max(out.worst, v[k] / v[k - 1]);
    ++out.count;
  });
  PropositionResult r = reduce("dilation_limit", 1.0, parts);
  r.pass = r.detail.empty() && r.worst < 1.0;
  return r;
}

PropositionResult check_derivative(const VerifyOptions& o, const std::vector<SliceSeries>& corpus) {
  const std::size_t count = std::min<std::size_t>(50, corpus.size());
  const auto sphere = default_sphere(std::min<std::size_t>(o.sphere_count, 16));
  std::vector<Outcome> parts(count * 3);
  parallel_for(parts.size(), [&](std::size_t idx) {
    const std::size_t i = idx / 3;
    const std::size_t t = idx % 3 + 1;
    const auto rep = derivative_criterion(corpus[i], t, sup_params(o), sphere, search_of(o));
    parts[idx] = {rep.worst_margin, 1, {}};
  });
  return reduce("derivative_criterion", kSlack, parts);
}

}  // namespace

const std::vector<std::string>& proposition_names() {
  static const std::vector<std::string> names = {
      "derivative_criterion", "dilation_limit",  "fock_a_iff_b",
      "fock_sandwich_inf",    "fock_sandwich_p", "monomial_bound",
      "representation_formula", "splitting_roundtrip", "star_product"};
  return names;
}

std::vector<std::string> resolve_props(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const auto& r : requested) {
    if (r.empty()) continue;
    std::string full = r;
    if (auto it = aliases().find(r); it != aliases().end()) full = it->second;
    if (std::find(proposition_names().begin(), proposition_names().end(), full) ==
        proposition_names().end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown proposition \"" + r + "\"");
    }
    if (std::find(out.begin(), out.end(), full) == out.end()) out.push_back(full);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double w = u(rng);
  const double x = u(rng);
  const double y = u(rng);
  const double z = u(rng);
  return {w, x, y, z};
}

Quaternion random_in_ball(std::mt19937_64& rng, double radius) {
  for (;;) {
    const Quaternion q = random_quaternion(rng);
    if (q.norm_sq() < 1.0) return q * radius;
  }
}

ImaginaryUnit random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double x = u(rng);
    const double y = u(rng);
    const double z = u(rng);
    const double n2 = x * x + y * y + z * z;
    if (n2 > 1e-4 && n2 <= 1.0) return {x, y, z};
  }
}

ImaginaryUnit random_orthogonal_unit(std::mt19937_64& rng, const ImaginaryUnit& I) {
  for (;;) {
    const ImaginaryUnit v = random_unit(rng);
    const double c = dot(v, I);
    const double x = v.x() - c * I.x();
    const double y = v.y() - c * I.y();
    const double z = v.z() - c * I.z();
    if (x * x + y * y + z * z < 1e-2) continue;
    ImaginaryUnit J(x, y, z);
    const double c2 = dot(J, I);
    return {J.x() - c2 * I.x(), J.y() - c2 * I.y(), J.z() - c2 * I.z()};
  }
}

std::vector<SliceSeries> make_corpus(std::uint64_t seed, std::size_t size, std::size_t max_degree) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<SliceSeries> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<Quaternion> c(deg(rng) + 1);
    for (auto& a : c) a = random_quaternion(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<PropositionResult> run_verify(const VerifyOptions& options) {
  options.params.validate();
  const auto selected = options.props.empty() ? proposition_names() : resolve_props(options.props);
  auto wanted = [&](const std::string& n) {
    return std::find(selected.begin(), selected.end(), n) != selected.end();
  };
  const auto corpus = make_corpus(options.seed, options.corpus_size, options.max_degree);

  std::vector<PropositionResult> results;
  if (wanted("derivative_criterion")) results.push_back(check_derivative(options, corpus));
  if (wanted("dilation_limit")) results.push_back(check_dilation(options, corpus));
  if (wanted("fock_a_iff_b") || wanted("fock_sandwich_p")) {
    auto r = check_pnorm(options, corpus);
    if (wanted("fock_a_iff_b")) results.push_back(std::move(r.a_iff_b));
    if (wanted("fock_sandwich_p")) results.push_back(std::move(r.sandwich));
  }
  if (wanted("fock_sandwich_inf")) results.push_back(check_sup(options, corpus));
  if (wanted("monomial_bound")) results.push_back(check_monomial(options, corpus));
  if (wanted("representation_formula")) results.push_back(check_rep(options, corpus));
  if (wanted("splitting_roundtrip")) results.push_back(check_split(options, corpus));
  if (wanted("star_product")) results.push_back(check_star(options, corpus));
  std::sort(results.begin(), results.end(),
            [](const PropositionResult& a, const PropositionResult& b) { return a.name < b.name; });
  return results;
}

}  // namespace slicefock::cli
