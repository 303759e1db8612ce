#pragma once

// Seeded verification suite: one result per proposition over a random
// polynomial corpus.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slicefock/fock.hpp"
#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock::cli {

struct VerifyOptions {
  std::uint64_t seed = 1;
  FockParams params;  // p must be finite and > 1 for the p-norm propositions
  std::size_t sphere_count = 64;
  std::size_t radial = QuadratureGrid::kDefaultRadial;
  std::size_t angular = QuadratureGrid::kDefaultAngular;
  std::size_t corpus_size = 200;
  std::size_t max_degree = 12;
  std::vector<std::string> props;  // empty selects all
};

struct PropositionResult {
  std::string name;
  std::size_t instances = 0;
  double worst = 0.0;   // worst ratio or residual observed
  double bound = 0.0;   // the value `worst` must not exceed
  bool pass = true;
  std::string detail;   // first violation, if any
};

/// Canonical proposition names in report order.
const std::vector<std::string>& proposition_names();

/// Resolves full names and short aliases ("star", "split", ...). Throws
/// InvalidArgument for unknown names.
std::vector<std::string> resolve_props(const std::vector<std::string>& requested);

/// Degrees uniform in [0, max_degree], coefficients uniform in [-1, 1]^4.
std::vector<SliceSeries> make_corpus(std::uint64_t seed, std::size_t size, std::size_t max_degree);

Quaternion random_quaternion(std::mt19937_64& rng);
/// Uniform in the open ball of the given radius (rejection sampling).
Quaternion random_in_ball(std::mt19937_64& rng, double radius = 1.0);
ImaginaryUnit random_unit(std::mt19937_64& rng);
/// A random unit orthogonal to I.
ImaginaryUnit random_orthogonal_unit(std::mt19937_64& rng, const ImaginaryUnit& I);

std::vector<PropositionResult> run_verify(const VerifyOptions& options);

}  // namespace slicefock::cli
