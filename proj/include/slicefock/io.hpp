#pragma once

// JSON encodings:
//   Quaternion      [w, x, y, z]
//   ImaginaryUnit   [x, y, z]
//   SliceSeries     { "n": 1, "radius": R, "coeffs": [[w,x,y,z], ...] }
//                   (optional "tail_bound")
//   MultiPolynomial { "n": k, "monomials": [{ "m": [m1..mk], "a": [w,x,y,z] }] }
//   AtomicData      { "alpha": .., "N": .., "slice": [x,y,z],
//                     "points": [[w,x,y,z], ..], "coeffs": [[w,x,y,z], ..] }
// Malformed input raises Error(InvalidArgument).

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "slicefock/fock.hpp"
#include "slicefock/kernels.hpp"
#include "slicefock/multi_poly.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock::io {

using nlohmann::json;

json to_json(const Quaternion& q);
json to_json(const ImaginaryUnit& u);
json to_json(const SliceSeries& f);
json to_json(const MultiPolynomial& f);
json to_json(const NormReport& r);

Quaternion quaternion_from_json(const json& j);
ImaginaryUnit unit_from_json(const json& j);

/// A parsed function file: `series` is set whenever n = 1.
struct FunctionFile {
  std::size_t n = 1;
  std::optional<SliceSeries> series;
  std::optional<MultiPolynomial> poly;
};

FunctionFile function_from_json(const json& j);

struct AtomicFile {
  AtomicData data;
  ImaginaryUnit slice;
};

AtomicFile atomic_from_json(const json& j);
json to_json(const AtomicData& data, const ImaginaryUnit& slice);

/// Reads and parses a JSON file; a missing file raises InvalidArgument naming
/// the path.
json read_json_file(const std::filesystem::path& path);

/// function-id,p,alpha,R,value
std::string csv_header();
std::string csv_row(const std::string& function_id, const FockParams& params, double value);

}  // namespace slicefock::io
