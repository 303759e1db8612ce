#include "slicefock/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "slicefock/error.hpp"

namespace slicefock::io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "malformed input: " + what);
}

double number_at(const json& j, std::size_t i, const char* what) {
  if (!j.at(i).is_number()) malformed(std::string(what) + " entries must be numbers");
  return j.at(i).get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json to_json(const ImaginaryUnit& u) { return json::array({u.x(), u.y(), u.z()}); }

json to_json(const SliceSeries& f) {
  json coeffs = json::array();
  for (const auto& a : f.coeffs()) coeffs.push_back(to_json(a));
  json j = {{"n", 1}, {"radius", f.nominal_radius()}, {"coeffs", std::move(coeffs)}};
  if (f.tail_bound() > 0.0) j["tail_bound"] = f.tail_bound();
  return j;
}

json to_json(const MultiPolynomial& f) {
  json mons = json::array();
  for (const auto& m : f.monomials()) mons.push_back({{"m", m.multi_index}, {"a", to_json(m.coeff)}});
  return {{"n", f.dimension()}, {"monomials", std::move(mons)}};
}

json to_json(const NormReport& r) {
  json per = json::array();
  for (const auto& [unit, value] : r.per_slice) per.push_back({{"unit", to_json(unit)}, {"value", value}});
  return {{"value", r.value},
          {"per_slice", std::move(per)},
          {"grid",
           {{"kind", r.grid.kind},
            {"radial", r.grid.radial},
            {"angular", r.grid.angular},
            {"radius", r.grid.radius},
            {"sphere", r.grid.sphere_count},
            {"refinements", r.grid.refinements}}},
          {"tail_bound", r.tail_bound}};
}

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) malformed("a quaternion is an array of four numbers");
  return {number_at(j, 0, "quaternion"), number_at(j, 1, "quaternion"),
          number_at(j, 2, "quaternion"), number_at(j, 3, "quaternion")};
}

ImaginaryUnit unit_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) malformed("an imaginary unit is an array of three numbers");
  return {number_at(j, 0, "unit"), number_at(j, 1, "unit"), number_at(j, 2, "unit")};
}

namespace {

// json type errors (a string where a number belongs, ...) become InvalidArgument.
template <class F>
auto guarded(F&& parse) {
  try {
    return parse();
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

FunctionFile parse_function(const json& j) {
  const json& n_field = field(j, "n");
  if (!n_field.is_number_integer() || n_field.get<long>() < 1) malformed("\"n\" must be a positive integer");
  FunctionFile out;
  out.n = n_field.get<std::size_t>();
  if (j.contains("coeffs")) {
    if (out.n != 1) malformed("\"coeffs\" describes a one-variable series; n must be 1");
    const json& cs = j.at("coeffs");
    if (!cs.is_array() || cs.empty()) malformed("\"coeffs\" must be a nonempty array");
    std::vector<Quaternion> coeffs;
    for (const auto& c : cs) coeffs.push_back(quaternion_from_json(c));
    const double radius = j.contains("radius") ? j.at("radius").get<double>() : 1.0;
    const double tail = j.contains("tail_bound") ? j.at("tail_bound").get<double>() : 0.0;
    if (!(radius > 0.0)) malformed("\"radius\" must be positive");
    out.series = SliceSeries(std::move(coeffs), radius, tail);
    out.poly = MultiPolynomial::from_series(*out.series);
    return out;
  }
  const json& mons = field(j, "monomials");
  if (!mons.is_array()) malformed("\"monomials\" must be an array");
  std::vector<MultiMonomial> terms;
  for (const auto& m : mons) {
    const json& idx = field(m, "m");
    if (!idx.is_array() || idx.size() != out.n) malformed("each \"m\" must have n entries");
    MultiMonomial term;
    for (const auto& e : idx) {
      if (!e.is_number_integer() || e.get<long>() < 0) malformed("multi-index entries must be nonnegative integers");
      term.multi_index.push_back(e.get<unsigned>());
    }
    term.coeff = quaternion_from_json(field(m, "a"));
    terms.push_back(std::move(term));
  }
  out.poly = MultiPolynomial(out.n, std::move(terms));
  if (out.n == 1) {
    if (out.poly->monomials().empty()) {
      out.series = SliceSeries();
    } else {
      out.series = out.poly->to_series(j.contains("radius") ? j.at("radius").get<double>() : 1.0);
    }
  }
  return out;
}

AtomicFile parse_atomic(const json& j) {
  AtomicFile out;
  out.data.alpha = field(j, "alpha").get<double>();
  const json& N = field(j, "N");
  if (!N.is_number_integer() || N.get<long>() < 0) malformed("\"N\" must be a nonnegative integer");
  out.data.trunc_degree = N.get<std::size_t>();
  out.slice = unit_from_json(field(j, "slice"));
  for (const auto& p : field(j, "points")) out.data.points.push_back(quaternion_from_json(p));
  for (const auto& c : field(j, "coeffs")) out.data.coeffs.push_back(quaternion_from_json(c));
  if (out.data.points.size() != out.data.coeffs.size()) malformed("points and coeffs differ in length");
  return out;
}

}  // namespace

FunctionFile function_from_json(const json& j) {
  return guarded([&] { return parse_function(j); });
}

AtomicFile atomic_from_json(const json& j) {
  return guarded([&] { return parse_atomic(j); });
}

json to_json(const AtomicData& data, const ImaginaryUnit& slice) {
  json pts = json::array();
  json cs = json::array();
  for (const auto& p : data.points) pts.push_back(to_json(p));
  for (const auto& c : data.coeffs) cs.push_back(to_json(c));
  return {{"alpha", data.alpha}, {"N", data.trunc_degree}, {"slice", to_json(slice)},
          {"points", std::move(pts)}, {"coeffs", std::move(cs)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open input file " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse " + path.string() + ": " + e.what());
  }
}

std::string csv_header() { return "function-id,p,alpha,R,value"; }

std::string csv_row(const std::string& function_id, const FockParams& params, double value) {
  return function_id + "," + format_double(params.p) + "," + format_double(params.alpha) + "," +
         format_double(params.radius) + "," + format_double(value);
}

}  // namespace slicefock::io
