#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "slicefock/error.hpp"
#include "slicefock/fock.hpp"
#include "slicefock/io.hpp"
#include "slicefock/kernels.hpp"
#include "verify.hpp"

namespace slicefock::cli {

namespace {

using io::json;

struct Config {
  std::string input;
  std::string p_text = "2";
  FockParams params;
  std::size_t sphere = 64;
  std::size_t radial = QuadratureGrid::kDefaultRadial;
  std::size_t angular = QuadratureGrid::kDefaultAngular;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::vector<std::string> props;
  std::vector<std::string> points;
  std::string slice;
  std::string q = "0";
  std::string w = "0";
  std::size_t trunc = 32;
  std::vector<double> rho;
  std::string output;
  bool normalized = false;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fmt(const Quaternion& q) {
  return "[" + fmt(q.w) + ", " + fmt(q.x) + ", " + fmt(q.y) + ", " + fmt(q.z) + "]";
}

double parse_p(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw Error(ErrorKind::InvalidArgument, "cannot read p from \"" + text + "\"");
  return v;
}

// "w,x,y,z", "[w, x, y, z]" or whitespace separated; missing trailing parts are 0.
std::vector<double> parse_numbers(const std::string& text) {
  std::string t = text;
  for (char& c : t) {
    if (c == ',' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream is(t);
  std::vector<double> v;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(ErrorKind::InvalidArgument, "cannot read a number from \"" + tok + "\"");
    v.push_back(d);
  }
  return v;
}

Quaternion parse_quaternion(const std::string& text) {
  const auto v = parse_numbers(text);
  if (v.empty() || v.size() > 4) {
    throw Error(ErrorKind::InvalidArgument, "a quaternion needs 1 to 4 components, got \"" + text + "\"");
  }
  return {v[0], v.size() > 1 ? v[1] : 0.0, v.size() > 2 ? v[2] : 0.0, v.size() > 3 ? v[3] : 0.0};
}

ImaginaryUnit parse_unit(const std::string& text) {
  const auto v = parse_numbers(text);
  if (v.size() != 3) throw Error(ErrorKind::InvalidArgument, "an imaginary unit needs 3 components");
  return {v[0], v[1], v[2]};
}

FockParams resolved_params(Config& c) {
  c.params.p = parse_p(c.p_text);
  c.params.validate();
  return c.params;
}

std::vector<ImaginaryUnit> sphere_of(const Config& c) {
  if (!c.slice.empty()) return {parse_unit(c.slice)};
  return default_sphere(c.sphere);
}

io::FunctionFile load_function(const Config& c) {
  return io::function_from_json(io::read_json_file(c.input));
}

void emit(const Config& c, std::ostream& out, const std::string& body) {
  if (c.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + c.output);
  file << body;
}

std::string function_id(const Config& c) { return std::filesystem::path(c.input).stem().string(); }

const SliceSeries& require_series(const io::FunctionFile& file, const char* what) {
  if (!file.series) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + " needs a one-variable function; several-variable functions support only the sup norm on a slice");
  }
  return *file.series;
}

int cmd_eval(Config& c, std::istream& in, std::ostream& out) {
  const auto file = load_function(c);
  const SliceSeries& f = require_series(file, "eval");
  const ImaginaryUnit I = c.slice.empty() ? ImaginaryUnit::i() : parse_unit(c.slice);
  std::vector<Quaternion> points;
  for (const auto& p : c.points) points.push_back(parse_quaternion(p));
  if (c.points.empty()) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      points.push_back(parse_quaternion(line));
    }
  }
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "no evaluation points given");

  json rows = json::array();
  std::ostringstream os;
  if (c.format == "csv") os << "w,x,y,z,fw,fx,fy,fz,rep_delta,tail_bound\n";
  for (const auto& q : points) {
    const Quaternion v = eval(f, q);
    const double delta = distance(rep_eval(f, I, q), v);
    // Tail bound of the stored truncation, rescaled to |q| when inside the nominal disk.
    const double ratio = q.modulus() / f.nominal_radius();
    const double tail = ratio <= 1.0 ? f.tail_bound() : std::numeric_limits<double>::infinity();
    if (c.format == "json") {
      rows.push_back({{"point", io::to_json(q)}, {"value", io::to_json(v)}, {"rep_delta", delta},
                      {"tail_bound", std::isinf(tail) ? json(nullptr) : json(tail)}});
    } else if (c.format == "csv") {
      os << fmt(q.w) << ',' << fmt(q.x) << ',' << fmt(q.y) << ',' << fmt(q.z) << ',' << fmt(v.w) << ','
         << fmt(v.x) << ',' << fmt(v.y) << ',' << fmt(v.z) << ',' << fmt(delta) << ',' << fmt(tail) << '\n';
    } else {
      os << "f(" << fmt(q) << ") = " << fmt(v) << "  rep_delta " << fmt(delta) << "  tail_bound " << fmt(tail)
         << '\n';
    }
  }
  if (c.format == "json") os << rows.dump(2) << '\n';
  emit(c, out, os.str());
  return kOk;
}

std::string report_text(const NormReport& r) {
  std::ostringstream os;
  os << "value " << fmt(r.value) << '\n';
  os << "grid " << r.grid.kind << " radial " << r.grid.radial << " angular " << r.grid.angular << " radius "
     << fmt(r.grid.radius) << " sphere " << r.grid.sphere_count << " refinements " << r.grid.refinements << '\n';
  if (r.tail_bound > 0.0) os << "tail_bound " << fmt(r.tail_bound) << '\n';
  for (const auto& [u, v] : r.per_slice) {
    os << "  [" << fmt(u.x()) << ", " << fmt(u.y()) << ", " << fmt(u.z()) << "] " << fmt(v) << '\n';
  }
  return os.str();
}

int cmd_norm(Config& c, std::ostream& out) {
  const FockParams params = resolved_params(c);
  const auto file = load_function(c);
  const auto sphere = sphere_of(c);
  NormReport report;
  if (file.series) {
    FockParams one = params;
    if (one.n != 1) throw Error(ErrorKind::InvalidArgument, "--n differs from the function file (n = 1)");
    report = params.is_sup() ? sup_norm(*file.series, one, sphere, {c.radial, c.angular})
                             : fock_norm_p(*file.series, one, QuadratureGrid(c.radial, c.angular, params.radius),
                                           sphere);
  } else {
    if (!params.is_sup()) {
      throw Error(ErrorKind::InvalidArgument, "p-norms of several-variable functions are not supported; use --p inf");
    }
    FockParams multi = params;
    multi.n = file.n;
    report.grid = {0, 0, params.radius, sphere.size(), 0, "halton-compass"};
    for (const auto& I : sphere) {
      const double v = multi_slice_sup(*file.poly, I, multi);
      report.per_slice.emplace_back(I, v);
      report.value = std::max(report.value, v);
    }
  }
  std::string body;
  if (c.format == "json") {
    body = io::to_json(report).dump(2) + "\n";
  } else if (c.format == "csv") {
    body = io::csv_header() + "\n" + io::csv_row(function_id(c), params, report.value) + "\n";
  } else {
    body = report_text(report);
  }
  emit(c, out, body);
  return kOk;
}

int cmd_kernel(Config& c, std::ostream& out) {
  const FockParams params = resolved_params(c);
  const Quaternion q = parse_quaternion(c.q);
  const Quaternion w = parse_quaternion(c.w);
  const KernelValue k = c.normalized ? normalized_kernel_eval(w, q, params.alpha, c.trunc)
                                     : star_exp_eval(q, w, params.alpha, c.trunc);
  std::string body;
  if (c.format == "json") {
    body = json{{"q", io::to_json(q)}, {"w", io::to_json(w)}, {"alpha", params.alpha}, {"N", c.trunc},
                {"normalized", c.normalized}, {"value", io::to_json(k.value)}, {"tail_bound", k.tail_bound}}
               .dump(2) +
           "\n";
  } else if (c.format == "csv") {
    body = "w,x,y,z,tail_bound\n" + fmt(k.value.w) + "," + fmt(k.value.x) + "," + fmt(k.value.y) + "," +
           fmt(k.value.z) + "," + fmt(k.tail_bound) + "\n";
  } else {
    body = "value " + fmt(k.value) + "\ntail_bound " + fmt(k.tail_bound) + "\n";
  }
  emit(c, out, body);
  return kOk;
}

int cmd_synth(Config& c, std::ostream& out) {
  const auto file = io::atomic_from_json(io::read_json_file(c.input));
  const SliceSeries f = atomic_synthesis(file.data, file.slice);
  std::string body;
  if (c.format == "csv") {
    body = "k,w,x,y,z\n";
    for (std::size_t k = 0; k <= f.degree(); ++k) {
      const Quaternion a = f.coeff(k);
      body += std::to_string(k) + "," + fmt(a.w) + "," + fmt(a.x) + "," + fmt(a.y) + "," + fmt(a.z) + "\n";
    }
  } else if (c.format == "text") {
    std::ostringstream os;
    os << "degree " << f.degree() << "  tail_bound " << fmt(f.tail_bound()) << '\n';
    for (std::size_t k = 0; k <= f.degree(); ++k) os << "  a_" << k << " " << fmt(f.coeff(k)) << '\n';
    body = os.str();
  } else {
    body = io::to_json(f).dump(2) + "\n";
  }
  emit(c, out, body);
  return kOk;
}

int cmd_profile(Config& c, std::ostream& out) {
  const FockParams params = resolved_params(c);
  const auto file = load_function(c);
  const SliceSeries& f = require_series(file, "profile");
  std::vector<double> rho = c.rho;
  if (rho.empty()) {
    for (int k = 1; k <= 8; ++k) rho.push_back(params.radius * k / 8.0);
  }
  const auto prof = little_space_profile(f, params, rho, sphere_of(c), c.angular);
  std::ostringstream os;
  if (c.format == "json") {
    os << json{{"rho", prof.rho},
               {"values", prof.values},
               {"decreasing_tail", prof.decreasing_tail},
               {"member", prof.member},
               {"tolerance", prof.tolerance}}
              .dump(2)
       << '\n';
  } else if (c.format == "csv") {
    os << "rho,value\n";
    for (std::size_t k = 0; k < prof.rho.size(); ++k) os << fmt(prof.rho[k]) << ',' << fmt(prof.values[k]) << '\n';
  } else {
    for (std::size_t k = 0; k < prof.rho.size(); ++k) {
      os << "rho " << fmt(prof.rho[k]) << "  M " << fmt(prof.values[k]) << '\n';
    }
    os << "decreasing_tail " << (prof.decreasing_tail ? "yes" : "no") << "  member "
       << (prof.member ? "yes" : "no") << " (tolerance " << fmt(prof.tolerance) << ")\n";
  }
  emit(c, out, os.str());
  return kOk;
}

int cmd_verify(Config& c, std::ostream& out) {
  VerifyOptions o;
  o.seed = c.seed;
  o.params = resolved_params(c);
  o.sphere_count = c.sphere;
  o.radial = c.radial;
  o.angular = c.angular;
  o.props = c.props;
  const auto results = run_verify(o);
  bool ok = true;
  std::ostringstream os;
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"instances", r.instances}, {"worst", r.worst}, {"bound", r.bound},
                     {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}});
    }
    os << json{{"seed", c.seed}, {"results", arr}}.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << "name,instances,worst,bound,status\n";
    for (const auto& r : results) {
      os << r.name << ',' << r.instances << ',' << fmt_sci(r.worst) << ',' << fmt_sci(r.bound) << ','
         << (r.pass ? "PASS" : "FAIL") << '\n';
    }
  } else {
    for (const auto& r : results) {
      char line[160];
      std::snprintf(line, sizeof line, "%-24s %6zu  worst %-13s bound %-13s %s", r.name.c_str(), r.instances,
                    fmt_sci(r.worst).c_str(), fmt_sci(r.bound).c_str(), r.pass ? "PASS" : "FAIL");
      os << line;
      if (!r.detail.empty()) os << "  (" << r.detail << ")";
      os << '\n';
    }
  }
  for (const auto& r : results) ok = ok && r.pass;
  emit(c, out, os.str());
  return ok ? kOk : kPropositionFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Slice-regular functions and Gaussian-weighted Fock norms", "slicefock"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_params) {
    sub->add_option("--out", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", c.output, "write to this file instead of stdout");
    if (!with_params) return;
    sub->add_option("--alpha", c.params.alpha, "Gaussian weight alpha > 0");
    sub->add_option("--p", c.p_text, "exponent p > 0, or inf");
    sub->add_option("--radius", c.params.radius, "disk radius R");
    sub->add_option("--n", c.params.n, "number of variables");
    sub->add_option("--sphere", c.sphere, "number of sampled imaginary units");
    sub->add_option("--radial", c.radial, "radial nodes (quadrature or sup search)");
    sub->add_option("--angular", c.angular, "angular nodes");
    sub->add_option("--slice", c.slice, "restrict to one imaginary unit x,y,z");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a function file at points");
  eval_cmd->add_option("input", c.input, "function file")->required();
  eval_cmd->add_option("--point", c.points, "quaternion w,x,y,z (repeatable; otherwise one point per stdin line)");
  eval_cmd->add_option("--slice", c.slice, "unit for the two-point cross-check (default i)");
  common(eval_cmd, false);

  auto* norm_cmd = app.add_subcommand("norm", "Fock norm of a function file");
  norm_cmd->add_option("input", c.input, "function file")->required();
  common(norm_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "run the proposition suite on a seeded corpus");
  verify_cmd->add_option("--seed", c.seed, "corpus seed");
  verify_cmd->add_option("--props", c.props, "comma-separated subset")->delimiter(',');
  common(verify_cmd, true);

  auto* kernel_cmd = app.add_subcommand("kernel", "evaluate the exponential kernel at (q, w)");
  kernel_cmd->add_option("--q", c.q, "quaternion q");
  kernel_cmd->add_option("--w", c.w, "quaternion w");
  kernel_cmd->add_option("--N", c.trunc, "truncation degree");
  kernel_cmd->add_flag("--normalized", c.normalized, "multiply by exp(-alpha|w|^2/2)");
  common(kernel_cmd, true);

  auto* synth_cmd = app.add_subcommand("synth", "synthesize a function from atomic data");
  synth_cmd->add_option("input", c.input, "atomic data file")->required();
  common(synth_cmd, false);

  auto* profile_cmd = app.add_subcommand("profile", "weighted maximum modulus profile M(rho)");
  profile_cmd->add_option("input", c.input, "function file")->required();
  profile_cmd->add_option("--rho", c.rho, "radii, strictly increasing")->delimiter(',');
  common(profile_cmd, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(c, in, out);
    if (norm_cmd->parsed()) return cmd_norm(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    if (kernel_cmd->parsed()) return cmd_kernel(c, out);
    if (synth_cmd->parsed()) return cmd_synth(c, out);
    if (profile_cmd->parsed()) return cmd_profile(c, out);
  } catch (const GridTooCoarseError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& line : e.trace()) err << "  " << line << '\n';
    return kQuadratureError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace slicefock::cli
