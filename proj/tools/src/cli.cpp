#include "tmahler/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmahler/divisor.hpp"
#include "tmahler/error.hpp"
#include "tmahler/lseries.hpp"
#include "tmahler/mahler.hpp"
#include "tmahler/parse.hpp"
#include "tmahler/paths.hpp"
#include "tmahler/periods.hpp"
#include "tmahler/specfun.hpp"

namespace tmahler::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- parsing helpers ------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<double> to_doubles(const std::string& s) {
  std::vector<double> out;
  for (const std::string& part : split(s, ',')) out.push_back(to_double(part));
  return out;
}

// "re" or "re,im"
cplx to_complex(const std::string& s) {
  const std::vector<double> v = to_doubles(s);
  if (v.empty() || v.size() > 2) throw UsageError("complex numbers are written re or re,im");
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

Rational to_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

std::vector<double> sweep_grid(const std::string& spec) {
  const std::vector<double> v = to_doubles([&] {
    std::string t = spec;
    std::replace(t.begin(), t.end(), ':', ',');
    return t;
  }());
  if (v.size() != 3 || !(v[2] > 0.0) || v[1] < v[0]) throw UsageError("sweep is lo:hi:step with step > 0");
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((v[1] - v[0]) / v[2] + 1e-9));
  if (n > 1000000) throw UsageError("sweep has too many points");
  for (long k = 0; k <= n; ++k) out.push_back(v[0] + static_cast<double>(k) * v[2]);
  return out;
}

// Divisor on E_20, e.g. "6(P) + 6(2P)", "-(O) + 2(-1,2)". A term is an
// optional integer coefficient followed by a parenthesised point: O, kP, or
// rational affine coordinates x,y.
FormalDivisor parse_divisor(const std::string& text, const WeierstrassCurve& e, const RationalPoint& gen) {
  FormalDivisor d;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw UsageError("divisor: " + what + " at column " + std::to_string(i + 1));
  };
  skip();
  if (i == text.size()) fail("empty divisor");
  bool first = true;
  while (i < text.size()) {
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    long coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coeff = std::stol(text.substr(i, j - i));
      i = j;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    if (i >= text.size() || text[i] != '(') fail("expected (");
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail("missing )");
    std::string body = text.substr(i + 1, close - i - 1);
    body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); }), body.end());
    RationalPoint p;
    if (body == "O") {
      p = RationalPoint::at_infinity();
    } else if (!body.empty() && body.back() == 'P') {
      const std::string k = body.substr(0, body.size() - 1);
      long n = 1;
      if (k == "-") n = -1;
      else if (!k.empty()) {
        try {
          std::size_t used = 0;
          n = std::stol(k, &used);
          if (used != k.size()) fail("bad multiple of P");
        } catch (const std::invalid_argument&) {
          fail("bad multiple of P");
        }
      }
      p = e.multiply(gen, n);
    } else {
      const std::vector<std::string> xy = split(body, ',');
      if (xy.size() != 2) fail("a point is O, kP or x,y");
      p = RationalPoint::affine(to_rational(xy[0]), to_rational(xy[1]));
      if (!e.contains(p)) throw Error(ErrorCode::PointNotOnCurve, "(" + body + ") is not on the curve");
    }
    d.add(p, sign * coeff);
    i = close + 1;
    skip();
  }
  return d;
}

// ---- output ---------------------------------------------------------------

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Rows are flat objects sharing the keys of the first row.
void write_csv(const std::vector<json>& rows, std::ostream& out) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [k, v] : rows.front().items()) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  out << "\n";
  for (const json& row : rows) {
    first = true;
    for (const auto& [k, v] : rows.front().items()) {
      out << (first ? "" : ",") << (row.contains(k) ? csv_cell(row[k]) : "");
      first = false;
    }
    out << "\n";
  }
}

struct Output {
  json doc;
  std::vector<json> rows;  // CSV view; defaults to the document itself
  int status = kExitOk;
};

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_json(cplx z) { return json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

json error_json(const std::exception& ex) {
  json j;
  if (const auto* e = dynamic_cast<const Error*>(&ex)) {
    j["code"] = std::string(to_string(e->code()));
    if (const auto* nc = dynamic_cast<const NonConvergenceError*>(&ex)) {
      j["best_estimate"] = complex_json({nc->best_real(), nc->best_imag()});
      j["best_abs_error"] = number(nc->best_abs_error());
    }
  } else {
    j["code"] = "InternalError";
  }
  j["message"] = ex.what();
  return j;
}

// ---- commands -------------------------------------------------------------

struct MahlerArgs {
  std::string poly;
  std::string radii = "1,1";
  std::optional<double> tol;
};

Output cmd_mahler(const MahlerArgs& args) {
  const LaurentPolynomial p = parse_polynomial(args.poly);
  const TorusRadii radii(to_doubles(args.radii));
  const bool two_d = p.max_degree(1) != 0 || p.min_degree(1) != 0;
  Output o;
  o.doc["command"] = "mahler";
  o.doc["poly"] = p.to_string();
  o.doc["radii"] = radii.values();
  if (!two_d && radii.size() == 1) {
    o.doc["tol"] = args.tol.value_or(1e-6);  // exact from roots; echoed for the record
    o.doc["value"] = mahler_univariate(p, radii[0]);
    o.doc["abs_error"] = 0.0;
    o.doc["evaluations"] = 0;
    return o;
  }
  if (radii.size() != 2) throw UsageError("--radii needs two values for a polynomial in x and y");
  const double tol = args.tol.value_or(1e-4);
  const RealEstimate r = mahler_torus_2d(p, radii, tol);
  o.doc["tol"] = tol;
  o.doc["value"] = r.value;
  o.doc["abs_error"] = r.abs_error;
  o.doc["evaluations"] = r.evaluations;
  return o;
}

struct LfunctionArgs {
  std::string curve = "e20";
  std::string coeffs;
  std::int64_t conductor = 0;
  std::string bad_ap;
  std::string what = "all";
};

WeierstrassCurve make_curve(const LfunctionArgs& args) {
  if (args.curve == "e20") {
    if (!args.coeffs.empty() || args.conductor != 0 || !args.bad_ap.empty()) {
      throw UsageError("--coeffs, --conductor and --bad-ap need --curve custom");
    }
    return WeierstrassCurve::e20();
  }
  if (args.curve != "custom") throw UsageError("--curve is e20 or custom");
  const std::vector<std::string> c = split(args.coeffs, ',');
  if (c.size() != 5) throw UsageError("--coeffs takes a1,a2,a3,a4,a6");
  if (args.conductor <= 0) throw UsageError("--curve custom needs --conductor");
  std::map<std::int64_t, int> bad;
  if (!args.bad_ap.empty()) {
    for (const std::string& item : split(args.bad_ap, ',')) {
      const std::vector<std::string> kv = split(item, ':');
      if (kv.size() != 2) throw UsageError("--bad-ap takes p:a_p pairs");
      bad[static_cast<std::int64_t>(to_double(kv[0]))] = static_cast<int>(to_double(kv[1]));
    }
  }
  return WeierstrassCurve(to_rational(c[0]), to_rational(c[1]), to_rational(c[2]), to_rational(c[3]),
                          to_rational(c[4]), args.conductor, bad);
}

Output cmd_lfunction(const LfunctionArgs& args) {
  const WeierstrassCurve e = make_curve(args);
  Output o;
  o.doc["command"] = "lfunction";
  o.doc["curve"] = args.curve;
  o.doc["coefficients"] = json::array();
  for (const Rational* a : {&e.a1(), &e.a2(), &e.a3(), &e.a4(), &e.a6()}) o.doc["coefficients"].push_back(a->str());
  o.doc["conductor"] = e.conductor();
  o.doc["discriminant"] = e.discriminant().str();
  const bool all = args.what == "all";
  if (all || args.what == "root-number") o.doc["root_number"] = root_number(e);
  if (all || args.what == "l2") o.doc["l2"] = l_value_2(e);
  if (args.what == "lprime0") o.doc["lprime0"] = l_derivative_0(e);
  // With "all" the derivative is only reported where the functional equation gives it.
  if (all) o.doc["lprime0"] = root_number(e) == 1 ? json(l_derivative_0(e)) : json(nullptr);
  return o;
}

struct PathArgs {
  std::string family = "S";
  std::string branch = "minus";
  std::optional<double> a;
  std::string sweep;
  std::optional<double> tol;
};

BranchId branch_of(const PathArgs& args) {
  BranchId id;
  id.family = args.family == "S" ? Family::S : Family::R;
  id.sign = args.branch == "plus" ? Sign::Plus : Sign::Minus;
  return id;
}

json classify_row(Family f, double a) {
  const PathClass c = classify(f, a);
  json j;
  j["family"] = std::string(to_string(f));
  j["a"] = a;
  j["parameter"] = c.parameter;
  j["minus"] = std::string(to_string(c.minus_branch));
  j["plus"] = std::string(to_string(c.plus_branch));
  j["consistent"] = c.consistent;
  j["minus_min_ratio"] = c.minus_sampled.min_ratio;
  j["minus_max_ratio"] = c.minus_sampled.max_ratio;
  j["plus_min_ratio"] = c.plus_sampled.min_ratio;
  j["plus_max_ratio"] = c.plus_sampled.max_ratio;
  return j;
}

Output cmd_path(const std::string& what, const PathArgs& args) {
  const BranchId id = branch_of(args);
  if (args.a.has_value() == !args.sweep.empty()) throw UsageError("give exactly one of --a and --sweep");
  const std::vector<double> grid = args.sweep.empty() ? std::vector<double>{*args.a} : sweep_grid(args.sweep);

  std::function<json(double)> row;
  if (what == "classify") {
    row = [&](double a) { return classify_row(id.family, a); };
  } else {
    row = [&](double a) {
      json j;
      j["family"] = std::string(to_string(id.family));
      j["branch"] = std::string(to_string(id.sign));
      j["a"] = a;
      if (what == "winding") {
        j["value"] = winding(id, a);
      } else if (what == "eta") {
        const double tol = args.tol.value_or(1e-6);
        const RealEstimate r = eta_integral(id, a, tol);
        j["tol"] = tol;
        j["value"] = r.value;
        j["abs_error"] = r.abs_error;
      } else {
        const double tol = args.tol.value_or(1e-8);
        const ComplexEstimate r = period_integral(id, a, tol);
        j["tol"] = tol;
        j["re"] = r.value.real();
        j["im"] = r.value.imag();
        j["abs_error"] = r.abs_error;
        const cplx ref = period_reference();
        j["reference_im"] = ref.imag();
      }
      return j;
    };
  }

  Output o;
  if (args.sweep.empty()) {
    o.doc["command"] = "path " + what;
    const json r = row(grid.front());
    for (const auto& [k, v] : r.items()) o.doc[k] = v;
    return o;
  }
  o.doc["command"] = "path " + what;
  o.doc["sweep"] = args.sweep;
  o.doc["rows"] = json::array();
  for (double a : grid) {
    json j;
    try {
      j = row(a);
    } catch (const Error& e) {
      j = json{{"family", args.family}, {"a", a}, {"error", error_json(e)}};
    }
    o.rows.push_back(j);
    o.doc["rows"].push_back(j);
  }
  return o;
}

Output cmd_dilog(const std::string& z_text) {
  const cplx z = to_complex(z_text);
  Output o;
  o.doc["command"] = "dilog";
  o.doc["z"] = complex_json(z);
  o.doc["li2"] = complex_json(dilog(z));
  o.doc["bloch_wigner"] = bloch_wigner(z);
  o.rows = {json{{"z_re", z.real()},
                 {"z_im", z.imag()},
                 {"li2_re", dilog(z).real()},
                 {"li2_im", dilog(z).imag()},
                 {"bloch_wigner", bloch_wigner(z)}}};
  return o;
}

Output cmd_elliptic_dilog(const std::string& spec) {
  const WeierstrassCurve e = WeierstrassCurve::e20();
  const RationalPoint gen = RationalPoint::affine(-1, 2);
  const FormalDivisor d = parse_divisor(spec, e, gen);
  Output o;
  o.doc["command"] = "elliptic-dilog";
  o.doc["curve"] = "e20";
  o.doc["generator"] = to_string(gen);
  o.doc["divisor"] = d.to_string();
  o.doc["value"] = elliptic_dilog(d, e);
  return o;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<double> tol;
  std::uint64_t seed = 20;
  bool timing = false;
};

Output cmd_verify(const VerifyArgs& args) {
  SuiteOptions opts;
  opts.tol = args.tol;
  opts.seed = args.seed;
  const std::vector<VerificationReport> reports = run_suite(args.suite, opts);
  Output o;
  o.doc["command"] = "verify";
  o.doc["suite"] = args.suite;
  o.doc["seed"] = args.seed;
  o.doc["cases"] = json::array();
  int failed = 0;
  for (const VerificationReport& r : reports) {
    json j;
    j["case"] = r.case_id;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["tolerance"] = r.tolerance;
    j["abs_diff"] = number(r.abs_diff);
    j["pass"] = r.pass;
    if (args.timing) j["runtime_s"] = r.runtime_s;
    j["note"] = r.note;
    failed += r.pass ? 0 : 1;
    o.rows.push_back(j);
    o.doc["cases"].push_back(j);
  }
  o.doc["passed"] = static_cast<int>(reports.size()) - failed;
  o.doc["failed"] = failed;
  o.status = failed == 0 ? kExitOk : kExitFailure;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mahler measures over arbitrary tori", "tmahler"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::function<Output()> action;

  MahlerArgs margs;
  CLI::App* mahler = app.add_subcommand("mahler", "Mahler measure over a torus");
  mahler->add_option("--poly", margs.poly, "polynomial in x and y")->required();
  mahler->add_option("--radii", margs.radii, "comma separated radii (default 1,1)");
  mahler->add_option("--tol", margs.tol, "absolute tolerance (default 1e-4)")->check(CLI::PositiveNumber);
  mahler->callback([&] { action = [&] { return cmd_mahler(margs); }; });

  LfunctionArgs largs;
  CLI::App* lfun = app.add_subcommand("lfunction", "L-values of an elliptic curve");
  lfun->add_option("--curve", largs.curve, "e20 or custom")->check(CLI::IsMember({"e20", "custom"}));
  lfun->add_option("--coeffs", largs.coeffs, "a1,a2,a3,a4,a6 (rationals) for --curve custom");
  lfun->add_option("--conductor", largs.conductor, "conductor for --curve custom");
  lfun->add_option("--bad-ap", largs.bad_ap, "a_p at bad primes, p:a_p,...");
  lfun->add_option("--what", largs.what, "l2, lprime0, root-number or all")
      ->check(CLI::IsMember({"l2", "lprime0", "root-number", "all"}));
  lfun->callback([&] { action = [&] { return cmd_lfunction(largs); }; });

  PathArgs pargs;
  CLI::App* path = app.add_subcommand("path", "branch paths of the S and R families");
  path->require_subcommand(1);
  for (const char* what : {"classify", "winding", "eta", "period"}) {
    CLI::App* sub = path->add_subcommand(what);
    sub->add_option("--family", pargs.family, "S or R")->check(CLI::IsMember({"S", "R"}));
    sub->add_option("--a", pargs.a, "radius")->check(CLI::PositiveNumber);
    sub->add_option("--sweep", pargs.sweep, "lo:hi:step");
    if (std::string(what) != "classify") sub->add_option("--branch", pargs.branch)->check(CLI::IsMember({"plus", "minus"}));
    if (std::string(what) == "eta" || std::string(what) == "period") {
      sub->add_option("--tol", pargs.tol, "absolute tolerance")->check(CLI::PositiveNumber);
    }
    sub->callback([&, name = std::string(what)] { action = [&, name] { return cmd_path(name, pargs); }; });
  }

  std::string z;
  CLI::App* dl = app.add_subcommand("dilog", "dilogarithm and Bloch-Wigner function");
  dl->add_option("--z", z, "re or re,im")->required();
  dl->callback([&] { action = [&] { return cmd_dilog(z); }; });

  std::string divisor;
  CLI::App* ed = app.add_subcommand("elliptic-dilog", "elliptic dilogarithm on E_20");
  ed->add_option("--divisor", divisor, "e.g. \"(P) + (2P)\"")->required();
  ed->callback([&] { action = [&] { return cmd_elliptic_dilog(divisor); }; });

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", vargs.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--tol", vargs.tol, "tolerance (default: per suite)")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vargs.seed);
  verify->add_flag("--timing", vargs.timing, "report per-case runtime");
  verify->callback([&] { action = [&] { return cmd_verify(vargs); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Output o;
  try {
    o = action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    json doc;
    doc["command"] = args.empty() ? "" : args.front();
    if (args.size() > 1 && args.front() == "path") doc["command"] = "path " + args[1];
    doc["error"] = error_json(e);
    err << "error: " << e.what() << "\n";
    out << doc.dump(2) << "\n";
    return kExitFailure;
  }
  if (format == "csv") {
    write_csv(o.rows.empty() ? std::vector<json>{o.doc} : o.rows, out);
  } else {
    out << o.doc.dump(2) << "\n";
  }
  return o.status;
}

}  // namespace tmahler::cli
