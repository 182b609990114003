#include "dzeta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "dzeta/classical_zetas.hpp"
#include "dzeta/double_series.hpp"
#include "dzeta/oracle_quadrature.hpp"

#ifndef DZETA_SOURCE_SUITES
#define DZETA_SOURCE_SUITES "suites"
#endif

namespace dzeta::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& t) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + t + "'");
  }
  if (pos != t.size()) throw std::invalid_argument("not a number: '" + t + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

long parse_long(const std::string& t) {
  const double v = parse_double(t);
  if (v != std::floor(v)) throw std::invalid_argument("not an integer: '" + t + "'");
  return static_cast<long>(v);
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string t = trim(text);
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw std::invalid_argument("empty complex number");
  if (t.find(',') != std::string::npos) {
    const auto parts = split(t, ',');
    if (parts.size() != 2) throw std::invalid_argument("complex pair needs two parts: '" + text + "'");
    return {parse_double(parts[0]), parse_double(parts[1])};
  }
  if (t.back() != 'i') return {parse_double(t), 0.0};
  // a+bi, a-bi, bi, i, -i
  std::string body = t.substr(0, t.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_of = [](const std::string& s) -> double {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s);
  };
  if (split_at == std::string::npos) return {0.0, imag_of(body)};
  return {parse_double(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

std::vector<Complex> parse_table(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("char:", 0) == 0 || t.rfind("periodic:", 0) == 0) {
    const auto s = parse_sequence(t);
    const auto tab = s.table();
    return {tab.begin(), tab.end()};
  }
  std::vector<Complex> out;
  for (const auto& p : split(t, ',')) out.push_back(parse_complex(p));
  return out;
}

CoefficientSequence parse_sequence(const std::string& text) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  const std::string kind = t.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : t.substr(colon + 1);
  auto values = [&]() {
    std::vector<Complex> v;
    for (const auto& p : split(rest, ',')) v.push_back(parse_complex(p));
    if (v.empty()) throw std::invalid_argument("sequence '" + text + "' has no values");
    return v;
  };
  if (kind == "const" || kind == "one") return CoefficientSequence::constant();
  if (kind == "exp") return CoefficientSequence::exponential(parse_double(rest));
  if (kind == "delta") return CoefficientSequence::delta(parse_long(rest));
  if (kind == "char") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw std::invalid_argument("character spec is char:MOD:INDEX");
    return CoefficientSequence::character(
        dirichlet_character(static_cast<int>(parse_long(parts[0])), static_cast<int>(parse_long(parts[1]))));
  }
  if (kind == "periodic") return CoefficientSequence::periodic(values());
  if (kind == "finite") return CoefficientSequence::finite(values());
  if (kind == "delta-form" || kind == "Delta") return CoefficientSequence::cusp_form(delta_form());
  throw std::invalid_argument("unknown sequence kind '" + kind + "'");
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  throw std::invalid_argument("expected a complex number, got " + j.dump());
}

json report_json(const FEReport& r) {
  json j;
  j["schema"] = kSchema;
  j["theorem"] = to_string(r.theorem);
  j["point"] = {{"s1", complex_json(r.point.s1)}, {"s2", complex_json(r.point.s2)}};
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = to_string(r.status);
  if (r.refused()) {
    j["refusal_reason"] = r.refusal_reason;
    j["pass"] = false;
    return j;
  }
  j["lhs"] = complex_json(r.lhs);
  j["rhs"] = complex_json(r.rhs);
  j["lhs_err"] = r.lhs_err;
  j["rhs_err"] = r.rhs_err;
  j["residual_abs"] = r.residual_abs;
  j["residual_rel"] = r.residual_rel;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["routes"] = {{"lhs", r.lhs_route}, {"rhs", r.rhs_route}};
  return j;
}

json value_json(const std::string& function, const json& inputs, const SeriesValue& v) {
  json j;
  j["schema"] = kSchema;
  j["function"] = function;
  j["inputs"] = inputs;
  j["status"] = to_string(v.status);
  if (!v.ok()) {
    j["refusal_reason"] = v.reason;
    return j;
  }
  j["value"] = complex_json(v.value);
  j["error"] = v.error;
  j["route"] = v.route;
  j["terms"] = v.terms;
  return j;
}

FEParams params_from_json(const json& j, FEParams p) {
  for (const auto& [key, val] : j.items()) {
    if (key == "alpha") p.alpha = val.get<double>();
    else if (key == "beta") p.beta = val.get<double>();
    else if (key == "omega") p.omega = complex_from_json(val);
    else if (key == "omega1") p.omega1 = complex_from_json(val);
    else if (key == "omega2") p.omega2 = complex_from_json(val);
    else if (key == "seq") p.seq = parse_sequence(val.get<std::string>());
    else if (key == "a1") p.a1 = parse_table(val.get<std::string>());
    else if (key == "a2") p.a2 = parse_table(val.get<std::string>());
    else if (key == "sign") p.sign = val.get<int>();
    else if (key == "sigma_form") p.sigma_form = val.get<bool>();
    else if (key == "tau") p.tau = complex_from_json(val);
    else if (key == "L") p.L_max = val.get<long>();
    else if (key == "tolerance") p.tolerance = val.get<double>();
    else throw std::invalid_argument("unknown parameter '" + key + "'");
  }
  return p;
}

Suite load_suite(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open suite " + file.string());
  const json doc = json::parse(in);
  Suite s;
  s.name = doc.value("name", file.stem().string());
  const FEParams defaults = params_from_json(doc.value("defaults", json::object()));
  for (const auto& c : doc.at("cases")) {
    SuiteCase sc;
    const auto th = parse_theorem(c.at("theorem").get<std::string>());
    if (!th) throw std::invalid_argument("unknown theorem in suite: " + c.at("theorem").dump());
    sc.theorem = *th;
    sc.point.s1 = complex_from_json(c.value("s1", json(0.0)));
    sc.point.s2 = complex_from_json(c.value("s2", json(0.0)));
    sc.params = params_from_json(c.value("params", json::object()), defaults);
    if (c.contains("tolerance")) sc.params.tolerance = c["tolerance"].get<double>();
    sc.expect_refusal = c.value("expect", std::string("pass")) == "refuse";
    sc.expect_reason = c.value("reason", std::string());
    sc.criterion = c.value("criterion", 0);
    sc.relative = c.value("relative", false);
    sc.label = c.value("label", std::string());
    s.cases.push_back(std::move(sc));
  }
  return s;
}

std::filesystem::path suite_dir() {
  if (const char* env = std::getenv("DZETA_SUITES")) return env;
  return DZETA_SOURCE_SUITES;
}

int thread_count() {
  if (const char* env = std::getenv("DZETA_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<FEReport> run_cases(const std::vector<SuiteCase>& cases, int threads) {
  std::vector<FEReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) out[i] = verify(cases[i].theorem, cases[i].point, cases[i].params);
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

bool case_ok(const SuiteCase& c, const FEReport& r) {
  if (c.expect_refusal) return r.refused() && r.refusal_reason.find(c.expect_reason) != std::string::npos;
  if (r.refused()) return false;
  return (c.relative ? r.residual_rel : r.residual_abs) <= c.params.tolerance;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct Options {
  std::string id;
  std::string s = "0", s1 = "0", s2 = "0";
  std::string a = "1", c = "1", x = "1";
  double alpha = 1.0, beta = 0.0;
  std::string omega = "1", omega1 = "1", omega2 = "1";
  std::string seq = "const";
  std::string a1, a2;
  int sign = 1;
  long L = 200;
  bool continuation = false;
  bool sigma_form = false;
  double tol = 1e-8;
  std::string tau = "i";
  std::string format = "json";
  std::string out;
  std::string suite;
  std::string grid;
  std::string hyperplane;
  std::optional<int> k;
  int max = 10;
  int mod = 4;
  int index = 1;
  std::string table;
};

struct Emitter {
  std::ostream* os = &std::cout;
  std::ofstream file;
  explicit Emitter(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot write " + path);
      os = &file;
    }
  }
};

// Axis "name=start:stop:step"; stop is inclusive within half a step.
std::vector<double> axis_values(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw std::invalid_argument("grid axis needs start:stop:step, got '" + spec + "'");
  const double a = parse_double(parts[0]), b = parse_double(parts[1]), h = parse_double(parts[2]);
  if (!(h > 0.0) || b < a) throw std::invalid_argument("grid axis needs step > 0 and stop >= start");
  const double n = std::floor((b - a) / h + 0.5);
  if (n > 1e4) throw std::invalid_argument("grid exceeds 10^4 points");
  std::vector<double> v;
  for (long k = 0; k <= static_cast<long>(n); ++k) v.push_back(a + k * h);
  return v;
}

std::vector<EvalPoint> build_points(const Options& o) {
  const EvalPoint base{parse_complex(o.s1), parse_complex(o.s2)};
  std::vector<EvalPoint> pts{base};
  if (!o.grid.empty()) {
    for (const auto& axis : split(o.grid, ';')) {
      const auto eq = axis.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("grid axis needs name=start:stop:step");
      const std::string name = trim(axis.substr(0, eq));
      const auto vals = axis_values(axis.substr(eq + 1));
      std::vector<EvalPoint> next;
      for (const auto& p : pts)
        for (double v : vals) {
          EvalPoint q = p;
          if (name == "sigma1") q.s1 = {v, q.s1.imag()};
          else if (name == "t1") q.s1 = {q.s1.real(), v};
          else if (name == "sigma2") q.s2 = {v, q.s2.imag()};
          else if (name == "t2") q.s2 = {q.s2.real(), v};
          else throw std::invalid_argument("unknown grid axis '" + name + "'");
          next.push_back(q);
        }
      pts.swap(next);
      if (pts.size() > 10000) throw std::invalid_argument("grid exceeds 10^4 points");
    }
  }
  std::optional<Complex> plane;
  if (!o.hyperplane.empty()) plane = parse_complex(o.hyperplane);
  if (o.k) plane = Complex(2.0 * *o.k + 1.0, 0.0);
  if (plane) {
    const Complex h = *plane;
    for (auto& p : pts) p.s2 = h - p.s1;
  }
  return pts;
}

FEParams params_from_options(const Options& o) {
  FEParams p;
  p.alpha = o.alpha;
  p.beta = o.beta;
  p.omega = parse_complex(o.omega);
  p.omega1 = parse_complex(o.omega1);
  p.omega2 = parse_complex(o.omega2);
  p.seq = parse_sequence(o.seq);
  if (!o.a1.empty()) p.a1 = parse_table(o.a1);
  if (!o.a2.empty()) p.a2 = parse_table(o.a2);
  p.sign = o.sign;
  p.sigma_form = o.sigma_form;
  p.tau = parse_complex(o.tau);
  p.L_max = o.L;
  p.tolerance = o.tol;
  return p;
}

SeriesValue wrap(const std::function<Complex()>& f, const char* route) {
  return guarded([&]() -> SeriesValue {
    SeriesValue v;
    v.value = f();
    v.error = 1e-13 * std::abs(v.value);
    v.route = route;
    return v;
  });
}

// Evaluates one registry function at one point.
SeriesValue eval_function(const std::string& fn, const Options& o, const EvalPoint& pt, json& inputs) {
  const FEParams p = params_from_options(o);
  FSeriesOptions fo;
  fo.L_max = o.L;
  fo.allow_continuation = o.continuation;
  auto two = [&] {
    inputs["s1"] = complex_json(pt.s1);
    inputs["s2"] = complex_json(pt.s2);
  };
  if (fn == "gamma" || fn == "zeta" || fn == "hurwitz" || fn == "lerch" || fn == "L") {
    const Complex s = parse_complex(o.s);
    inputs["s"] = complex_json(s);
    if (fn == "gamma") return wrap([&] { return gamma(s); }, "lanczos");
    if (fn == "zeta") return wrap([&] { return riemann_zeta(s); }, "riemann");
    if (fn == "hurwitz" || fn == "lerch") inputs["alpha"] = o.alpha;
    if (fn == "hurwitz") return wrap([&] { return hurwitz_zeta(s, o.alpha); }, "hurwitz");
    if (fn == "lerch") return wrap([&] { return lerch_phi(s, o.alpha); }, "lerch");
    inputs["seq"] = p.seq.describe();
    return sequence_L(s, p.seq);
  }
  if (fn == "psi") {
    const Complex a = parse_complex(o.a), c = parse_complex(o.c), x = parse_complex(o.x);
    inputs["a"] = complex_json(a);
    inputs["c"] = complex_json(c);
    inputs["x"] = complex_json(x);
    return psi(a, c, x);
  }
  if (fn == "cusp") {
    inputs["tau"] = complex_json(p.tau);
    if (p.seq.kind() != SequenceKind::cusp_form) return SeriesValue::refused("cusp needs --seq delta-form");
    return wrap([&] { return cusp_form_eval(p.tau, p.seq.cusp()); }, "q-expansion");
  }
  two();
  const auto with_common = [&] {
    inputs["alpha"] = o.alpha;
    inputs["omega"] = complex_json(p.omega);
    inputs["seq"] = p.seq.describe();
  };
  if (fn == "L2" || fn == "thm5" || fn == "lambda") {
    with_common();
    if (fn == "thm5") return thm5_rhs(pt, o.alpha, p.omega, p.seq, fo);
    if (fn == "lambda") return lambda_L2(pt, o.alpha, p.omega, p.seq);
    DoubleSeriesParams dp;
    dp.alpha = o.alpha;
    dp.omega = p.omega;
    dp.seq = p.seq;
    return L2_direct(pt, dp);
  }
  if (fn == "F" || fn == "F0" || fn == "H") {
    with_common();
    inputs["sign"] = o.sign;
    if (fn == "H") {
      if (p.seq.kind() != SequenceKind::cusp_form) return SeriesValue::refused("H needs a cusp form sequence");
      const auto d = H_decay(pt, p.seq.kappa());
      inputs["admissibility"] = d.describe();
      return H_pm(o.sign, pt, o.alpha, p.omega, p.seq.cusp(), p.seq.cusp().level);
    }
    const DivisorFamily fam = fn == "F" ? DivisorFamily{o.sign * o.alpha, Complex{}, pt.sum() - 1.0, p.seq}
                                        : DivisorFamily{o.sign * o.alpha, pt.sum() - 1.0, Complex{}, p.seq};
    inputs["admissibility"] = psi_dirichlet_decay(fam, pt.s2).describe();
    return fn == "F" ? F_pm(o.sign, pt, o.alpha, p.omega, p.seq, fo) : F0_pm(o.sign, pt, o.alpha, p.omega, p.seq, fo);
  }
  if (fn == "Fsigma" || fn == "thm1" || fn == "g") {
    inputs["alpha"] = o.alpha;
    inputs["beta"] = o.beta;
    inputs["omega"] = complex_json(p.omega);
    if (fn == "Fsigma") {
      inputs["sign"] = o.sign;
      return F_sigma(o.sign, pt, o.alpha, o.beta, p.omega, fo);
    }
    if (fn == "thm1") return thm1_rhs(pt, o.alpha, o.beta, p.omega, fo);
    return g_func(pt, o.alpha, o.beta, p.omega, fo);
  }
  if (fn == "thm6") {
    with_common();
    return thm6_rhs(pt, o.alpha, p.omega, p.seq);
  }
  if (fn == "zeta2" || fn == "xi") {
    inputs["omega1"] = complex_json(p.omega1);
    inputs["omega2"] = complex_json(p.omega2);
    if (fn == "xi") return xi_func(pt, p.omega1, p.omega2, fo);
    return zeta2_two_omega_direct(pt, p.omega1, p.omega2);
  }
  if (fn == "doubleL") {
    inputs["omega1"] = complex_json(p.omega1);
    inputs["omega2"] = complex_json(p.omega2);
    if (p.a1.empty() || p.a2.empty()) return SeriesValue::refused("doubleL needs --a1 and --a2");
    if (pt.sigma2() > 1.0 && pt.sum().real() > 2.0) return double_L_direct(pt, p.a1, p.a2, p.omega1, p.omega2);
    return double_L_continued(pt, p.a1, p.a2, p.omega1, p.omega2, fo);
  }
  throw std::invalid_argument("unknown function '" + fn + "'");
}

const std::vector<std::string> kFunctions = {"gamma", "psi",  "zeta",   "hurwitz", "lerch", "L",     "L2",
                                             "zeta2", "doubleL", "F", "F0",      "Fsigma", "H",    "thm5",
                                             "thm1",  "g",    "xi",     "thm6",    "lambda", "cusp"};

bool single_variable(const std::string& fn) {
  return fn == "gamma" || fn == "zeta" || fn == "hurwitz" || fn == "lerch" || fn == "L" || fn == "psi" ||
         fn == "cusp";
}

int cmd_eval(const Options& o) {
  if (std::find(kFunctions.begin(), kFunctions.end(), o.id) == kFunctions.end())
    throw std::invalid_argument("unknown function '" + o.id + "'");
  const auto pts = single_variable(o.id) ? std::vector<EvalPoint>{EvalPoint{}} : build_points(o);
  std::vector<json> rows(pts.size());
  std::vector<SeriesValue> vals(pts.size());
  std::atomic<std::size_t> next{0};
  std::string internal_error;
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) {
      json inputs;
      try {
        vals[i] = eval_function(o.id, o, pts[i], inputs);
      } catch (const Refusal& r) {
        vals[i] = SeriesValue::refused(r.what(), r.status());
      }
      rows[i] = value_json(o.id, inputs, vals[i]);
    }
  };
  // Input errors surface on the first point before any threads start.
  {
    json probe;
    eval_function(o.id, o, pts.front(), probe);
  }
  std::vector<std::thread> pool;
  const int n = std::max(1, std::min<int>(thread_count(), static_cast<int>(pts.size())));
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Emitter em(o.out);
  if (o.format == "csv" && single_variable(o.id)) {
    // inputs as a quoted JSON object
    std::string in = rows.front()["inputs"].dump();
    std::string quoted;
    for (char ch : in) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    char buf[256];
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g,%s,%s\n", vals[0].value.real(), vals[0].value.imag(),
                  vals[0].error, to_string(vals[0].status), vals[0].route.c_str());
    *em.os << "function,inputs,value_re,value_im,error,status,route\n" << o.id << ",\"" << quoted << "\"" << buf;
  } else if (o.format == "csv") {
    *em.os << "function,s1_re,s1_im,s2_re,s2_im,value_re,value_im,error,status,route\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      char buf[512];
      std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%s\n", o.id.c_str(),
                    pts[i].s1.real(), pts[i].s1.imag(), pts[i].s2.real(), pts[i].s2.imag(), vals[i].value.real(),
                    vals[i].value.imag(), vals[i].error, to_string(vals[i].status), vals[i].route.c_str());
      *em.os << buf;
    }
  } else if (rows.size() == 1) {
    *em.os << rows.front().dump(2) << "\n";
  } else {
    json doc;
    doc["schema"] = kSchema;
    doc["function"] = o.id;
    doc["values"] = rows;
    *em.os << doc.dump(2) << "\n";
  }
  bool refused = false;
  for (const auto& v : vals)
    if (!v.ok()) {
      refused = true;
      std::cerr << "refused: " << v.reason << "\n";
    }
  return refused ? 2 : 0;
}

void emit_reports(const Options& o, const std::string& title, const std::vector<FEReport>& reports,
                  const std::vector<bool>& ok, int n_pass, int n_fail, int n_refused) {
  Emitter em(o.out);
  if (o.format == "csv") {
    *em.os << "theorem,s1_re,s1_im,s2_re,s2_im,lhs_re,lhs_im,rhs_re,rhs_im,residual_abs,residual_rel,status,pass\n";
    for (const auto& r : reports) {
      char buf[512];
      std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%d\n",
                    to_string(r.theorem), r.point.s1.real(), r.point.s1.imag(), r.point.s2.real(), r.point.s2.imag(),
                    r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.residual_abs, r.residual_rel,
                    to_string(r.status), r.pass ? 1 : 0);
      *em.os << buf;
    }
  } else {
    json doc;
    doc["schema"] = kSchema;
    doc["run"] = title;
    json arr = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      json j = report_json(reports[i]);
      if (!ok.empty()) j["case_ok"] = static_cast<bool>(ok[i]);
      arr.push_back(std::move(j));
    }
    doc["reports"] = std::move(arr);
    doc["summary"] = {{"total", reports.size()}, {"pass", n_pass}, {"fail", n_fail}, {"refused", n_refused}};
    *em.os << doc.dump(2) << "\n";
  }
  std::cerr << title << ": " << n_pass << " pass, " << n_fail << " fail, " << n_refused << " refused\n";
}

int cmd_verify_suite(const Options& o) {
  std::vector<std::filesystem::path> files;
  if (o.suite == "all") {
    for (const auto& e : std::filesystem::directory_iterator(suite_dir()))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else {
    std::filesystem::path f = o.suite;
    if (!std::filesystem::exists(f)) f = suite_dir() / (o.suite + ".json");
    files.push_back(f);
  }
  std::vector<SuiteCase> cases;
  for (const auto& f : files) {
    auto s = load_suite(f);
    for (auto& c : s.cases)
      if (o.id.empty() || o.id == "all" || parse_theorem(o.id) == c.theorem) cases.push_back(std::move(c));
  }
  if (cases.empty()) throw std::invalid_argument("suite selection is empty");
  const auto reports = run_cases(cases, thread_count());
  std::vector<bool> ok(reports.size());
  int n_pass = 0, n_fail = 0, n_refused = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ok[i] = case_ok(cases[i], reports[i]);
    if (reports[i].refused()) ++n_refused;
    if (ok[i]) ++n_pass;
    else ++n_fail;
  }
  emit_reports(o, "suite " + o.suite, reports, ok, n_pass, n_fail, n_refused);
  return n_fail > 0 ? 1 : 0;
}

int cmd_verify(const Options& o) {
  if (!o.suite.empty()) return cmd_verify_suite(o);
  const auto th = parse_theorem(o.id);
  if (!th) throw std::invalid_argument("unknown theorem '" + o.id + "'");
  const FEParams p = params_from_options(o);
  std::vector<SuiteCase> cases;
  for (const auto& pt : build_points(o)) {
    SuiteCase c;
    c.theorem = *th;
    c.point = pt;
    c.params = p;
    cases.push_back(std::move(c));
  }
  const auto reports = run_cases(cases, thread_count());
  int n_pass = 0, n_fail = 0, n_refused = 0;
  for (const auto& r : reports) {
    if (r.refused()) {
      ++n_refused;
      std::cerr << "refused: " << r.refusal_reason << "\n";
    } else if (r.pass) {
      ++n_pass;
    } else {
      ++n_fail;
    }
  }
  emit_reports(o, std::string("verify ") + to_string(*th), reports, {}, n_pass, n_fail, n_refused);
  if (n_fail > 0) return 1;
  return n_refused > 0 ? 2 : 0;
}

int cmd_gen_coeffs(const Options& o) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = o.id;
  if (o.id == "tau") {
    if (o.max < 1) throw std::invalid_argument("--max must be >= 1");
    const auto t = ramanujan_tau(o.max);
    doc["values"] = t;
  } else if (o.id == "character") {
    const auto chi = dirichlet_character(o.mod, o.index);
    json vals = json::array();
    for (const auto& v : chi.table) vals.push_back(complex_json(v));
    doc["modulus"] = o.mod;
    doc["index"] = o.index;
    doc["primitive"] = chi.primitive;
    doc["values"] = vals;
  } else if (o.id == "fourier") {
    const auto a = parse_table(o.table);
    const auto h = finite_fourier(a);
    // a(m) = sum_nu hat a(nu) e^{2 pi i nu m / f}
    double err = 0.0;
    const double f = static_cast<double>(a.size());
    for (std::size_t m = 1; m <= a.size(); ++m) {
      Complex v{};
      for (std::size_t nu = 1; nu <= a.size(); ++nu)
        v += h[nu - 1] * expi2pi(static_cast<double>(nu * m) / f);
      err = std::max(err, std::abs(v - a[m - 1]));
    }
    json vals = json::array();
    for (const auto& v : h) vals.push_back(complex_json(v));
    doc["values"] = vals;
    doc["roundtrip_error"] = err;
    doc["roundtrip_ok"] = err <= 1e-12;
  } else {
    throw std::invalid_argument("unknown coefficient kind '" + o.id + "'");
  }
  Emitter em(o.out);
  *em.os << doc.dump(2) << "\n";
  return 0;
}

// Turns a JSON RunConfig into argv words: {"command": "verify", "id": "T5", "s1": "-1.5", ...}.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  const json j = json::parse(in);
  std::vector<std::string> args;
  args.push_back(j.at("command").get<std::string>());
  if (j.contains("id")) args.push_back(j["id"].get<std::string>());
  for (const auto& [k, v] : j.items()) {
    if (k == "command" || k == "id") continue;
    std::string val;
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back("--" + k);
      continue;
    }
    if (v.is_string()) val = v.get<std::string>();
    else if (v.is_array() && v.size() == 2) val = std::to_string(v[0].get<double>()) + "," + std::to_string(v[1].get<double>());
    else val = v.dump();
    args.push_back("--" + k + "=" + val);
  }
  return args;
}

}  // namespace

int run(int argc, char** argv) {
  std::vector<std::string> words(argv + 1, argv + argc);
  // --config FILE expands in place; later flags override it.
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string path;
    if (words[i] == "--config" && i + 1 < words.size()) {
      path = words[i + 1];
      words.erase(words.begin() + i, words.begin() + i + 2);
    } else if (words[i].rfind("--config=", 0) == 0) {
      path = words[i].substr(9);
      words.erase(words.begin() + i);
    } else {
      continue;
    }
    try {
      auto extra = config_args(path);
      words.insert(words.begin(), extra.begin(), extra.end());
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    break;
  }

  CLI::App app{"Double zeta-functions: evaluation and functional-equation checks"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--s1", o.s1, "s1 (complex: 1.5, -2+0.3i or re,im)");
    sub->add_option("--s2", o.s2, "s2");
    sub->add_option("--alpha", o.alpha, "alpha");
    sub->add_option("--beta", o.beta, "beta");
    sub->add_option("--omega", o.omega, "omega");
    sub->add_option("--omega1", o.omega1, "omega1");
    sub->add_option("--omega2", o.omega2, "omega2");
    sub->add_option("--seq", o.seq, "coefficient sequence: const, exp:B, delta:N, char:F:I, periodic:..., finite:..., delta-form");
    sub->add_option("--a1", o.a1, "first periodic table (char:F:I or list)");
    sub->add_option("--a2", o.a2, "second periodic table");
    sub->add_option("--sign", o.sign, "sign of F/H (+1 or -1)")->check(CLI::IsMember({1, -1}));
    sub->add_option("--L", o.L, "truncation for F series")->check(CLI::Range(8L, 100000L));
    sub->add_option("--tau", o.tau, "point in the upper half-plane");
    sub->add_option("--grid", o.grid, "grid: sigma1=a:b:h;t1=...;sigma2=...;t2=...");
    sub->add_option("--hyperplane", o.hyperplane, "set s2 = H - s1");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a function");
  eval->add_option("function", o.id, "function id")->required();
  eval->add_option("--s", o.s, "argument for one-variable functions");
  eval->add_option("--a", o.a, "Psi parameter a");
  eval->add_option("--c", o.c, "Psi parameter c");
  eval->add_option("--x", o.x, "Psi argument x");
  eval->add_flag("--continue", o.continuation, "continue F series beyond absolute convergence");
  add_common(eval);

  auto* verify_cmd = app.add_subcommand("verify", "check a functional equation");
  verify_cmd->add_option("theorem", o.id, "riemann, hurwitz, F-relation, T1..T6, oracle, modular, or all with --suite");
  verify_cmd->add_option("--suite", o.suite, "bundled suite name, a suite file, or all");
  verify_cmd->add_option("--tol", o.tol, "tolerance")->check(CLI::Range(1e-14, 1e-2));
  verify_cmd->add_option("--k", o.k, "put points on s1 + s2 = 2k+1 (overrides --hyperplane)");
  verify_cmd->add_flag("--sigma-form", o.sigma_form, "F-relation with divisor coefficients sigma_c(k; alpha, beta)");
  add_common(verify_cmd);

  auto* gen = app.add_subcommand("gen-coeffs", "write coefficient tables");
  gen->add_option("kind", o.id, "tau, character or fourier")->required();
  gen->add_option("--max", o.max, "number of tau values");
  gen->add_option("--mod", o.mod, "character modulus");
  gen->add_option("--index", o.index, "character index (0 is principal)");
  gen->add_option("--seq", o.table, "table for fourier, e.g. 1,0,-1,0");
  gen->add_option("--out", o.out, "output file (default stdout)");

  std::vector<std::string> rev(words.rbegin(), words.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (*eval) return cmd_eval(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*gen) return cmd_gen_coeffs(o);
  } catch (const Refusal& r) {
    std::cerr << "refused: " << r.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace dzeta::cli
