#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "adsbh/ads2.hpp"
#include "adsbh/btz_sl2.hpp"
#include "adsbh/causal.hpp"
#include "adsbh/sampling.hpp"
#include "adsbh/verify.hpp"

namespace adsbh::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoBracket : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScanConfig {
  int dim = 3;
  std::string point;
  int samples = 512;
  bool samples_from_config = false;
  std::uint64_t seed = 1;
  double tol_rank = 1e-9;
  double tol_sing = 1e-9;
  int bisect_steps = 30;
  std::string format = "json";
  std::string out;
  // horizon / scan / btz
  std::string sweep = "kcircle";
  int count = 0;
  std::string inside, outside;
  double a = 1.0;
  std::string suite = "all";
};

void validate(const ScanConfig& c) {
  if (c.dim < 2) throw InputError("--dim must be at least 2");
  if (c.samples < 2) throw InputError("--samples must be at least 2");
  if (c.count < 0) throw InputError("--count must be non-negative");
  if (c.bisect_steps < 1) throw InputError("--bisect-steps must be positive");
  if (!(c.tol_rank > 0) || !(c.tol_sing > 0)) throw InputError("tolerances must be positive");
  if (c.format != "json" && c.format != "csv") throw InputError("--format must be json or csv");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// key=value lines, '#' comments; keys are the long flag names.
void load_config(const std::string& path, ScanConfig& c) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    try {
      if (k == "dim") c.dim = std::stoi(v);
      else if (k == "point") c.point = v;
      else if (k == "samples") c.samples = std::stoi(v), c.samples_from_config = true;
      else if (k == "seed") c.seed = std::stoull(v);
      else if (k == "tol-rank") c.tol_rank = std::stod(v);
      else if (k == "tol-sing") c.tol_sing = std::stod(v);
      else if (k == "bisect-steps") c.bisect_steps = std::stoi(v);
      else if (k == "format") c.format = v;
      else if (k == "out") c.out = v;
      else if (k == "sweep") c.sweep = v;
      else if (k == "count") c.count = std::stoi(v);
      else if (k == "inside") c.inside = v;
      else if (k == "outside") c.outside = v;
      else if (k == "a") c.a = std::stod(v);
      else if (k == "suite") c.suite = v;
      else throw InputError(path + ":" + std::to_string(lineno) + ": unknown key '" + k + "'");
    } catch (const std::logic_error&) {
      throw InputError(path + ":" + std::to_string(lineno) + ": bad value for '" + k + "'");
    }
  }
}

std::optional<std::string> find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return std::nullopt;
}

Eigen::VectorXd parse_vector(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(trim(item), &used));
      if (used != trim(item).size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("cannot parse coordinate '" + item + "'");
    }
  }
  return Eigen::Map<Eigen::VectorXd>(v.data(), Eigen::Index(v.size()));
}

// Points slightly off the hyperboloid are rescaled radially; the correction
// is logged.  Beyond 1e-2 the input is rejected.
AdSPoint parse_point(const std::string& s, int dim, std::ostream& err) {
  if (s.empty()) throw InputError("a point is required (--point u,t,x,...)");
  const Eigen::VectorXd c = parse_vector(s);
  if (c.size() != dim + 1)
    throw InputError("point has " + std::to_string(c.size()) + " coordinates, expected " +
                     std::to_string(dim + 1) + " for --dim " + std::to_string(dim));
  const double r = hyperboloid_residual(AdSPoint(c));
  if (!(std::abs(r) <= 1e-2)) throw InputError("point is off the hyperboloid (residual " + std::to_string(r) + ")");
  if (r == 0.0) return AdSPoint(c);
  const AdSPoint p = normalized(c);
  std::ostringstream os;
  os.precision(3);
  os << "note: point rescaled onto the hyperboloid (residual " << std::scientific << r << ")\n";
  err << os.str();
  return p;
}

json to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void check_emitted(const AdSPoint& p) {
  if (std::abs(hyperboloid_residual(p)) > 1e-8 * std::max(1.0, p.coords.squaredNorm()))
    throw std::logic_error("emitted point fails the hyperboloid check");
}

class Output {
 public:
  Output(const ScanConfig& c, std::ostream& out) : out_(out) {
    if (!c.out.empty()) {
      file_.open(c.out);
      if (!file_) throw InputError("cannot open " + c.out + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : out_; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

ClassifyOptions classify_options(const ScanConfig& c) { return {c.samples, c.seed, c.tol_sing, 1e-6}; }

json classify_record(const AdSPoint& p, const ScanConfig& c) {
  const CausalReport r = classify(p, classify_options(c));
  check_emitted(p);
  json j;
  j["point"] = to_json(p.coords);
  j["class"] = to_string(r.cls);
  j["singularity_branch"] = to_string(r.branch);
  j["witness"] = r.witness ? to_json(r.witness->w) : json(nullptr);
  j["witness_robust"] = r.witness_robust;
  j["j1_norm_sq"] = j1_norm_sq(p);
  j["orbit_open_AN"] = orbit_is_open(p, Subgroup::AN, c.tol_rank);
  j["orbit_open_ANbar"] = orbit_is_open(p, Subgroup::ANbar, c.tol_rank);
  if (r.cls != CausalClass::Singular) {
    j["future_margin"] = r.future_margin;
    j["past_margin"] = r.past_margin;
  }
  return j;
}

const char* kClassifyCsvHeader = "dim,coords,class,singularity_branch,j1_norm_sq,witness";

std::string classify_csv(const json& j, int dim) {
  std::ostringstream os;
  os << dim << ",\"";
  bool first = true;
  for (const auto& x : j["point"]) os << (first ? "" : ";") << num(x.get<double>()), first = false;
  os << "\"," << j["class"].get<std::string>() << "," << j["singularity_branch"].get<std::string>() << ","
     << num(j["j1_norm_sq"].get<double>()) << ",\"";
  if (!j["witness"].is_null()) {
    first = true;
    for (const auto& x : j["witness"]) os << (first ? "" : ";") << num(x.get<double>()), first = false;
  }
  os << "\"";
  return os.str();
}

int cmd_classify(const ScanConfig& c, std::ostream& out, std::ostream& err) {
  if (c.dim < 3) throw InputError("classification needs --dim >= 3");
  const AdSPoint p = parse_point(c.point, c.dim, err);
  json j = classify_record(p, c);
  Output o(c, out);
  if (c.format == "csv") {
    o.stream() << kClassifyCsvHeader << "\n" << classify_csv(j, c.dim) << "\n";
  } else {
    json r;
    r["schema"] = 1;
    r["command"] = "classify";
    r["dim"] = c.dim;
    r["samples"] = c.samples;
    r["seed"] = c.seed;
    r.update(j);
    o.stream() << r.dump(2) << "\n";
  }
  return kOk;
}

int cmd_scan(const ScanConfig& c, std::ostream& out, std::ostream&) {
  if (c.dim < 3) throw InputError("scan needs --dim >= 3");
  Rng rng(c.seed);
  const int n = c.count > 0 ? c.count : 100;
  std::vector<json> rows;
  std::map<std::string, int> tally;
  for (int i = 0; i < n; ++i) {
    rows.push_back(classify_record(random_point(c.dim, rng), c));
    ++tally[rows.back()["class"].get<std::string>()];
  }
  Output o(c, out);
  if (c.format == "csv") {
    o.stream() << kClassifyCsvHeader << "\n";
    for (const auto& r : rows) o.stream() << classify_csv(r, c.dim) << "\n";
  } else {
    json r;
    r["schema"] = 1;
    r["command"] = "scan";
    r["dim"] = c.dim;
    r["count"] = n;
    r["seed"] = c.seed;
    r["counts"] = tally;
    r["points"] = rows;
    o.stream() << r.dump(2) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct HorizonRow {
  AdSPoint point;
  double bracket = 0;
  std::string interior;
};

AdSPoint k_point(int l, double mu) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(l + 1);
  v(kU) = std::cos(mu);
  v(kT) = std::sin(mu);
  return AdSPoint(v);
}

bool is_interior(CausalClass k) { return k == CausalClass::InteriorFuture || k == CausalClass::InteriorPast; }

HorizonRow bisect_row(const AdSPoint& in, const AdSPoint& outp, const ScanConfig& c, const Curve& path = {}) {
  const HorizonBracket b = horizon_bracket(in, outp, {c.bisect_steps, classify_options(c)}, path);
  return {b.midpoint, (b.outside.coords - b.inside.coords).cwiseAbs().maxCoeff(), to_string(b.interior_kind)};
}

std::vector<HorizonRow> sweep_kcircle(const ScanConfig& c) {
  const int n = c.count > 0 ? c.count : 64;
  std::vector<double> mu(n);
  std::vector<CausalClass> cls(n);
  for (int i = 0; i < n; ++i) {
    mu[i] = std::numbers::pi * (i + 0.5) / n;
    cls[i] = classify(k_point(c.dim, mu[i]), classify_options(c)).cls;
  }
  std::vector<HorizonRow> rows;
  for (int i = 0; i + 1 < n; ++i) {
    const bool a = cls[i] == CausalClass::InteriorFuture, b = cls[i + 1] == CausalClass::InteriorFuture;
    if (a == b || cls[i] == CausalClass::Singular || cls[i + 1] == CausalClass::Singular) continue;
    const double m_in = a ? mu[i] : mu[i + 1], m_out = a ? mu[i + 1] : mu[i];
    const int l = c.dim;
    rows.push_back(bisect_row(k_point(l, m_in), k_point(l, m_out), c,
                              [=](double s) { return k_point(l, m_in + s * (m_out - m_in)); }));
  }
  return rows;
}

// AdS_3 paths crossing u^2 = x^2 transversally at fixed u + x, away from t^2 = y^2.
std::vector<HorizonRow> sweep_planar(const ScanConfig& c) {
  if (c.dim != 3) throw InputError("the planar sweep is defined for --dim 3");
  const int n = c.count > 0 ? c.count : 16;
  Rng rng(c.seed);
  std::vector<HorizonRow> rows;
  for (int i = 0; i < n; ++i) {
    const double P = std::exp(rng.uniform(-1.0, 1.0));
    const double b = rng.uniform(-1.0, 1.0);
    const double sg = i % 2 ? -1.0 : 1.0;
    auto at = [=](double s) {
      const double Q = (0.5 - s) / P;  // PQ runs from 1/2 to -1/2
      const double T = 1.0 - P * Q;
      Eigen::VectorXd v(4);
      v << 0.5 * (P + Q), sg * std::sqrt(T) * std::cosh(b), 0.5 * (P - Q), sg * std::sqrt(T) * std::sinh(b);
      return AdSPoint(v);
    };
    rows.push_back(bisect_row(at(0.0), at(1.0), c, at));
  }
  return rows;
}

std::vector<HorizonRow> sweep_random(const ScanConfig& c) {
  const int n = c.count > 0 ? c.count : 16;
  Rng rng(c.seed);
  std::vector<HorizonRow> rows;
  std::vector<AdSPoint> in, outp;
  const ClassifyOptions opts = classify_options(c);
  for (int tries = 0; int(rows.size()) < n && tries < 200 * n; ++tries) {
    const AdSPoint p = random_point(c.dim, rng, 0.7);
    const CausalClass k = classify(p, opts).cls;
    if (k == CausalClass::InteriorFuture) in.push_back(p);
    else if (k == CausalClass::Exterior) outp.push_back(p);
    else continue;
    if (in.empty() || outp.empty()) continue;
    const AdSPoint a = in.back(), b = outp.back();
    in.pop_back();
    outp.pop_back();
    try {
      HorizonRow r = bisect_row(a, b, c);
      // Brackets that close onto the singular set are not horizon points.
      if (classify_singularity(r.point, 1e-6) != SingularityClass::Generic) continue;
      rows.push_back(r);
    } catch (const DomainError&) {
      // chord leaves AdS
    } catch (const BisectionError&) {
    }
  }
  return rows;
}

const char* kHorizonCsvHelp =
    "CSV columns: dim, coordinates (u,t,x,...), interior kind, bracket width, "
    "|u^2-x^2| (dim 3 only), cos mu + cos mu', tangency residual";

int cmd_horizon(const ScanConfig& c, std::ostream& out, std::ostream& err) {
  if (c.dim < 3) throw InputError("horizon search needs --dim >= 3");
  std::vector<HorizonRow> rows;
  if (!c.inside.empty() || !c.outside.empty()) {
    const AdSPoint a = parse_point(c.inside, c.dim, err), b = parse_point(c.outside, c.dim, err);
    try {
      rows.push_back(bisect_row(a, b, c));
    } catch (const BisectionError& e) {
      throw NoBracket(e.what());
    } catch (const DomainError& e) {
      throw NoBracket(e.what());
    }
  } else if (c.sweep == "kcircle") {
    rows = sweep_kcircle(c);
  } else if (c.sweep == "planar") {
    rows = sweep_planar(c);
  } else if (c.sweep == "random") {
    rows = sweep_random(c);
  } else {
    throw InputError("--sweep must be kcircle, planar or random");
  }
  if (rows.empty()) throw NoBracket("no interior/exterior bracket found");

  Output o(c, out);
  json arr = json::array();
  std::ostringstream csv;
  csv << "dim";
  for (int i = 0; i <= c.dim; ++i) csv << ",c" << i;
  csv << ",interior,bracket,u2_minus_x2,cos_residual,tangency_residual\n";
  for (const auto& r : rows) {
    check_emitted(r.point);
    const HorizonAngles h = horizon_angles(r.point);
    const double ux = r.point.u() * r.point.u() - r.point.x() * r.point.x();
    json j;
    j["point"] = to_json(r.point.coords);
    j["class"] = "Horizon";
    j["interior"] = r.interior;
    j["bracket"] = r.bracket;
    j["u2_minus_x2"] = c.dim == 3 ? json(std::abs(ux)) : json(nullptr);
    j["cos_residual"] = h.cos_residual;
    j["tangency_residual"] = h.tangency_residual;
    arr.push_back(j);
    csv << c.dim;
    for (Eigen::Index i = 0; i < r.point.coords.size(); ++i) csv << "," << num(r.point.coords(i));
    csv << "," << r.interior << "," << num(r.bracket) << "," << (c.dim == 3 ? num(std::abs(ux)) : "") << ","
        << num(h.cos_residual) << "," << num(h.tangency_residual) << "\n";
  }
  if (c.format == "csv") {
    o.stream() << csv.str();
  } else {
    json r;
    r["schema"] = 1;
    r["command"] = "horizon";
    r["dim"] = c.dim;
    r["sweep"] = c.inside.empty() ? c.sweep : "bracket";
    r["seed"] = c.seed;
    r["points"] = arr;
    o.stream() << r.dump(2) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const ScanConfig& c, std::ostream& out, std::ostream&) {
  Suite s;
  try {
    s = parse_suite(c.suite);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  const auto reports = run_verification(s, c.seed);
  Output o(c, out);
  int failed = 0;
  const CheckResult* first = nullptr;
  json suites = json::array();
  for (const auto& r : reports) {
    failed += r.failed();
    json checks = json::array();
    for (const auto& k : r.checks) {
      if (!k.passed && !first) first = &k;
      checks.push_back({{"name", k.name}, {"passed", k.passed}, {"cases", k.cases}});
    }
    suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"failed", r.failed()}, {"checks", checks}});
  }
  if (c.format == "csv") {
    o.stream() << "suite,check,passed,cases\n";
    for (const auto& r : reports)
      for (const auto& k : r.checks) o.stream() << r.suite << ",\"" << k.name << "\"," << k.passed << "," << k.cases << "\n";
  } else {
    json r;
    r["schema"] = 1;
    r["command"] = "verify";
    r["suite"] = c.suite;
    r["seed"] = c.seed;
    r["suites"] = suites;
    r["status"] = failed ? "fail" : "pass";
    if (first) r["first_counterexample"] = {{"check", first->name}, {"case", first->counterexample}};
    o.stream() << r.dump(2) << "\n";
  }
  return failed ? kVerifyFailed : kOk;
}

int cmd_ads2(const ScanConfig& c, std::ostream& out, std::ostream&) {
  const NoHorizonReport rep = ads2_no_horizon(c.count, c.seed);
  Output o(c, out);
  if (c.format == "csv") {
    o.stream() << "samples,escapes,status\n" << rep.samples << "," << rep.escapes << "," << (rep.ok() ? "ok" : "escape") << "\n";
  } else {
    json r;
    r["schema"] = 1;
    r["command"] = "ads2";
    r["seed"] = c.seed;
    r["samples"] = rep.samples;
    r["escapes"] = rep.escapes;
    r["status"] = rep.ok() ? "ok" : "escape";
    r["witnesses"] = rep.witnesses;
    o.stream() << r.dump(2) << "\n";
  }
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_btz(const ScanConfig& c, std::ostream& out, std::ostream&) {
  const int n = c.count > 0 ? c.count : 21;
  const BHTZParams P(c.a);
  Output o(c, out);
  json arr = json::array();
  std::ostringstream csv;
  csv << "rho,branch,tau,u,t,x,y,u2_minus_x2,xi_norm_sq\n";
  for (int i = 0; i < n; ++i) {
    const double rho = n == 1 ? 0.0 : -3.0 + 6.0 * i / (n - 1);
    for (int br : {1, -1}) {
      const double tau = horizon_closed_form(rho, br);
      const AdSPoint p = btz_horizon_point(rho, br);
      check_emitted(p);
      const double ux = p.u() * p.u() - p.x() * p.x();
      const double xi = xi_norm_sq(P, embed(p));
      arr.push_back({{"rho", rho}, {"branch", br}, {"tau", tau}, {"point", to_json(p.coords)},
                     {"u2_minus_x2", ux}, {"xi_norm_sq", xi}});
      csv << num(rho) << "," << br << "," << num(tau);
      for (int k = 0; k < 4; ++k) csv << "," << num(p.coords(k));
      csv << "," << num(ux) << "," << num(xi) << "\n";
    }
  }
  if (c.format == "csv") {
    o.stream() << csv.str();
  } else {
    json r;
    r["schema"] = 1;
    r["command"] = "btz";
    r["a"] = c.a;
    r["points"] = arr;
    o.stream() << r.dump(2) << "\n";
  }
  return kOk;
}

int cmd_dump_algebra(const ScanConfig& c, std::ostream& out, std::ostream&) {
  if (c.dim < 3) throw InputError("dump-algebra needs --dim >= 3");
  const auto g = generators<int>(c.dim);
  json gens = json::object();
  for (const auto& [name, X] : g.named()) {
    json m = json::array();
    for (int i = 0; i < X.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < X.size(); ++j) row.push_back(X.matrix(i, j));
      m.push_back(row);
    }
    json entry{{"matrix", m}};
    if (const auto lab = root_label(LieElement<double>(X.matrix.cast<double>())))
      entry["root_label"] = {lab->a, lab->b};
    gens[name] = entry;
  }
  Output o(c, out);
  json r;
  r["schema"] = 1;
  r["command"] = "dump-algebra";
  r["dim"] = c.dim;
  r["coordinates"] = "u,t,x,y,x4,...";
  r["generators"] = gens;
  o.stream() << r.dump(2) << "\n";
  return kOk;
}

void add_common(CLI::App* app, ScanConfig& c) {
  app->add_option("--dim", c.dim, "AdS dimension l (matrices are (l+1)x(l+1))");
  app->add_option("--samples", c.samples, "null directions sampled per point");
  app->add_option("--seed", c.seed, "seed for directions and random points");
  app->add_option("--tol-rank", c.tol_rank, "relative singular-value cutoff for orbit rank");
  app->add_option("--tol-sing", c.tol_sing, "|t -+ y| tolerance for the singular set");
  app->add_option("--bisect-steps", c.bisect_steps, "bisection halvings");
  app->add_option("--format", c.format, "json or csv");
  app->add_option("--out", c.out, "write output to this file");
  app->add_option("--config", "key=value file with the same keys; flags override it");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ScanConfig c;
  try {
    if (auto path = find_config_path(argc, argv)) load_config(*path, c);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  CLI::App app{"Causal structure of AdS black holes from closed Iwasawa orbits"};
  app.require_subcommand(1);
  add_common(&app, c);

  auto* classify_cmd = app.add_subcommand("classify", "classify one point");
  add_common(classify_cmd, c);
  classify_cmd->add_option("--point", c.point, "embedding coordinates u,t,x,y,...");

  auto* scan_cmd = app.add_subcommand("scan", "classify random points");
  add_common(scan_cmd, c);
  scan_cmd->add_option("--count", c.count, "number of points (default 100)");

  auto* horizon_cmd = app.add_subcommand("horizon", "locate horizon points by bisection");
  add_common(horizon_cmd, c);
  horizon_cmd->add_option("--sweep", c.sweep, "kcircle, planar (dim 3) or random");
  horizon_cmd->add_option("--count", c.count, "grid cells or paths");
  horizon_cmd->add_option("--inside", c.inside, "interior endpoint u,t,x,...");
  horizon_cmd->add_option("--outside", c.outside, "outer endpoint u,t,x,...");
  horizon_cmd->footer(kHorizonCsvHelp);

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  add_common(verify_cmd, c);
  verify_cmd->add_option("suite", c.suite, "algebra, orbits, causal, btz, ads2 or all");

  // Sample count for ads2 defaults to 1000 unless the config file sets one.
  int ads2_samples = c.samples_from_config ? c.samples : 1000;
  auto* ads2_cmd = app.add_subcommand("ads2", "AdS_2 no-horizon check");
  ads2_cmd->add_option("--samples", ads2_samples, "physical points sampled");
  ads2_cmd->add_option("--seed", c.seed, "sampling seed");
  ads2_cmd->add_option("--format", c.format, "json or csv");
  ads2_cmd->add_option("--out", c.out, "write output to this file");
  ads2_cmd->add_option("--config", "key=value file with the same keys; flags override it");

  auto* btz_cmd = app.add_subcommand("btz", "closed-form BTZ horizon points");
  add_common(btz_cmd, c);
  btz_cmd->add_option("--count", c.count, "rho values in [-3, 3]");
  btz_cmd->add_option("-a", c.a, "identification parameter a > 0");

  auto* dump_cmd = app.add_subcommand("dump-algebra", "generator matrices as JSON");
  add_common(dump_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    validate(c);
    if (*ads2_cmd) {
      if (ads2_samples < 1) throw InputError("--samples must be positive");
      c.count = ads2_samples;
    }
    if (*classify_cmd) return cmd_classify(c, out, err);
    if (*scan_cmd) return cmd_scan(c, out, err);
    if (*horizon_cmd) return cmd_horizon(c, out, err);
    if (*verify_cmd) return cmd_verify(c, out, err);
    if (*ads2_cmd) return cmd_ads2(c, out, err);
    if (*btz_cmd) return cmd_btz(c, out, err);
    if (*dump_cmd) return cmd_dump_algebra(c, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const NoBracket& e) {
    err << "error: " << e.what() << "\n";
    return kNoBracket;
  }
  return kBadInput;
}

}  // namespace adsbh::cli
