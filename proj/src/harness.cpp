#include "qseries/harness.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <sstream>

#include <json.hpp>

namespace qseries {

namespace mp = boost::multiprecision;
using ojson = nlohmann::ordered_json;

namespace {

std::string short_decimal(const Real& x) { return to_decimal(x, 6); }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  if (identities.empty()) throw Error(ErrorKind::Config, "no identities requested");
  if (pointsPerIdentity < 1) throw Error(ErrorKind::Config, "points must be >= 1");
  if (!(tolerance > 0)) throw Error(ErrorKind::Config, "tolerance must be > 0");
  if (digits < 20) throw Error(ErrorKind::Config, "digits must be >= 20");
  if (explicitPoints && explicitPoints->empty())
    throw Error(ErrorKind::Config, "explicit point list is empty");
}

bool VerificationReport::all_pass() const {
  for (const auto& r : results)
    if (!r.aggregate.pass) return false;
  return true;
}

int exit_code(const VerificationReport& report) { return report.all_pass() ? 0 : 1; }

std::vector<std::string> resolve_ids(const Registry& registry, const RunConfig& config) {
  std::vector<std::string> ids;
  for (const auto& id : config.identities) {
    if (id == "all") {
      for (const auto& e : registry.entries()) ids.push_back(e.id);
    } else {
      registry.at(id);
      ids.push_back(id);
    }
  }
  return ids;
}

Aggregate summarize(const std::vector<PointOutcome>& points, double tolerance) {
  Aggregate agg;
  agg.total = static_cast<int>(points.size());
  agg.tolerance = tolerance;
  std::vector<Real> ratios;
  for (const auto& p : points) {
    if (p.pass()) ++agg.passCount;
    if (!p.result) continue;
    if (!agg.worstRelErr || p.result->relErr > *agg.worstRelErr) agg.worstRelErr = p.result->relErr;
    if (p.result->rhs != 0) ratios.push_back(p.result->lhs / p.result->rhs);
  }
  agg.pass = agg.total > 0 && agg.passCount == agg.total;
  if (!ratios.empty()) {
    Real mean = 0;
    for (const auto& r : ratios) mean += r;
    mean /= ratios.size();
    Real var = 0;
    for (const auto& r : ratios) var += (r - mean) * (r - mean);
    var /= ratios.size();
    agg.ratioMean = mean;
    agg.ratioRelStddev = mean != 0 ? Real(mp::sqrt(var) / mp::abs(mean)) : Real(mp::sqrt(var));
    // A constant factor is only suspected when every point fails and the
    // ratio is steady across at least two of them.
    if (agg.passCount == 0 && ratios.size() == points.size() && ratios.size() >= 2 &&
        *agg.ratioRelStddev < Real("1e-6"))
      agg.suspectedConstantOffset = mean;
  }
  return agg;
}

VerificationReport run(const RunConfig& config, const Registry& registry) {
  config.validate();
  VerificationReport report;
  report.config = config;
  const std::vector<std::string> ids = resolve_ids(registry, config);
  const PrecisionCtx ctx = PrecisionCtx::for_digits(config.digits);
  PrecisionScope scope(ctx);

  // Evaluation is serial: the MPFR default precision is process-wide.
  for (const auto& id : ids) {
    const IdentityEntry& entry = registry.at(id);
    IdentityReport ir;
    ir.id = id;
    ir.paperRef = entry.paperRef;
    const double tol = std::max(config.tolerance, entry.minTolerance);
    std::vector<QPoint> points;
    std::string samplingError;
    if (config.explicitPoints) {
      points = *config.explicitPoints;
    } else {
      try {
        points = sample_domain(registry, id, config.pointsPerIdentity, config.seed);
      } catch (const Error& e) {
        samplingError = e.what();
      }
    }
    if (!samplingError.empty()) {
      PointOutcome failed;
      failed.error = std::string(to_string(ErrorKind::SamplingFailure)) + ": " + samplingError;
      ir.points.push_back(std::move(failed));
    }
    for (const auto& p : points) {
      PointOutcome out;
      out.point = p;
      try {
        out.result = eval_identity(registry, id, p, Real(tol), ctx);
      } catch (const Error& e) {
        out.error = std::string(to_string(e.kind())) + ": " + e.what();
      } catch (const std::exception& e) {
        out.error = e.what();
      }
      ir.points.push_back(std::move(out));
    }
    ir.aggregate = summarize(ir.points, tol);
    report.results.push_back(std::move(ir));
  }
  return report;
}

VerificationReport run(const RunConfig& config) { return run(config, full_registry()); }

std::string to_json(const VerificationReport& report) {
  const RunConfig& c = report.config;
  const int digits = c.digits;
  auto params = [&](const QPoint& p) {
    ojson o = ojson::object();
    for (const auto& [name, value] : p.params()) o[name] = to_decimal(value, digits);
    return o;
  };

  ojson config;
  config["identities"] = c.identities;
  config["pointsPerIdentity"] = c.pointsPerIdentity;
  config["seed"] = std::to_string(c.seed);
  config["digits"] = c.digits;
  config["tolerance"] = format_double(c.tolerance);
  if (c.explicitPoints) {
    ojson pts = ojson::array();
    for (const auto& p : *c.explicitPoints) pts.push_back(params(p));
    config["explicitPoints"] = pts;
  } else {
    config["explicitPoints"] = nullptr;
  }
  config["reportFormat"] = c.reportFormat == ReportFormat::Json ? "json" : "text";

  ojson results = ojson::array();
  for (const auto& r : report.results) {
    ojson points = ojson::array();
    for (const auto& p : r.points) {
      ojson o;
      o["params"] = params(p.point);
      if (p.result) {
        o["lhs"] = to_decimal(p.result->lhs, digits);
        o["rhs"] = to_decimal(p.result->rhs, digits);
        o["absErr"] = short_decimal(p.result->absErr);
        o["relErr"] = short_decimal(p.result->relErr);
        o["pass"] = p.result->pass;
        o["termsUsed"] = p.result->termsUsed;
      } else {
        o["error"] = p.error;
        o["pass"] = false;
      }
      points.push_back(std::move(o));
    }
    const Aggregate& a = r.aggregate;
    ojson agg;
    agg["total"] = a.total;
    agg["passCount"] = a.passCount;
    agg["pass"] = a.pass;
    agg["tolerance"] = format_double(a.tolerance);
    agg["worstRelErr"] = a.worstRelErr ? ojson(short_decimal(*a.worstRelErr)) : ojson(nullptr);
    agg["ratioMean"] = a.ratioMean ? ojson(to_decimal(*a.ratioMean, 12)) : ojson(nullptr);
    agg["ratioRelStddev"] = a.ratioRelStddev ? ojson(short_decimal(*a.ratioRelStddev)) : ojson(nullptr);
    if (a.suspectedConstantOffset)
      agg["suspectedConstantOffset"] = to_decimal(*a.suspectedConstantOffset, 12);

    ojson entry;
    entry["id"] = r.id;
    entry["paperRef"] = r.paperRef;
    entry["points"] = std::move(points);
    entry["aggregate"] = std::move(agg);
    results.push_back(std::move(entry));
  }

  ojson root;
  root["version"] = report.toolVersion;
  root["config"] = std::move(config);
  root["results"] = std::move(results);
  return root.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.toolVersion << "  digits=" << report.config.digits
     << "  seed=" << report.config.seed << "\n";
  for (const auto& r : report.results) {
    const Aggregate& a = r.aggregate;
    os << (a.pass ? "PASS " : "FAIL ") << r.id << "  " << a.passCount << "/" << a.total
       << "  tol=" << format_double(a.tolerance);
    if (a.worstRelErr) os << "  worst relErr=" << short_decimal(*a.worstRelErr);
    if (!a.pass && a.ratioMean)
      os << "  lhs/rhs mean=" << to_decimal(*a.ratioMean, 12)
         << " relStddev=" << short_decimal(*a.ratioRelStddev);
    if (a.suspectedConstantOffset)
      os << "  suspectedConstantOffset=" << to_decimal(*a.suspectedConstantOffset, 12);
    os << "\n";
    for (const auto& p : r.points) {
      os << "    ";
      bool first = true;
      for (const auto& [name, value] : p.point.params()) {
        os << (first ? "" : " ") << name << "=" << to_decimal(value, 8);
        first = false;
      }
      if (p.result)
        os << "  relErr=" << short_decimal(p.result->relErr) << (p.result->pass ? "  ok" : "  FAIL");
      else
        os << "  ERROR " << p.error;
      os << "\n";
    }
  }
  return os.str();
}

int default_digits() {
  const char* env = std::getenv("QSERIES_DIGITS");
  if (!env) return 40;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 20 || v > 10000) return 40;
  return static_cast<int>(v);
}

QPoint make_point(const std::optional<std::string>& q,
                  const std::vector<std::pair<std::string, std::string>>& assignments, int digits) {
  PrecisionScope scope(PrecisionCtx::for_digits(digits));
  QPoint p;
  std::optional<Real> qv;
  if (q) {
    ParamExpr e = parse_param(*q);
    if (e.uses_q()) throw Error(ErrorKind::Config, "q must be a literal");
    qv = e.eval(Real(0));
    p.set("q", *qv);
  }
  for (const auto& [name, text] : assignments) {
    if (name.empty()) throw Error(ErrorKind::Config, "empty parameter name");
    if (name == "q") throw Error(ErrorKind::Config, "set q with --q");
    ParamExpr e = parse_param(text);
    if (e.uses_q() && !qv)
      throw Error(ErrorKind::Config, "parameter '" + name + "' uses q but no q was given");
    p.set(name, e.eval(qv ? *qv : Real(0)));
  }
  p.validate();
  return p;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open config file " + path);
  RunConfig c;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("identities")) {
      const auto& ids = j["identities"];
      if (ids.is_string())
        c.identities = {ids.get<std::string>()};
      else
        c.identities = ids.get<std::vector<std::string>>();
    }
    if (j.contains("pointsPerIdentity")) c.pointsPerIdentity = j["pointsPerIdentity"].get<int>();
    if (j.contains("seed")) {
      // Reports write the seed as a string so 64-bit values survive JSON readers.
      const auto& sd = j["seed"];
      c.seed = sd.is_string() ? std::stoull(sd.get<std::string>()) : sd.get<std::uint64_t>();
    }
    c.digits = j.contains("digits") ? j["digits"].get<int>() : default_digits();
    if (j.contains("tolerance")) {
      const auto& t = j["tolerance"];
      c.tolerance = t.is_string() ? std::stod(t.get<std::string>()) : t.get<double>();
    }
    if (j.contains("reportFormat")) {
      auto f = j["reportFormat"].get<std::string>();
      if (f != "json" && f != "text") throw Error(ErrorKind::Config, "reportFormat must be json or text");
      c.reportFormat = f == "json" ? ReportFormat::Json : ReportFormat::Text;
    }
    if (j.contains("explicitPoints") && !j["explicitPoints"].is_null()) {
      std::vector<QPoint> pts;
      for (const auto& obj : j["explicitPoints"]) {
        std::optional<std::string> q;
        std::vector<std::pair<std::string, std::string>> sets;
        for (const auto& [name, v] : obj.items()) {
          std::string text = v.is_string() ? v.get<std::string>() : v.dump();
          if (name == "q")
            q = text;
          else
            sets.emplace_back(name, text);
        }
        pts.push_back(make_point(q, sets, c.digits));
      }
      c.explicitPoints = std::move(pts);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("bad config file: ") + e.what());
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Config, "bad number in config file");
  }
  c.validate();
  return c;
}

}  // namespace qseries
