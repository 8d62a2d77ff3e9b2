// qseries: list, verify and evaluate the registered identities.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qseries/harness.hpp"

using namespace qseries;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const char* kGrammar =
    "parameter expressions (--set name=EXPR):\n"
    "  expr     := [\"-\"] number | [\"-\"] [number \"*\"] \"q\" [\"^\" rational]\n"
    "  rational := integer | integer \"/\" positive-integer | decimal\n"
    "  examples: 0.35  -q^3  -q^-5/3  2*q^0.5\n";

struct PointFlags {
  std::optional<std::string> q;
  std::vector<std::string> sets;

  bool given() const { return q || !sets.empty(); }

  QPoint build(int digits) const {
    std::vector<std::pair<std::string, std::string>> assignments;
    for (const auto& s : sets) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::Config, "--set expects name=EXPR, got '" + s + "'");
      assignments.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    return make_point(q, assignments, digits);
  }
};

void add_point_flags(CLI::App* cmd, PointFlags& flags) {
  cmd->add_option("--q", flags.q, "nome q, a decimal in (0, 1)");
  cmd->add_option("--set", flags.sets, "parameter assignment name=EXPR (repeatable)");
}

int usage_error(const std::string& what) {
  std::cerr << "error: " << what << "\n" << kGrammar;
  return kExitUsage;
}

int cmd_list() {
  for (const auto& e : full_registry().entries()) {
    std::cout << e.id << "\t" << e.paperRef << "\n";
    std::cout << "    params:";
    for (const auto& p : e.params) std::cout << " " << p;
    if (e.params.empty()) std::cout << " (none)";
    std::cout << "\n    domain:";
    for (const auto& c : e.domain.constraints()) std::cout << " [" << c.text << "]";
    if (e.domain.constraints().empty()) std::cout << " (unconstrained)";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-series evaluation and identity verification"};
  app.require_subcommand(1);

  app.add_subcommand("list", "print identity ids, domains and references");

  RunConfig config;
  config.digits = default_digits();
  std::vector<std::string> identities;
  std::string report = "json";
  std::string out;
  std::string configPath;
  std::optional<int> digits;
  std::optional<double> tol;
  std::optional<int> points;
  std::optional<std::uint64_t> seed;
  PointFlags verifyPoint;
  auto* verify = app.add_subcommand("verify", "verify identities at sampled or explicit points");
  verify->add_option("--identity", identities, "identity id or 'all' (repeatable)");
  verify->add_option("--points", points, "points per identity")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--digits", digits, "decimal digits (default $QSERIES_DIGITS or 40)");
  verify->add_option("--tol", tol, "relative tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--report", report, "report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "write the report to PATH");
  verify->add_option("--config", configPath, "JSON config file (flags override it)");
  add_point_flags(verify, verifyPoint);

  std::string evalId;
  std::string side = "lhs";
  std::optional<int> evalDigits;
  PointFlags evalPoint;
  auto* eval = app.add_subcommand("eval", "evaluate one side of an identity at a point");
  eval->add_option("--identity", evalId, "identity id")->required();
  eval->add_option("--side", side, "lhs or rhs")->check(CLI::IsMember({"lhs", "rhs"}));
  eval->add_option("--digits", evalDigits, "decimal digits (default $QSERIES_DIGITS or 40)");
  add_point_flags(eval, evalPoint);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code != 0) std::cerr << kGrammar;
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list();

    if (app.got_subcommand("verify")) {
      if (!configPath.empty()) config = load_config(configPath);
      if (!identities.empty()) config.identities = identities;
      if (points) config.pointsPerIdentity = *points;
      if (seed) config.seed = *seed;
      if (digits) config.digits = *digits;
      if (tol) config.tolerance = *tol;
      if (verify->count("--report")) config.reportFormat = report == "json" ? ReportFormat::Json : ReportFormat::Text;
      if (verifyPoint.given()) config.explicitPoints = std::vector<QPoint>{verifyPoint.build(config.digits)};
      config.validate();
      resolve_ids(full_registry(), config);

      VerificationReport r = run(config);
      std::string text = config.reportFormat == ReportFormat::Json ? to_json(r) : to_text(r);
      if (out.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) return usage_error("cannot write " + out);
        f << text;
      }
      return exit_code(r);
    }

    // eval
    const int d = evalDigits ? *evalDigits : default_digits();
    const PrecisionCtx ctx = PrecisionCtx::for_digits(d);
    ctx.validate();
    const IdentityEntry& entry = full_registry().at(evalId);
    QPoint p = evalPoint.build(d);
    for (const auto& name : entry.params)
      if (!p.has(name)) return usage_error("missing parameter '" + name + "' for " + evalId);
    if (auto v = entry.domain.violation(p)) return usage_error("domain violation: " + *v);
    PrecisionScope scope(ctx);
    try {
      SeriesValue s = side == "lhs" ? entry.lhs(p, ctx) : entry.rhs(p, ctx);
      std::cout << "value       " << to_decimal(s.value, d) << "\n"
                << "errEstimate " << to_decimal(s.errEstimate, 6) << "\n"
                << "termsUsed   " << s.termsUsed << "\n"
                << "certified   " << (s.certified ? "true" : "false") << "\n";
    } catch (const Error& e) {
      std::cerr << side << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
      return kExitFail;
    }
    return 0;
  } catch (const Error& e) {
    return usage_error(std::string(to_string(e.kind())) + ": " + e.what());
  }
}
