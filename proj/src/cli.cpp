#include "osc/cli.hpp"

#include "osc/coinvariants.hpp"
#include "osc/expression.hpp"
#include "osc/fock.hpp"
#include "osc/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace osc {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kCommands{"bracket", "cocycle", "fock-apply", "coinv", "verify-all", "central-scalars"};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_args(const RunConfig& c, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (c.args.size() < lo || c.args.size() > hi) throw std::invalid_argument("usage: " + usage);
}

RunResult run_bracket(const RunConfig& c) {
  require_args(c, 2, 2, "bracket <expr> <expr>");
  const QuadraticElement result = bracket(parse_expression(c.args[0]), parse_expression(c.args[1]));
  const std::string text = to_canonical_string(result);
  if (c.format == "json") {
    json j;
    j["command"] = "bracket";
    j["arguments"] = c.args;
    j["result"] = text;
    return {kOk, dump(j), {}};
  }
  return {kOk, text + "\n", {}};
}

CocycleHandle handle_by_name(const std::string& name) {
  if (name == "psi") return CocycleHandle::psi();
  if (name == "alpha") return CocycleHandle::alpha();
  if (name == "beta") return CocycleHandle::beta();
  if (name == "gamma") return CocycleHandle::gamma();
  throw std::invalid_argument("unknown cocycle '" + name + "' (expected psi, alpha, beta or gamma)");
}

RunResult run_cocycle(const RunConfig& c) {
  require_args(c, 3, 4, "cocycle <psi|alpha|beta|gamma> <expr> <expr> [<expr>]");
  const CocycleHandle h = handle_by_name(c.args[0]);
  std::vector<QuadraticElement> xs;
  for (std::size_t i = 1; i < c.args.size(); ++i) xs.push_back(parse_expression(c.args[i]));
  const bool defect = xs.size() == 3;
  const Rational value = defect ? cocycle_defect(h, xs[0], xs[1], xs[2]) : h(xs[0], xs[1]);
  if (c.format == "json") {
    json j;
    j["command"] = "cocycle";
    j["cocycle"] = h.name;
    j["mode"] = defect ? "defect" : "value";
    j["arguments"] = std::vector<std::string>(c.args.begin() + 1, c.args.end());
    j["value"] = value.to_string();
    return {kOk, dump(j), {}};
  }
  return {kOk, value.to_string() + "\n", {}};
}

RunResult run_fock_apply(const RunConfig& c) {
  require_args(c, 2, 2, "fock-apply <expr> <vector>");
  VoaConfig voa{static_cast<std::size_t>(c.rank), static_cast<std::size_t>(c.embedding), Rational(0)};
  voa.validate();
  const QuadraticElement a = parse_expression(c.args[0]);
  const FockVector v = FockVector::parse(c.args[1], voa.rank);
  const FockVector result = apply_quadratic(a, v, voa);
  if (c.format == "json") {
    json j;
    j["command"] = "fock-apply";
    j["rank"] = c.rank;
    j["embedding"] = c.embedding;
    j["expression"] = c.args[0];
    j["vector"] = v.to_string();
    j["result"] = result.to_string();
    return {kOk, dump(j), {}};
  }
  return {kOk, result.to_string() + "\n", {}};
}

RunResult run_coinv(const RunConfig& c) {
  require_args(c, 0, 0, "coinv --gaps <list> --rank r --N n --M m --W w");
  const VoaConfig voa{static_cast<std::size_t>(c.rank), static_cast<std::size_t>(c.embedding), Rational(0)};
  const FPoint f(c.gaps);
  const CoinvKind kind = c.kind == "X" ? CoinvKind::X : CoinvKind::A;
  CoinvOptions options;
  options.threads = static_cast<unsigned>(c.threads);
  std::vector<std::pair<std::int64_t, std::int64_t>> schedule;
  if (c.M - 2 >= c.N) {
    schedule = {{c.M - 2, c.W - 2}, {c.M, c.W}};
  } else {
    schedule = {{c.M, c.W}, {c.M + 2, c.W + 2}};
  }
  const CoinvReport r = stabilize(
      [&](std::int64_t m, std::int64_t w) { return coinvariants(kind, voa, f, c.N, m, w, options); }, schedule);
  const int code = r.stabilized ? kOk : kUnstabilized;
  if (c.format == "json") return {code, dump(r.to_json()), {}};
  return {code, r.to_text(), {}};
}

RunResult run_verify_all(const RunConfig& c) {
  require_args(c, 0, 0, "verify-all [--probe-bound b]");
  const auto verdicts = verify_all(c.probe_bound);
  bool pass = true;
  for (const auto& v : verdicts) pass = pass && v.pass;
  const int code = pass ? kOk : kVerificationFailed;
  if (c.format == "json") {
    json j;
    j["command"] = "verify-all";
    j["probe_bound"] = c.probe_bound;
    j["pass"] = pass;
    j["verdicts"] = json::array();
    for (const auto& v : verdicts) j["verdicts"].push_back(v.to_json());
    return {code, dump(j), {}};
  }
  std::ostringstream os;
  for (const auto& v : verdicts) {
    os << (v.pass ? "PASS " : "FAIL ") << v.check << " " << v.parameters.dump() << "\n";
    for (const auto& w : v.witnesses) os << "  witness: " << w << "\n";
  }
  os << (pass ? "all checks passed" : "verification failed") << "\n";
  return {code, os.str(), {}};
}

RunResult run_central_scalars(const RunConfig& c) {
  std::vector<Rational> cs;
  for (const auto& a : c.args) cs.push_back(Rational::parse(a));
  if (cs.empty()) cs = {Rational(0), Rational(1), Rational(2), Rational(26)};
  bool consistent = true;
  json rows = json::array();
  std::ostringstream os;
  os << "c\tA-side\tX-side\tLambda fiber\tTheta fiber\tmp on (T(2),T(-2))\n";
  for (const auto& x : cs) {
    const CentralScalars s = central_scalars(x);
    consistent = consistent && s.consistent;
    rows.push_back(s.to_json());
    os << s.c << "\t" << s.a_side << "\t" << s.x_side << "\t" << s.lambda_fiber << "\t" << s.theta_fiber << "\t"
       << s.mp_value << "\n";
  }
  const int code = consistent ? kOk : kVerificationFailed;
  if (c.format == "json") {
    json j;
    j["command"] = "central-scalars";
    j["mp_cocycle"] = "-1/2*alpha";
    j["u2_cocycle"] = "-1/2*alpha + beta";
    j["consistent"] = consistent;
    j["table"] = rows;
    return {code, dump(j), {}};
  }
  os << "mp cocycle: -1/2*alpha; Weyl-quadratic cocycle: -1/2*alpha + beta\n";
  os << (consistent ? "consistent" : "inconsistent") << "\n";
  return {code, os.str(), {}};
}

}  // namespace

std::set<std::int64_t> parse_gap_list(const std::string& text) {
  std::set<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    const std::string token = item.substr(first, last - first + 1);
    std::size_t used = 0;
    std::int64_t g = 0;
    try {
      g = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid gap '" + token + "'");
    }
    if (used != token.size() || g <= 0) throw std::invalid_argument("invalid gap '" + token + "'");
    out.insert(g);
  }
  return out;
}

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  if (format != "text" && format != "json") throw std::invalid_argument("--format must be text or json");
  if (rank < 1 || embedding < 1 || embedding > rank) throw std::invalid_argument("need 1 <= embedding <= rank");
  if (N < 0 || M < 1 || W < 1 || probe_bound < 1 || threads < 1) {
    throw std::invalid_argument("numeric parameters must be positive");
  }
  if (command == "coinv") {
    if (!(N <= M && M <= W)) throw std::invalid_argument("coinv needs N <= M <= W");
    if (kind != "A" && kind != "X") throw std::invalid_argument("--kind must be A or X");
  }
}

RunResult run(const RunConfig& config) {
  try {
    config.validate();
    if (config.command == "bracket") return run_bracket(config);
    if (config.command == "cocycle") return run_cocycle(config);
    if (config.command == "fock-apply") return run_fock_apply(config);
    if (config.command == "coinv") return run_coinv(config);
    if (config.command == "verify-all") return run_verify_all(config);
    return run_central_scalars(config);
  } catch (const std::exception& e) {
    return {kUsageError, {}, std::string("error: ") + e.what() + "\n"};
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra of the oscillator representation, cocycles and coinvariants"};
  RunConfig c;
  std::string gaps;
  app.add_option("command", c.command, "bracket | cocycle | fock-apply | coinv | verify-all | central-scalars")
      ->required();
  // Command arguments are collected raw: Fock labels such as [2,1] would
  // otherwise be split as CLI11 array syntax.
  app.allow_extras();
  app.footer("Arguments after the command are expressions, vectors or scalars.");
  app.add_option("--gaps", gaps, "gap set of the point F, comma separated");
  app.add_option("--rank", c.rank, "rank of the Heisenberg vertex algebra");
  app.add_option("--embedding", c.embedding, "channel of the embedded copy of pi");
  app.add_option("--N", c.N, "top degree");
  app.add_option("--M", c.M, "source-degree cap");
  app.add_option("--W", c.W, "window");
  app.add_option("--kind", c.kind, "coinvariants of sp_F (A) or sp_F x| F (X)");
  app.add_option("--threads", c.threads, "worker threads for row reduction");
  app.add_option("--probe-bound", c.probe_bound, "probe bound for verify-all");
  app.add_option("--format", c.format, "text or json");
  auto* config_opt = app.set_config("--config", "", "key = value file mirroring the flags");
  try {
    app.parse(argc, argv);
    c.args = app.remaining();
    std::erase(c.args, std::string("--"));
    c.gaps = parse_gap_list(gaps);
    if (config_opt->count() > 0) c.config_path = config_opt->as<std::string>();
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const RunResult r = run(c);
  out << r.output;
  err << r.error;
  return r.exit_code;
}

}  // namespace osc
