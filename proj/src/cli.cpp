#include "qha/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qha/berezin.hpp"
#include "qha/heisenberg.hpp"
#include "qha/io.hpp"
#include "qha/qconv.hpp"
#include "qha/verify.hpp"

namespace qha::cli {

using nlohmann::json;

namespace {

constexpr double kReconstructTol = 1e-9;
constexpr std::uint64_t kWindowSeedSalt = 0x5EEDF00DULL;

template <typename T>
T typed(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ConfigError("unknown config key '" + where + key + "'");
    }
  }
}

PhaseConvention parse_convention(const std::string& s) {
  if (s == "standard") return PhaseConvention::Standard;
  if (s == "integer") return PhaseConvention::IntegerPhase;
  throw ConfigError("unknown phase convention '" + s + "'");
}

PhaseSpaceModel model_for(const ScenarioConfig& c, int n) { return build_model(c.kind, n, c.length, c.convention); }

PhaseSpaceModel single_model(const ScenarioConfig& c) {
  const auto ns = parse_n_range(c.n);
  if (ns.size() != 1) throw ConfigError("this command needs a single dimension, got range '" + c.n + "'");
  return model_for(c, ns.front());
}

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

// Window operators: gaussian | random_density[:rank] | basis | zero_line |
// rank_one_file:PATH | rho_of_function_file:PATH
Op resolve_window(const ScenarioConfig& c, const PhaseSpaceModel& model) {
  const auto [kind, arg] = split_spec(c.window);
  const std::uint64_t seed = c.seed ^ kWindowSeedSalt;
  if (kind == "gaussian") {
    const StateVector phi = gaussian_window(model);
    return rank_one(phi, phi);
  }
  if (kind == "random_density") {
    const int rank = arg.empty() ? c.window_rank : std::stoi(arg);
    return random_density(model, rank, seed);
  }
  if (kind == "basis") {
    const StateVector e = basis_vector(model, 0);
    return rank_one(e, e);
  }
  if (kind == "zero_line") {
    // Random pure state with F_W removed on the lines m = +-1.
    PhaseFunction g = fourier_wigner(random_density(model, 1, seed));
    for (int k = 0; k < model.n(); ++k) {
      g(model.reduce(1), k) = 0.0;
      g(model.reduce(-1), k) = 0.0;
    }
    return rho(g);
  }
  if (kind == "rank_one_file") {
    const StateVector xi = io::state_from_json(io::read_json_file(arg), model);
    return rank_one(xi, xi);
  }
  if (kind == "rho_of_function_file") {
    const PhaseFunction g = io::phase_function_from_json(io::read_json_file(arg));
    if (g.n() != model.n()) throw ConfigError("window function dimension does not match the model");
    return rho(PhaseFunction(model, g.values()));
  }
  throw ConfigError("unknown window '" + c.window + "'");
}

// State operators: identity | gaussian | random_density[:rank] | random_hermitian |
// basis | rank_one_file:PATH | op_file:PATH
Op resolve_state_op(const ScenarioConfig& c, const PhaseSpaceModel& model) {
  const auto [kind, arg] = split_spec(c.state);
  if (kind == "identity") return identity(model);
  if (kind == "gaussian") {
    const StateVector phi = gaussian_window(model);
    return rank_one(phi, phi);
  }
  if (kind == "random_density") return random_density(model, arg.empty() ? model.n() : std::stoi(arg), c.seed);
  if (kind == "random_hermitian") return random_hermitian(model, c.seed);
  if (kind == "basis") {
    const StateVector e = basis_vector(model, 0);
    return rank_one(e, e);
  }
  if (kind == "rank_one_file") {
    const StateVector xi = io::state_from_json(io::read_json_file(arg), model);
    return rank_one(xi, xi);
  }
  if (kind == "op_file") return io::op_from_json(io::read_json_file(arg), model);
  throw ConfigError("unknown operator state '" + c.state + "'");
}

// State vectors: gaussian | random | basis | rank_one_file:PATH
StateVector resolve_vector(const std::string& spec, std::uint64_t seed, const PhaseSpaceModel& model) {
  const auto [kind, arg] = split_spec(spec);
  if (kind == "gaussian") return gaussian_window(model);
  if (kind == "random" || kind == "random_density") return random_state(model, seed);
  if (kind == "basis") return basis_vector(model, 0);
  if (kind == "rank_one_file") return io::state_from_json(io::read_json_file(arg), model);
  throw ConfigError("unknown state vector '" + spec + "'");
}

ConvexFunctional resolve_functional(const ScenarioConfig& c) {
  if (c.phi == "exp") return ConvexFunctional::exp(c.beta);
  if (c.phi == "pos" || c.phi == "positive-part") return ConvexFunctional::positive_part();
  if (c.phi == "abspow" || c.phi == "abs-power") {
    if (!(c.p >= 1.0)) throw ConfigError("--p must be at least 1");
    return ConvexFunctional::abs_power(c.p);
  }
  throw ConfigError("unknown functional '" + c.phi + "'");
}

void require_format(const ScenarioConfig& c) {
  if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
}

void emit(const ScenarioConfig& c, const std::string& content, std::ostream& out) {
  if (c.output.empty()) {
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
  } else {
    io::atomic_write(c.output, content);
  }
}

std::string render(const ScenarioConfig& c, const PhaseFunction& f) {
  return c.format == "csv" ? io::to_csv(f) : io::to_json(f).dump() + "\n";
}

int cmd_verify(const ScenarioConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites;
  if (c.suite == "all") {
    suites = registered_identities();
  } else if (is_registered_identity(c.suite)) {
    suites = {c.suite};
  } else {
    err << "unknown suite '" << c.suite << "'; expected 'all' or one of:";
    for (const auto& s : registered_identities()) err << ' ' << s;
    err << '\n';
    return kUsage;
  }
  if (c.seeds < 1) throw ConfigError("--seeds must be at least 1");

  struct Job {
    std::string identity;
    int n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int n : parse_n_range(c.n)) {
    model_for(c, n);  // validates every dimension up front
    for (const auto& s : suites) {
      for (int i = 0; i < c.seeds; ++i) jobs.push_back({s, n, c.seed + static_cast<std::uint64_t>(i)});
    }
  }

  std::vector<VerificationReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
          reports[i] = verify_identity(jobs[i].identity, jobs[i].seed, model_for(c, jobs[i].n));
        }
      });
    }
  }

  std::ostringstream lines;
  bool all_passed = true;
  for (const auto& r : reports) {
    lines << io::to_json(r).dump() << '\n';
    all_passed = all_passed && r.passed;
  }
  emit(c, lines.str(), out);
  if (!c.output.empty() || !all_passed) {
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed; });
    err << reports.size() - failed << "/" << reports.size() << " identity checks passed\n";
  }
  return all_passed ? kOk : kViolation;
}

int cmd_repr(const std::string& kind, const ScenarioConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c);
  const PhaseSpaceModel model = single_model(c);
  if (kind == "husimi") {
    emit(c, render(c, husimi(resolve_state_op(c, model), resolve_window(c, model))), out);
    return kOk;
  }
  if (kind == "fourier-wigner") {
    emit(c, render(c, fourier_wigner(resolve_state_op(c, model))), out);
    return kOk;
  }
  if (kind == "wigner") {
    emit(c, render(c, wigner(resolve_vector(c.state, c.seed, model))), out);
    return kOk;
  }
  if (kind == "stft") {
    const StateVector psi = resolve_vector(c.state, c.seed, model);
    const StateVector window = resolve_vector(c.window, c.seed ^ kWindowSeedSalt, model);
    emit(c, render(c, stft(psi, window)), out);
    return kOk;
  }
  if (kind == "gs") {
    GsMode mode;
    if (c.mode == "strict") {
      mode = GsMode::Strict;
    } else if (c.mode == "pseudo") {
      mode = GsMode::Pseudo;
    } else {
      throw ConfigError("--mode must be strict or pseudo");
    }
    const Op s = resolve_state_op(c, model);
    const Op sigma = resolve_window(c, model);
    try {
      const auto result = glauber_sudarshan(s, sigma, mode, c.tol);
      json summary{{"residual", result.residual},
                   {"zero_count", result.zeros.zero_points.size()},
                   {"classification", to_string(result.zeros.classification)},
                   {"tolerance", result.zeros.tolerance}};
      if (c.output.empty() && c.format == "json") {
        summary["symbol"] = io::to_json(result.symbol);
        out << summary.dump() << '\n';
      } else {
        emit(c, render(c, result.symbol), out);
        (c.output.empty() ? err : out) << summary.dump() << '\n';
      }
      return kOk;
    } catch (const InfeasibleError& e) {
      err << io::to_json(e.report()).dump() << '\n';
      return kInfeasible;
    }
  }
  throw ConfigError("unknown representation '" + kind + "'");
}

int cmd_berezin_lieb(const ScenarioConfig& c, std::ostream& out, std::ostream& err) {
  const PhaseSpaceModel model = single_model(c);
  const ConvexFunctional phi = resolve_functional(c);
  if (c.variant != "both" && c.variant != "operator" && c.variant != "function") {
    throw ConfigError("--variant must be operator, function or both");
  }
  if (c.trials < 1) throw ConfigError("--trials must be at least 1");
  std::ostringstream lines;
  int failures = 0;
  for (int i = 0; i < c.trials; ++i) {
    const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
    const int rank = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(model.n()));
    const Op s = random_density(model, rank, seed ^ kWindowSeedSalt);
    std::vector<BerezinLiebResult> results;
    if (c.variant != "function") results.push_back(berezin_lieb_operator(random_hermitian(model, seed), s, phi));
    if (c.variant != "operator") {
      const PhaseFunction f = random_function(model, seed);
      results.push_back(berezin_lieb_function(PhaseFunction(model, f.values().real().cast<cplx>()), s, phi));
    }
    for (const auto& r : results) {
      json line = io::to_json(r);
      line["trial"] = i;
      line["seed"] = seed;
      lines << line.dump() << '\n';
      failures += r.passed ? 0 : 1;
    }
  }
  emit(c, lines.str(), out);
  if (failures > 0) err << failures << " Berezin-Lieb inequality violation(s)\n";
  return failures == 0 ? kOk : kViolation;
}

int cmd_zeros(const ScenarioConfig& c, std::ostream& out) {
  require_format(c);
  const PhaseSpaceModel model = single_model(c);
  const Op sigma = resolve_window(c, model);
  const double tol = c.tol ? *c.tol : default_zero_tolerance(sigma);
  const ZeroSetReport report = zero_set(sigma, tol, c.radius);
  emit(c, c.format == "csv" ? io::zero_points_csv(report) : io::to_json(report).dump() + "\n", out);
  return kOk;
}

int cmd_reconstruct(const ScenarioConfig& c, std::ostream& out, std::ostream& err) {
  const PhaseSpaceModel model = single_model(c);
  const Op s = resolve_state_op(c, model);
  const Op sigma = resolve_window(c, model);
  try {
    const Op recovered = reconstruct(husimi(s, sigma), sigma, c.tol);
    const double error = max_abs_diff(recovered, s);
    const bool passed = error <= kReconstructTol;
    json summary{{"max_abs_error", error}, {"tolerance", kReconstructTol}, {"passed", passed}};
    if (c.output.empty()) {
      out << summary.dump() << '\n';
    } else {
      json doc = summary;
      doc["operator"] = io::to_json(recovered);
      io::atomic_write(c.output, doc.dump() + "\n");
      out << summary.dump() << '\n';
    }
    return passed ? kOk : kViolation;
  } catch (const InfeasibleError& e) {
    err << e.what() << '\n' << io::to_json(e.report()).dump() << '\n';
    return kInfeasible;
  }
}

}  // namespace

std::vector<int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("invalid dimension '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {to_int(text)};
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (hi < lo) throw ConfigError("empty dimension range '" + text + "'");
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

void apply_config_json(const json& j, ScenarioConfig& c) {
  if (!j.is_object()) throw ConfigError("scenario config must be a JSON object");
  reject_unknown(j,
                 {"model", "seed", "seeds", "suite", "n", "window", "window_rank", "state", "operation", "mode",
                  "tol", "radius", "phi", "beta", "p", "trials", "variant", "output", "phase_convention"},
                 "");
  if (j.contains("model")) {
    const json& m = j.at("model");
    if (!m.is_object()) throw ConfigError("config key 'model' must be an object");
    reject_unknown(m, {"kind", "N", "L"}, "model.");
    if (m.contains("kind")) c.kind = parse_model_kind(typed<std::string>(m.at("kind"), "model.kind"));
    if (m.contains("N")) c.n = std::to_string(typed<int>(m.at("N"), "model.N"));
    if (m.contains("L")) c.length = typed<double>(m.at("L"), "model.L");
  }
  if (j.contains("n")) {
    const json& n = j.at("n");
    c.n = n.is_number_integer() ? std::to_string(n.get<int>()) : typed<std::string>(n, "n");
  }
  if (j.contains("seed")) c.seed = typed<std::uint64_t>(j.at("seed"), "seed");
  if (j.contains("seeds")) c.seeds = typed<int>(j.at("seeds"), "seeds");
  if (j.contains("suite")) c.suite = typed<std::string>(j.at("suite"), "suite");
  if (j.contains("window")) c.window = typed<std::string>(j.at("window"), "window");
  if (j.contains("window_rank")) c.window_rank = typed<int>(j.at("window_rank"), "window_rank");
  if (j.contains("state")) c.state = typed<std::string>(j.at("state"), "state");
  if (j.contains("mode")) c.mode = typed<std::string>(j.at("mode"), "mode");
  if (j.contains("tol")) c.tol = typed<double>(j.at("tol"), "tol");
  if (j.contains("radius")) c.radius = typed<double>(j.at("radius"), "radius");
  if (j.contains("phi")) c.phi = typed<std::string>(j.at("phi"), "phi");
  if (j.contains("beta")) c.beta = typed<double>(j.at("beta"), "beta");
  if (j.contains("p")) c.p = typed<double>(j.at("p"), "p");
  if (j.contains("trials")) c.trials = typed<int>(j.at("trials"), "trials");
  if (j.contains("variant")) c.variant = typed<std::string>(j.at("variant"), "variant");
  if (j.contains("phase_convention")) {
    c.convention = parse_convention(typed<std::string>(j.at("phase_convention"), "phase_convention"));
  }
  if (j.contains("operation")) {
    // Informational: the subcommand decides what runs; the key documents intent.
    typed<std::string>(j.at("operation"), "operation");
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    if (!o.is_object()) throw ConfigError("config key 'output' must be an object");
    reject_unknown(o, {"format", "path"}, "output.");
    if (o.contains("format")) c.format = typed<std::string>(o.at("format"), "output.format");
    if (o.contains("path")) c.output = typed<std::string>(o.at("path"), "output.path");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum harmonic analysis on a discretized phase space", "qha"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::optional<std::string> config_path, model_kind, n, window, state, mode, phi, output, format, suite, variant;
  std::optional<double> length, tol, beta, p, radius;
  std::optional<std::uint64_t> seed;
  std::optional<int> seeds, trials, rank;
  std::string repr_kind;

  app.add_option("--config", config_path, "Scenario JSON file; flags override its values");
  app.add_option("--model", model_kind, "finite | sampled");
  app.add_option("--n", n, "Dimension N, or a range such as 2..16 for verify");
  app.add_option("--l", length, "Period L of the sampled-line model");
  app.add_option("--seed", seed, "Base random seed");
  app.add_option("--seeds", seeds, "Number of seeds per identity (verify)");
  app.add_option("--window", window, "Window operator or vector");
  app.add_option("--rank", rank, "Rank of a random_density window");
  app.add_option("--state", state, "State operator or vector");
  app.add_option("--mode", mode, "strict | pseudo (gs)");
  app.add_option("--tol", tol, "Zero-set threshold");
  app.add_option("--radius", radius, "Restrict zero scans to |z| <= radius");
  app.add_option("--phi", phi, "exp | pos | abspow");
  app.add_option("--beta", beta, "Inverse temperature for --phi exp");
  app.add_option("--p", p, "Exponent for --phi abspow");
  app.add_option("--trials", trials, "Number of random trials");
  app.add_option("--variant", variant, "operator | function | both (berezin-lieb)");
  app.add_option("--output", output, "Output path; stdout when absent");
  app.add_option("--format", format, "json | csv");

  auto* verify = app.add_subcommand("verify", "Run the registered identity suite");
  verify->add_option("--suite", suite, "all or one identity name");
  auto* repr = app.add_subcommand("repr", "Compute a phase-space representation");
  repr->add_option("kind", repr_kind, "husimi | gs | wigner | stft | fourier-wigner")->required();
  auto* bl = app.add_subcommand("berezin-lieb", "Evaluate both Berezin-Lieb inequalities on random inputs");
  auto* zeros = app.add_subcommand("zeros", "Zero set of the window's Fourier-Wigner transform");
  auto* recon = app.add_subcommand("reconstruct", "Round trip S -> Husimi -> S");

  std::vector<std::string> argv_store{"qha"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    ScenarioConfig c;
    if (const char* env = std::getenv("QHA_DEFAULT_N"); env && *env) c.n = env;
    if (config_path) apply_config_json(io::read_json_file(*config_path), c);
    if (model_kind) c.kind = parse_model_kind(*model_kind);
    if (n) c.n = *n;
    if (length) c.length = *length;
    if (seed) c.seed = *seed;
    if (seeds) c.seeds = *seeds;
    if (suite) c.suite = *suite;
    if (window) c.window = *window;
    if (rank) c.window_rank = *rank;
    if (state) c.state = *state;
    if (mode) c.mode = *mode;
    if (tol) c.tol = *tol;
    if (radius) c.radius = *radius;
    if (phi) c.phi = *phi;
    if (beta) c.beta = *beta;
    if (p) c.p = *p;
    if (trials) c.trials = *trials;
    if (variant) c.variant = *variant;
    if (output) c.output = *output;
    if (format) c.format = *format;

    if (*verify) return cmd_verify(c, out, err);
    if (*repr) return cmd_repr(repr_kind, c, out, err);
    if (*bl) return cmd_berezin_lieb(c, out, err);
    if (*zeros) return cmd_zeros(c, out);
    if (*recon) return cmd_reconstruct(c, out, err);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    err << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace qha::cli
