#include "qchsh/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qchsh/bounds.hpp"
#include "qchsh/errors.hpp"
#include "qchsh/io.hpp"
#include "qchsh/optimizer.hpp"
#include "qchsh/verify.hpp"

namespace qchsh::cli {
namespace {

using io::Json;

struct Request {
  std::string state = "ghz";
  int dim = 0;
  std::string dims;
  std::string mode = "exact";
  int restarts = 32;
  int max_iterations = 500;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  std::string output = "json";
  std::string out_path;
  std::vector<std::string> suites;
  long trials = 1000;
  std::string inject_fault;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo < 2 || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput,
                "malformed dimension range '" + text + "', expected a:b with 2 <= a <= b");
  }
}

TwoQuditState resolve_state(const Request& req) {
  const std::string& s = req.state;
  if (s.rfind("file:", 0) == 0) return io::load_state(s.substr(5), req.dim);
  if (req.dim == 0) throw Error(ErrorKind::InvalidInput, "--dim is required for --state " + s);
  if (s == "ghz") return ghz_state(req.dim);
  if (s.rfind("random:", 0) == 0) {
    const std::string seed_text = s.substr(7);
    try {
      std::size_t used = 0;
      const unsigned long long seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument(seed_text);
      return random_two_qudit_state(req.dim, seed);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "malformed random seed in '" + s + "'");
    }
  }
  throw Error(ErrorKind::InvalidInput,
              "unknown state source '" + s + "', expected ghz, random:<seed> or file:<path>");
}

int thread_cap() {
  const char* env = std::getenv("QCHSH_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const int n = std::stoi(env, &used);
    if (used != std::string(env).size() || n < 0) throw std::invalid_argument(env);
    return n;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput, "QCHSH_THREADS must be a non-negative integer");
  }
}

SeesawConfig seesaw_config(const Request& req) {
  SeesawConfig config;
  config.mode = parse_update_mode(req.mode);
  config.restarts = req.restarts;
  config.max_iterations = req.max_iterations;
  config.tolerance = req.tolerance;
  config.seed = req.seed;
  config.threads = thread_cap();
  config.validate();
  return config;
}

void require_output(const Request& req, bool csv_allowed) {
  if (req.output == "json") return;
  if (req.output == "csv" && csv_allowed) return;
  throw Error(ErrorKind::InvalidInput, "unsupported --output '" + req.output + "' for this command");
}

std::string cmd_basis(const Request& req) {
  require_output(req, false);
  if (req.dim == 0) throw Error(ErrorKind::InvalidInput, "--dim is required");
  return io::dump(io::basis_to_json(build_gellmann_basis(req.dim)));
}

std::string cmd_correlation(const Request& req) {
  require_output(req, true);
  const TwoQuditState state = resolve_state(req);
  const GellMannBasis basis(state.dim);
  const CorrelationMatrix t = correlation_matrix(state, basis);
  if (req.output == "csv") return io::correlation_to_csv(t, basis);
  return io::dump(io::correlation_to_json(t, basis));
}

std::string cmd_bounds(const Request& req) {
  require_output(req, false);
  const TwoQuditState state = resolve_state(req);
  const GellMannBasis basis(state.dim);
  return io::dump(io::bounds_to_json(chsh_bounds(correlation_matrix(state, basis))));
}

std::string cmd_optimize(const Request& req) {
  require_output(req, false);
  const SeesawConfig config = seesaw_config(req);
  const TwoQuditState state = resolve_state(req);
  const GellMannBasis basis(state.dim);
  const SeesawResult result = seesaw_maximize(state, basis, config);
  const BoundsReport bounds = chsh_bounds(correlation_matrix(state, basis));
  Json j{{"d", state.dim},
         {"value", result.value},
         {"mode", std::string(to_string(result.mode))},
         {"restarts", config.restarts},
         {"converged_count", result.converged_count()},
         {"a1", io::vector_to_json(result.a1.components)},
         {"a2", io::vector_to_json(result.a2.components)},
         {"b1", io::vector_to_json(result.b1.components)},
         {"b2", io::vector_to_json(result.b2.components)},
         {"settings", io::settings_to_json(result.settings)},
         {"upper_bound", bounds.upper},
         {"lower_bound", bounds.lower},
         {"tsirelson_gap", kTsirelson - result.value}};
  return io::dump(j);
}

std::string cmd_ghz_table(const Request& req) {
  require_output(req, true);
  if (req.dims.empty()) throw Error(ErrorKind::InvalidInput, "--dims a:b is required");
  const auto [lo, hi] = parse_range(req.dims);
  const SeesawConfig config = seesaw_config(req);

  Json rows = Json::array();
  for (int d = lo; d <= hi; ++d) {
    const GellMannBasis basis(d);
    const TwoQuditState state = ghz_state(d);
    const double certificate = chsh_expectation_direct(state, ghz_optimal_settings(d, basis));
    const double seesaw = seesaw_maximize(state, basis, config).value;
    const BoundsReport bounds = chsh_bounds(correlation_matrix(state, basis));
    rows.push_back(Json{{"d", d},
                        {"closed_form", ghz_bound_value(d)},
                        {"certificate", certificate},
                        {"seesaw", seesaw},
                        {"upper_bound", bounds.upper},
                        {"tsirelson_gap", kTsirelson - bounds.upper},
                        {"upper_below_tsirelson", bounds.upper_improves_tsirelson()}});
  }
  if (req.output == "csv") {
    std::ostringstream csv;
    csv << "d,closed_form,certificate,seesaw,upper_bound,tsirelson_gap,upper_below_tsirelson\n";
    for (const auto& r : rows) {
      csv << r["d"].get<int>();
      for (const char* key : {"closed_form", "certificate", "seesaw", "upper_bound", "tsirelson_gap"}) {
        csv << ',' << io::format_number(r[key].get<double>());
      }
      csv << ',' << (r["upper_below_tsirelson"].get<bool>() ? "true" : "false") << '\n';
    }
    return csv.str();
  }
  return io::dump(Json{{"tsirelson", kTsirelson}, {"rows", rows}});
}

// Returns the report text and sets `exit_code`.
std::string cmd_verify(const Request& req, int& exit_code) {
  VerifyOptions options;
  options.trials = req.trials;
  options.seed = req.seed;
  if (!req.dims.empty()) std::tie(options.min_dim, options.max_dim) = parse_range(req.dims);
  if (req.inject_fault == "corrupt-basis") {
    options.basis_factory = [](int d) {
      GellMannBasis good(d);
      std::vector<ComplexMatrix> ops = good.operators();
      ops.back() *= 1.01;
      return GellMannBasis::from_operators(d, std::move(ops), good.labels());
    };
  } else if (!req.inject_fault.empty()) {
    throw Error(ErrorKind::InvalidInput, "unknown fault '" + req.inject_fault + "'");
  }
  const std::vector<std::string>& suites = req.suites.empty() ? suite_names() : req.suites;
  std::ostringstream text;
  std::string first_failure;
  for (const auto& name : suites) {
    const SuiteReport r = run_suite(name, options);
    text << "suite " << r.name << ": checks=" << r.checks << " failures=" << r.failures
         << " worst_violation=" << io::format_number(r.worst_violation) << ' '
         << (r.passed() ? "PASS" : "FAIL") << '\n';
    if (!r.passed() && first_failure.empty()) first_failure = r.name;
  }
  if (first_failure.empty()) {
    text << "verify: " << suites.size() << " suites passed\n";
    exit_code = kOk;
  } else {
    text << "verify: first failing suite " << first_failure << '\n';
    exit_code = kNumericalFailure;
  }
  return text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"CHSH expectation bounds and maximization for two-qudit states", "qchsh"};
  app.require_subcommand(1);

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", req.state, "ghz | random:<seed> | file:<path>");
    sub->add_option("--dim", req.dim, "qudit dimension d");
  };
  auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--mode", req.mode, "exact | paper");
    sub->add_option("--restarts", req.restarts, "see-saw restarts");
    sub->add_option("--max-iter", req.max_iterations, "iterations per restart");
    sub->add_option("--seed", req.seed, "random seed");
    sub->add_option("--tol", req.tolerance, "absolute improvement threshold");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", req.output, "json | csv");
    sub->add_option("--out", req.out_path, "write the report to this file");
  };

  CLI::App* basis = app.add_subcommand("basis", "export the Gell-Mann basis");
  basis->add_option("--dim", req.dim, "qudit dimension d");
  add_output(basis);

  CLI::App* correlation = app.add_subcommand("correlation", "correlation matrix of a state");
  add_state(correlation);
  add_output(correlation);

  CLI::App* bounds = app.add_subcommand("bounds", "spectral lower and upper bounds");
  add_state(bounds);
  add_output(bounds);

  CLI::App* optimize = app.add_subcommand("optimize", "see-saw maximization of |CHSH|");
  add_state(optimize);
  add_optimizer(optimize);
  add_output(optimize);

  CLI::App* table = app.add_subcommand("ghz-table", "GHZ closed form vs certificate vs see-saw");
  table->add_option("--dims", req.dims, "inclusive range a:b");
  add_optimizer(table);
  add_output(table);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", req.suites, "suite name (repeatable)");
  verify->add_option("--trials", req.trials, "random trials per dimension");
  verify->add_option("--dims", req.dims, "inclusive range a:b (default 2:6)");
  verify->add_option("--seed", req.seed, "random seed");
  verify->add_option("--inject-fault", req.inject_fault)->group("");
  add_output(verify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    int exit_code = kOk;
    std::string report;
    if (*basis) report = cmd_basis(req);
    else if (*correlation) report = cmd_correlation(req);
    else if (*bounds) report = cmd_bounds(req);
    else if (*optimize) report = cmd_optimize(req);
    else if (*table) report = cmd_ghz_table(req);
    else if (*verify) report = cmd_verify(req, exit_code);

    if (req.out_path.empty()) {
      out << report;
    } else {
      std::ofstream file(req.out_path);
      if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + req.out_path);
      file << report;
    }
    if (exit_code != kOk) err << "error: verification failed\n";
    return exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e.kind()) ? kNumericalFailure : kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: InvalidInput: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace qchsh::cli
