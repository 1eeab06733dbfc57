// Command-line front end. One subcommand per task; every option can also come
// from a JSON job file given with --config (explicit flags win).

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabdiv/errors.hpp"
#include "stabdiv/job.hpp"

namespace {

struct Flags {
  std::string config;
  std::vector<std::string> variables;
  int channels = 0;
  std::string order;
  std::vector<std::string> generators;
  std::string dividend;
  std::string strategy;
  int degree_min = -1;
  int degree_max = -1;
  int degree_cap = -1;
  int i = -1;
  int j = -1;
  double schatten_p = 0.0;
  double tolerance = 0.0;
  int window_start = -1;
  std::string output;
};

void add_job_options(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON job file");
  app->add_option("--vars", f.variables, "variable names in declaration order")->delimiter(',');
  app->add_option("--channels", f.channels, "channel count r");
  app->add_option("--order", f.order, "monomial order, e.g. grlex:x>y or lex:w>x>y");
  app->add_option("-g,--gen", f.generators, "generator polynomial (repeatable)");
  app->add_option("--output,-o", f.output, "directory for report files (default: stdout)");
}

stabdiv::JobConfig assemble(const std::string& task, const Flags& f) {
  stabdiv::JobConfig c;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw stabdiv::ValidationError("cannot read config file '" + f.config + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw stabdiv::ParseError(std::string("config is not valid JSON: ") + e.what(), e.byte);
    }
    c = j.get<stabdiv::JobConfig>();
    if (!task.empty() && !c.task.empty() && c.task != task) {
      throw stabdiv::ValidationError("config task '" + c.task + "' does not match subcommand '" + task + "'");
    }
  }
  if (!task.empty()) c.task = task;
  if (!f.variables.empty()) c.variables = f.variables;
  if (f.channels > 0) c.channels = f.channels;
  if (!f.order.empty()) c.order = f.order;
  if (!f.generators.empty()) c.generators = f.generators;
  if (!f.dividend.empty()) c.dividend = f.dividend;
  if (!f.strategy.empty()) c.strategy = f.strategy;
  if (f.degree_min >= 0) c.degree_min = f.degree_min;
  if (f.degree_max >= 0) c.degree_max = f.degree_max;
  if (f.degree_cap >= 0) c.degree_cap = f.degree_cap;
  if (f.i >= 0) c.i = f.i;
  if (f.j >= 0) c.j = f.j;
  if (f.schatten_p > 0.0) c.schatten_p = f.schatten_p;
  if (f.tolerance > 0.0) c.tolerance = f.tolerance;
  if (f.window_start >= 0) c.window_start = f.window_start;
  if (!f.output.empty()) c.output = f.output;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable polynomial division, Groebner bases and truncated d-shift diagnostics"};
  app.require_subcommand(0, 1);
  Flags flags;
  add_job_options(&app, flags);

  const std::map<std::string, std::string> descriptions{
      {"divide", "divide a polynomial by the generators, writing a step trace"},
      {"groebner", "reduced Groebner basis of the generators"},
      {"stability-scan", "per-degree stability constants of the generated module"},
      {"rescale", "variable scaling that makes the leading coefficients dominant"},
      {"comm-report", "shift commutator norms on the module, its complement and the whole space"},
      {"estimate41", "compressed adjoint shift norms against the complement"},
      {"reduce5", "linear-to-quadratic reduction identities for linear vector-valued generators"},
      {"hilbert", "Hilbert function and dimension of the quotient"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& task : stabdiv::known_tasks()) {
    CLI::App* sub = app.add_subcommand(task, descriptions.at(task));
    add_job_options(sub, flags);
    subs.push_back(sub);
    if (task == "divide") {
      sub->add_option("--dividend", flags.dividend, "polynomial to divide");
      sub->add_option("--strategy", flags.strategy, "CLO_DEFAULT | BIVARIATE_STABLE | DOMINANT_MIN_TERM");
    }
    if (task == "stability-scan" || task == "hilbert") {
      sub->add_option("--nmin", flags.degree_min, "first degree");
      sub->add_option("--nmax", flags.degree_max, "last degree");
    }
    if (task == "hilbert") sub->add_option("--window-start", flags.window_start, "first degree of the interpolation window");
    if (task == "comm-report" || task == "estimate41" || task == "reduce5") {
      sub->add_option("--cap", flags.degree_cap, "degree cap of the truncation");
    }
    if (task == "comm-report") sub->add_option("-i", flags.i, "shift index i (1-based)");
    if (task == "comm-report" || task == "estimate41") {
      sub->add_option("-j", flags.j, "shift index j (1-based)");
      sub->add_option("--p", flags.schatten_p, "Schatten exponent");
    }
    if (task != "divide" && task != "groebner" && task != "rescale") {
      sub->add_option("--tol", flags.tolerance, "relative rank tolerance");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(stabdiv::ExitCode::usage);
  }

  std::string task;
  for (auto* sub : subs) {
    if (sub->parsed()) task = sub->get_name();
  }
  if (task.empty() && flags.config.empty()) {
    std::cerr << app.help();
    return static_cast<int>(stabdiv::ExitCode::usage);
  }

  stabdiv::JobConfig config;
  try {
    config = assemble(task, flags);
  } catch (const stabdiv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return static_cast<int>(stabdiv::ExitCode::parse);
  } catch (const stabdiv::Error& e) {
    std::cerr << "invalid job: " << e.what() << '\n';
    return static_cast<int>(stabdiv::ExitCode::usage);
  }

  const stabdiv::JobOutcome outcome = stabdiv::run_job(config);
  if (outcome.code != stabdiv::ExitCode::ok) {
    std::cerr << outcome.message << '\n';
    return static_cast<int>(outcome.code);
  }
  if (config.output.empty()) {
    const bool many = outcome.files.size() > 1;
    for (const auto& [name, content] : outcome.files) {
      if (many) std::cout << "# " << name << '\n';
      std::cout << content;
    }
  } else {
    for (const auto& [name, content] : outcome.files) std::cerr << "wrote " << config.output << '/' << name << '\n';
  }
  return 0;
}
