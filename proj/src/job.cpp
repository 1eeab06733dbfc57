#include "stabdiv/job.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "stabdiv/division.hpp"
#include "stabdiv/errors.hpp"
#include "stabdiv/groebner.hpp"
#include "stabdiv/shiftop.hpp"
#include "stabdiv/stability.hpp"
#include "stabdiv/text.hpp"

namespace stabdiv {

using nlohmann::json;

void to_json(json& j, const JobConfig& c) {
  j = json{{"task", c.task},
           {"variables", c.variables},
           {"channels", c.channels},
           {"order", c.order},
           {"generators", c.generators},
           {"dividend", c.dividend},
           {"strategy", c.strategy},
           {"degree_min", c.degree_min},
           {"degree_max", c.degree_max},
           {"degree_cap", c.degree_cap},
           {"i", c.i},
           {"j", c.j},
           {"schatten_p", c.schatten_p},
           {"tolerance", c.tolerance},
           {"window_start", c.window_start ? json(*c.window_start) : json(nullptr)},
           {"output", c.output}};
}

namespace {

template <class T>
void read(const json& j, const char* key, T& into) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return;
  try {
    into = it->get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("config field '") + key + "' has the wrong type");
  }
}

}  // namespace

void from_json(const json& j, JobConfig& c) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  static const std::set<std::string> known = {"task",       "variables",  "channels", "order", "generators",
                                              "dividend",   "strategy",   "degree_min", "degree_max",
                                              "degree_cap", "i",          "j",        "schatten_p",
                                              "tolerance",  "window_start", "output"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ValidationError("unknown config field '" + key + "'");
  }
  read(j, "task", c.task);
  read(j, "variables", c.variables);
  read(j, "channels", c.channels);
  read(j, "order", c.order);
  read(j, "generators", c.generators);
  read(j, "dividend", c.dividend);
  read(j, "strategy", c.strategy);
  read(j, "degree_min", c.degree_min);
  read(j, "degree_max", c.degree_max);
  read(j, "degree_cap", c.degree_cap);
  read(j, "i", c.i);
  read(j, "j", c.j);
  read(j, "schatten_p", c.schatten_p);
  read(j, "tolerance", c.tolerance);
  if (j.contains("window_start") && !j["window_start"].is_null()) {
    int w = 0;
    read(j, "window_start", w);
    c.window_start = w;
  } else {
    c.window_start.reset();
  }
  read(j, "output", c.output);
}

const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> tasks = {"divide",  "groebner",   "stability-scan", "rescale",
                                                 "comm-report", "estimate41", "reduce5",    "hilbert"};
  return tasks;
}

void validate(const JobConfig& c) {
  const auto& tasks = known_tasks();
  if (std::find(tasks.begin(), tasks.end(), c.task) == tasks.end()) {
    throw ValidationError("unknown task '" + c.task + "'");
  }
  const Ambient ambient(c.variables, c.channels);  // validates names and r
  const int d = static_cast<int>(ambient.nvars());
  const bool scalar_only = c.task == "divide" || c.task == "groebner" || c.task == "rescale";
  if (scalar_only && c.channels != 1) throw ValidationError("task '" + c.task + "' needs channels = 1");
  const bool needs_generators = c.task != "comm-report" && c.task != "estimate41" && c.task != "hilbert";
  if (needs_generators && c.generators.empty()) throw ValidationError("task '" + c.task + "' needs generators");
  if (c.task == "divide") {
    if (c.dividend.empty()) throw ValidationError("divide needs a dividend");
    Strategy::parse(c.strategy);
  }
  if (c.degree_min < 0 || c.degree_max < c.degree_min) throw ValidationError("need 0 <= degree_min <= degree_max");
  if (c.degree_cap < 1) throw ValidationError("degree_cap must be at least 1");
  if (c.task == "reduce5" && c.degree_cap < 4) throw ValidationError("reduce5 needs degree_cap >= 4");
  if (c.i < 1 || c.i > d || c.j < 1 || c.j > d) throw ValidationError("shift indices i, j must lie in 1..d");
  if (!(c.schatten_p > 0.0)) throw ValidationError("schatten_p must be positive");
  if (!(c.tolerance > 0.0) || c.tolerance >= 1.0) throw ValidationError("tolerance must lie in (0, 1)");
  if (c.window_start && *c.window_start < 0) throw ValidationError("window_start must be non-negative");
}

namespace {

std::string opt_double(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::vector<CPoly> floats(const std::vector<QPoly>& ps) {
  std::vector<CPoly> out;
  for (const auto& p : ps) out.push_back(to_float(p));
  return out;
}

struct Context {
  Ambient ambient;
  MonomialOrder order;
  std::vector<QPoly> generators;
};

Context context_of(const JobConfig& c) {
  Ambient ambient(c.variables, c.channels);
  MonomialOrder order = c.order.empty() ? MonomialOrder::graded_lex(ambient.nvars())
                                        : MonomialOrder::parse(c.order, ambient);
  std::vector<QPoly> gens = parse_polynomials(c.generators, ambient);
  return {std::move(ambient), std::move(order), std::move(gens)};
}

json poly_list(const std::vector<QPoly>& ps, const MonomialOrder& order) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p, order));
  return out;
}

std::map<std::string, std::string> run_divide(const JobConfig& c, const Context& ctx) {
  const QPoly h = parse_polynomial(c.dividend, ctx.ambient);
  const Strategy strategy = Strategy::parse(c.strategy);
  const auto result = divide(h, ctx.generators, ctx.order, strategy);

  std::ostringstream trace;
  for (const auto& step : result.trace) {
    json line{{"step", step.index},
              {"term", term_to_string(step.term, ctx.ambient)},
              {"action", step.divisor ? "reduce" : "remainder"},
              {"divisor", step.divisor ? json(*step.divisor + 1) : json(nullptr)},
              {"p_l1", step.p_l1},
              {"p_h2", step.p_h2}};
    if (step.residual_leading) line["residual_leading"] = monomial_to_string(*step.residual_leading, ctx.ambient);
    if (step.term_height) line["term_height"] = *step.term_height;
    if (step.residual_height) line["residual_height"] = *step.residual_height;
    trace << line.dump() << '\n';
  }

  const QPoly back = recombine(std::span<const QPoly>(result.quotients), std::span<const QPoly>(ctx.generators),
                               result.remainder);
  if (!(back == h)) throw AssertionFailure("division identity h = sum a_i f_i + r failed");
  if (!is_fully_reduced(result.remainder, std::span<const QPoly>(ctx.generators), ctx.order)) {
    throw AssertionFailure("remainder has a term divisible by a leading term");
  }

  json summary{{"task", "divide"},
               {"order", ctx.order.to_string(ctx.ambient)},
               {"strategy", strategy.name()},
               {"dividend", to_string(h, ctx.order)},
               {"divisors", poly_list(ctx.generators, ctx.order)},
               {"quotients", poly_list(result.quotients, ctx.order)},
               {"remainder", to_string(result.remainder, ctx.order)},
               {"steps", result.trace.size()},
               {"identity_holds", true}};
  return {{"trace.jsonl", trace.str()}, {"result.json", summary.dump(2) + "\n"}};
}

std::map<std::string, std::string> run_groebner(const Context& ctx) {
  const GroebnerBasis gb = buchberger(ctx.generators, ctx.order);
  if (!is_groebner_basis(gb.generators, gb.order)) throw AssertionFailure("Buchberger output failed the S-pair test");
  json out{{"task", "groebner"},
           {"order", ctx.order.to_string(ctx.ambient)},
           {"input", poly_list(ctx.generators, ctx.order)},
           {"input_is_groebner_basis", is_groebner_basis(ctx.generators, ctx.order)},
           {"basis", poly_list(gb.generators, ctx.order)},
           {"zero_dimensional", is_zero_dimensional(gb)}};
  std::string text;
  for (const auto& g : gb.generators) text += to_string(g, ctx.order) + "\n";
  return {{"groebner.json", out.dump(2) + "\n"}, {"basis.txt", text}};
}

std::map<std::string, std::string> run_stability(const JobConfig& c, const Context& ctx) {
  const auto report = stability_constant_scan(floats(ctx.generators), c.degree_min, c.degree_max, c.tolerance);
  std::ostringstream csv;
  csv << "n,dim_module,dim_ambient,c_n,lambda_min,lambda_max,envelope,growth_exponent\n";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const auto& r = report.rows[k];
    csv << r.degree << ',' << r.dim_module << ',' << r.dim_ambient << ',' << opt_double(r.constant) << ','
        << opt_double(r.eigen_min) << ',' << format_double(r.eigen_max) << ',' << opt_double(report.envelope[k]) << ','
        << opt_double(report.growth_exponent) << '\n';
  }
  return {{"stability.csv", csv.str()}};
}

std::map<std::string, std::string> run_rescale(const Context& ctx) {
  const bool was_gb = is_groebner_basis(ctx.generators, ctx.order);
  GroebnerBasis basis{{}, ctx.order, false};
  if (was_gb) {
    for (const auto& g : ctx.generators) {
      if (!g.is_zero()) basis.generators.push_back(monic(g, ctx.order));
    }
  } else {
    basis = buchberger(ctx.generators, ctx.order);
  }
  const LambdaRescaling lam = rescale_lambdas(basis.generators, ctx.order);
  const GroebnerBasis scaled = rescale_ideal(basis, to_rationals(lam.by_variable));
  const auto rho = dominance_rho(scaled.generators, ctx.order);
  if (!rho) throw AssertionFailure("rescaled basis is not dominant");

  json seq = json::array();
  for (const auto& v : lam.sequence) seq.push_back(v.get_str());
  json by_var = json::object();
  for (std::size_t i = 0; i < lam.by_variable.size(); ++i) by_var[ctx.ambient.names()[i]] = lam.by_variable[i].get_str();
  json out{{"task", "rescale"},
           {"order", ctx.order.to_string(ctx.ambient)},
           {"input_is_groebner_basis", was_gb},
           {"basis", poly_list(basis.generators, ctx.order)},
           {"lambda_sequence", seq},
           {"lambda_by_variable", by_var},
           {"max_degree", lam.max_degree},
           {"monomial_count", lam.monomial_count.get_str()},
           {"coefficient_bound", lam.coefficient_bound.get_str()},
           {"rescaled_basis", poly_list(scaled.generators, ctx.order)},
           {"rho", rho->get_str()},
           {"rescaled_is_groebner_basis", true}};
  return {{"rescale.json", out.dump(2) + "\n"}};
}

std::map<std::string, std::string> run_comm(const JobConfig& c, const Context& ctx) {
  const auto frame = module_frame(floats(ctx.generators), ctx.ambient.nvars(), ctx.ambient.channels(), c.degree_cap,
                                  c.tolerance);
  const auto report = commutator_report(frame, static_cast<std::size_t>(c.i), static_cast<std::size_t>(c.j),
                                        c.schatten_p);
  std::ostringstream csv;
  csv << "n,dim_quotient,dim_module,quotient_norm,module_norm,full_norm,bound,quotient_schatten_block,"
         "quotient_partial_sum,module_schatten_block,module_partial_sum,tail_ratio\n";
  for (const auto& r : report.rows) {
    if (r.full_norm > r.bound + 1e-10) {
      throw AssertionFailure("commutator bound 2/(n+1) violated at degree " + std::to_string(r.degree));
    }
    csv << r.degree << ',' << r.dim_quotient << ',' << r.dim_module << ',' << format_double(r.quotient_norm) << ','
        << format_double(r.module_norm) << ',' << format_double(r.full_norm) << ',' << format_double(r.bound) << ','
        << format_double(r.quotient_schatten_block) << ',' << format_double(r.quotient_partial_sum) << ','
        << format_double(r.module_schatten_block) << ',' << format_double(r.module_partial_sum) << ','
        << opt_double(r.tail_ratio) << '\n';
  }
  return {{"commutators.csv", csv.str()}};
}

std::map<std::string, std::string> run_estimate(const JobConfig& c, const Context& ctx) {
  const auto frame = module_frame(floats(ctx.generators), ctx.ambient.nvars(), ctx.ambient.channels(), c.degree_cap,
                                  c.tolerance);
  const auto report = adjoint_estimate(frame, static_cast<std::size_t>(c.j), c.schatten_p);
  std::ostringstream csv;
  csv << "n,value,scaled,schatten_block,partial_sum\n";
  for (const auto& r : report.rows) {
    csv << r.degree << ',' << format_double(r.value) << ',' << format_double(r.scaled) << ','
        << format_double(r.schatten_block) << ',' << format_double(r.partial_sum) << '\n';
  }
  json summary{{"task", "estimate41"},
               {"fitted_constant", report.fitted_constant},
               {"top_to_bottom_ratio", std::isfinite(report.top_to_bottom_ratio) ? json(report.top_to_bottom_ratio)
                                                                                 : json("inf")},
               {"stabilized", report.stabilized}};
  return {{"estimate41.csv", csv.str()}, {"estimate41.json", summary.dump(2) + "\n"}};
}

std::map<std::string, std::string> run_reduce(const JobConfig& c, const Context& ctx) {
  const auto gens = floats(ctx.generators);
  const auto quad = linear_to_quadratic(std::span<const QPoly>(ctx.generators));
  const ReductionReport r = reduce_linear_module(gens, c.degree_cap);
  struct Check {
    const char* name;
    double value;
    double tol;
  };
  const Check checks[] = {{"isometry", r.isometry_residual, 1e-12},
                          {"relation", r.relation_residual, 1e-12},
                          {"intertwining", r.intertwining_residual, 1e-10},
                          {"onto", r.onto_residual, 1e-10},
                          {"dprime", r.dprime_residual, 1e-10},
                          {"defect", r.defect_residual, 1e-12},
                          {"reducing", r.reducing.max_residual(), 1e-10}};
  json residuals = json::object();
  bool ok = true;
  for (const auto& ch : checks) {
    residuals[ch.name] = {{"residual", ch.value}, {"tolerance", ch.tol}, {"pass", ch.value <= ch.tol}};
    ok = ok && ch.value <= ch.tol;
  }
  json quad_text = json::array();
  for (const auto& g : quad) quad_text.push_back(to_string(g));
  json out{{"task", "reduce5"},
           {"degree_cap", c.degree_cap},
           {"quadratic_generators", quad_text},
           {"residuals", residuals},
           {"reducing_detail",
            {{"p_invariance", r.reducing.p_invariance},
             {"complement_invariance", r.reducing.complement_invariance},
             {"complement_y_degree", r.reducing.complement_y_degree}}},
           {"pass", ok}};
  if (!ok) throw AssertionFailure("reduction identities failed:\n" + out.dump(2));
  return {{"reduce5.json", out.dump(2) + "\n"}};
}

std::map<std::string, std::string> run_hilbert(const JobConfig& c, const Context& ctx) {
  const int d = static_cast<int>(ctx.ambient.nvars());
  int max_degree = 0;
  for (const auto& g : ctx.generators) max_degree = std::max(max_degree, g.total_degree());
  const int n0 = c.window_start.value_or(max_degree + d);
  const int last = std::max(c.degree_max, n0 + d + 2);

  std::vector<long> values;
  std::optional<GroebnerBasis> gb;
  if (ctx.ambient.channels() == 1) {
    gb = buchberger(ctx.generators, ctx.order);
    for (int n = 0; n <= last; ++n) values.push_back(static_cast<long>(hilbert_function(*gb, n)));
  } else {
    const auto frame = module_frame(floats(ctx.generators), ctx.ambient.nvars(), ctx.ambient.channels(), last,
                                    c.tolerance);
    for (int n = 0; n <= last; ++n) values.push_back(static_cast<long>(frame.dim_complement(n)));
  }
  const std::span<const long> window(values.data() + n0, static_cast<std::size_t>(d + 3));
  const int dim = hilbert_dimension_from_values(window, ctx.ambient.nvars(), n0);

  std::ostringstream csv;
  csv << "n,dim_quotient\n";
  for (int n = c.degree_min; n <= c.degree_max; ++n) csv << n << ',' << values[static_cast<std::size_t>(n)] << '\n';
  json out{{"task", "hilbert"}, {"dimension", dim}, {"window_start", n0}, {"window_end", n0 + d + 2}};
  if (gb) {
    out["zero_dimensional"] = is_zero_dimensional(*gb);
    out["basis"] = poly_list(gb->generators, ctx.order);
  }
  return {{"hilbert.csv", csv.str()}, {"hilbert.json", out.dump(2) + "\n"}};
}

}  // namespace

std::map<std::string, std::string> render_job(const JobConfig& c) {
  validate(c);
  const Context ctx = context_of(c);
  if (c.task == "divide") return run_divide(c, ctx);
  if (c.task == "groebner") return run_groebner(ctx);
  if (c.task == "stability-scan") return run_stability(c, ctx);
  if (c.task == "rescale") return run_rescale(ctx);
  if (c.task == "comm-report") return run_comm(c, ctx);
  if (c.task == "estimate41") return run_estimate(c, ctx);
  if (c.task == "reduce5") return run_reduce(c, ctx);
  return run_hilbert(c, ctx);
}

JobOutcome run_job(const JobConfig& config) {
  JobOutcome out;
  try {
    out.files = render_job(config);
  } catch (const ParseError& e) {
    out.code = ExitCode::parse;
    out.message = "parse error";
    if (e.line() > 0) out.message += " at line " + std::to_string(e.line());
    out.message += ", column " + std::to_string(e.column()) + ": " + e.what();
    return out;
  } catch (const ValidationError& e) {
    out.code = ExitCode::usage;
    out.message = std::string("invalid job: ") + e.what();
    return out;
  } catch (const Error& e) {
    out.code = ExitCode::assertion;
    out.message = std::string(config.task) + " failed: " + e.what();
    return out;
  }
  if (!config.output.empty()) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(config.output, ec);
    if (ec) {
      out.code = ExitCode::usage;
      out.message = "cannot create output directory '" + config.output + "': " + ec.message();
      return out;
    }
    for (const auto& [name, content] : out.files) {
      std::ofstream f(fs::path(config.output) / name, std::ios::binary);
      f << content;
      if (!f) {
        out.code = ExitCode::usage;
        out.message = "cannot write " + name;
        return out;
      }
    }
  }
  out.message = "ok";
  return out;
}

}  // namespace stabdiv
