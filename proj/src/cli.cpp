#include "isect/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "isect/algebra.hpp"
#include "isect/serialize.hpp"
#include "isect/verify.hpp"

namespace isect {

namespace {

const std::vector<std::string> kCommands = {
    "fan",       "hilbert-basis", "generators", "fund",
    "cf",        "hilbert-series", "canonical",  "gorenstein",
    "count",     "bound",          "dimension",  "fanlinear-check",
    "normality", "verify"};

Int parse_int(const std::string& tok, const std::string& flag) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw Error("UsageError", "flag " + flag + ": '" + tok +
                                  "' is not an integer");
  return value;
}

std::vector<Int> parse_int_vector(const std::string& csv,
                                  const std::string& flag) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok, flag));
  if (out.empty())
    throw Error("UsageError", "flag " + flag + " needs at least one entry");
  return out;
}

Rational parse_rational(const json& j, const std::string& context) {
  if (j.is_number_integer()) {
    Int v = j.get<Int>();
    if (v < 0) throw Error("UsageError", context + ": negative coefficient");
    return Rational(v, 1);
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return Rational(parse_int(s, context), 1);
    return Rational(parse_int(s.substr(0, slash), context),
                    parse_int(s.substr(slash + 1), context));
  }
  throw Error("UsageError",
              context + ": coefficients must be integers or \"p/q\" strings");
}

JobSpec job_from_json(const json& j) {
  JobSpec job;
  if (!j.contains("command") || !j["command"].is_string())
    throw Error("UsageError", "input file: missing \"command\"");
  job.command = j["command"].get<std::string>();
  if (j.contains("a")) job.a = j["a"].get<std::vector<Int>>();
  if (j.contains("b")) job.b = j["b"].get<std::vector<Int>>();
  if (j.contains("options")) {
    const json& o = j["options"];
    if (o.contains("degree_cap")) job.options.degree_cap = o["degree_cap"];
    if (o.contains("rs_bound")) job.options.rs_bound = o["rs_bound"];
    if (o.contains("m_bound")) job.options.m_bound = o["m_bound"];
    if (o.contains("multiplier_bound"))
      job.options.multiplier_bound = o["multiplier_bound"];
    if (o.contains("format")) job.options.format = o["format"];
    if (o.contains("fan_linear")) {
      std::vector<std::pair<Rational, Rational>> coeffs;
      for (const json& pair : o["fan_linear"]) {
        if (!pair.is_array() || pair.size() != 2)
          throw Error("UsageError",
                      "fan_linear entries must be [c_r, c_s] pairs");
        coeffs.emplace_back(parse_rational(pair[0], "fan_linear"),
                            parse_rational(pair[1], "fan_linear"));
      }
      job.options.fan_linear = std::move(coeffs);
    }
  }
  return job;
}

void validate_job(const JobSpec& job) {
  if (std::find(kCommands.begin(), kCommands.end(), job.command) ==
      kCommands.end())
    throw Error("UsageError", "unknown command '" + job.command + "'");
  if (job.a.empty() || job.b.empty())
    throw Error("UsageError", "command " + job.command +
                                  " requires --a and --b vectors");
  if (job.options.format != "text" && job.options.format != "json")
    throw Error("UsageError", "--format must be text or json");
  if (job.options.degree_cap < 0 || job.options.rs_bound < 0 ||
      job.options.m_bound < 0 || job.options.multiplier_bound < 1)
    throw Error("UsageError", "bounds must be nonnegative (multiplier >= 1)");
}

}  // namespace

JobSpec parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"intersection algebra of two principal monomial ideals"};
  app.require_subcommand(0, 1);

  std::string input_file;
  app.add_option("--input", input_file, "JSON job file");

  JobSpec job;
  std::string a_csv, b_csv;
  for (const std::string& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--a", a_csv, "exponents of I's generator (comma separated)");
    sub->add_option("--b", b_csv, "exponents of J's generator (comma separated)");
    sub->add_option("--cap", job.options.degree_cap,
                    "total-degree cap for series output");
    sub->add_option("--box", job.options.rs_bound, "r,s box bound");
    sub->add_option("--m-bound", job.options.m_bound, "m box bound (0 = auto)");
    sub->add_option("--multiplier", job.options.multiplier_bound,
                    "multiplier bound for saturation checks");
    sub->add_option("--format", job.options.format, "text or json");
    sub->add_option("--input", input_file, "JSON job file");
    sub->parse_complete_callback([&job, name] { job.command = name; });
  }

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw Error("UsageError", e.what());
  }

  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw Error("UsageError", "cannot open " + input_file);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw Error("UsageError", std::string("input file: ") + e.what());
    }
    JobSpec from_file = job_from_json(j);
    if (!job.command.empty()) from_file.command = job.command;
    if (!a_csv.empty()) from_file.a = parse_int_vector(a_csv, "--a");
    if (!b_csv.empty()) from_file.b = parse_int_vector(b_csv, "--b");
    validate_job(from_file);
    return from_file;
  }

  if (job.command.empty())
    throw Error("UsageError", "no command given (try --help)");
  if (a_csv.empty() || b_csv.empty())
    throw Error("UsageError", "command " + job.command +
                                  " requires --a and --b (or --input)");
  job.a = parse_int_vector(a_csv, "--a");
  job.b = parse_int_vector(b_csv, "--b");
  validate_job(job);
  return job;
}

namespace {

std::string render(const json& payload, const std::string& text,
                   const JobSpec& job) {
  if (job.options.format == "json") {
    json out = payload;
    out["command"] = job.command;
    out["a"] = job.a;
    out["b"] = job.b;
    return out.dump(2) + "\n";
  }
  return text;
}

std::vector<FanLinearFunction> job_functions(const JobSpec& job,
                                             const ExponentPair& ep,
                                             const Fan& fan) {
  if (job.options.fan_linear) {
    FanLinearFunction f;
    f.cone_coeffs = *job.options.fan_linear;
    if (f.cone_coeffs.size() != fan.cones.size())
      throw Error("UsageError",
                  "fan_linear needs one [c_r, c_s] pair per cone (" +
                      std::to_string(fan.cones.size()) + ")");
    return {f};
  }
  std::vector<FanLinearFunction> fs;
  for (std::size_t t = 0; t < ep.size(); ++t)
    fs.push_back(max_form_function(ep, t));
  return fs;
}

}  // namespace

RunResult run(const JobSpec& job) {
  validate_job(job);

  if (job.command == "bound") {
    if (job.a.size() != 1 || job.b.size() != 1)
      throw Error("NotApplicable", "bound is defined for n = 1 only");
    BoundResult res = minimal_count_bound(job.a[0], job.b[0]);
    json payload{{"bound", res.bound}, {"q", res.q}, {"l", res.l}};
    std::string text = "bound: " + std::to_string(res.bound) +
                       " (q=" + std::to_string(res.q) +
                       ", l=" + std::to_string(res.l) + ")\n";
    return {0, render(payload, text, job)};
  }

  ExponentPair ep = normalize_fan_order(job.a, job.b);
  Fan fan = build_fan(ep);

  BoxSpec box = default_box(ep);
  box.rs_bound = job.options.rs_bound;
  if (job.options.m_bound > 0) box.m_bound = job.options.m_bound;
  box.multiplier_bound = job.options.multiplier_bound;

  std::ostringstream text;
  json payload;

  if (job.command == "fan") {
    payload["fan"] = to_json(fan);
    std::vector<std::size_t> perm1;
    for (std::size_t p : ep.perm) perm1.push_back(p + 1);
    payload["perm"] = perm1;
    text << "fan order: a=" << vector_string(ep.a)
         << " b=" << vector_string(ep.b) << "\n";
    for (const Cone2D& c : fan.cones) {
      text << "C" << c.index << ": rays (" << c.ray_high.r << ","
           << c.ray_high.s << ") -> (" << c.ray_low.r << "," << c.ray_low.s
           << ")";
      if (c.degenerate) text << " [degenerate]";
      text << "\n";
    }
  } else if (job.command == "hilbert-basis") {
    auto bases = hilbert_bases(fan);
    payload["hilbert_bases"] = to_json(bases);
    for (const HilbertBasis& hb : bases) {
      text << "H" << hb.cone_index << " = {";
      for (std::size_t i = 0; i < hb.points.size(); ++i) {
        if (i > 0) text << ", ";
        text << "(" << hb.points[i].r << "," << hb.points[i].s << ")";
      }
      text << "}\n";
    }
  } else if (job.command == "generators") {
    auto gens = generators(ep);
    json arr = json::array();
    for (const GradedMonomial& g : gens) arr.push_back(to_json(g));
    payload["generators"] = arr;
    for (const GradedMonomial& g : gens) text << monomial_string(g) << "\n";
  } else if (job.command == "fund") {
    FundSet fund = fund_elements(ep);
    payload["fund"] = to_json(fund);
    for (std::size_t t = 0; t < fund.alphas.size(); ++t)
      text << "alpha_" << t + 1 << " = " << vector_string(fund.alphas[t].vec)
           << "\n";
    for (const FundSet::Beta& b : fund.betas)
      text << "beta(" << b.point.r << "," << b.point.s << ") = "
           << vector_string(b.elem.vec) << "  [cone " << b.cone_index << "]\n";
  } else if (job.command == "cf") {
    auto cf = cf_elements(ep);
    json arr = json::array();
    for (const EPhiElement& e : cf) arr.push_back(to_json(e));
    payload["cf"] = arr;
    for (const EPhiElement& e : cf) text << vector_string(e.vec) << "\n";
  } else if (job.command == "hilbert-series") {
    auto factors = hilbert_series_denominator(ep);
    auto numerator = hilbert_series_numerator_truncated(ep, job.options.degree_cap);
    payload["denominator_factors"] = to_json(factors);
    payload["numerator_coefficients"] = to_json(numerator);
    payload["degree_cap"] = job.options.degree_cap;
    text << "denominator: ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) text << " * ";
      text << factor_string(factors[i]);
    }
    text << "\nnumerator (through total degree " << job.options.degree_cap
         << "): " << series_string(numerator) << "\n";
  } else if (job.command == "canonical") {
    auto gens = canonical_ideal_generators(ep);
    json arr = json::array();
    for (const GradedMonomial& g : gens) arr.push_back(to_json(g));
    payload["canonical_generators"] = arr;
    for (const GradedMonomial& g : gens) text << monomial_string(g) << "\n";
  } else if (job.command == "gorenstein") {
    GorensteinResult res = is_gorenstein(ep);
    payload["gorenstein"] = res.gorenstein;
    if (res.witness) payload["witness"] = to_json(*res.witness);
    text << "gorenstein: " << (res.gorenstein ? "true" : "false") << "\n";
    if (res.witness)
      text << "witness: " << vector_string(res.witness->vec) << "\n";
  } else if (job.command == "count") {
    Int count = count_minimal(ep);
    payload["count"] = count;
    text << "count: " << count << "\n";
  } else if (job.command == "dimension") {
    Int dim = krull_dimension(ep);
    payload["dimension"] = dim;
    text << "dimension: " << dim << "\n";
  } else if (job.command == "fanlinear-check") {
    if (!job.options.fan_linear)
      throw Error("UsageError",
                  "fanlinear-check needs fan_linear coefficients (--input)");
    auto fs = job_functions(job, ep, fan);
    FanLinearCheck res = check_fan_linear(fs.front(), fan, box.rs_bound);
    payload["verified"] = res.ok;
    payload["certified"] =
        res.exact_subadditivity ? "exact"
                                : "box:" + std::to_string(res.box_bound);
    if (res.violation) {
      payload["violation"] = {{"kind", res.violation->kind},
                              {"p1", to_json(res.violation->p1)},
                              {"p2", to_json(res.violation->p2)},
                              {"detail", res.violation->detail}};
    }
    text << "fan-linear: " << (res.ok ? "true" : "false");
    if (res.ok)
      text << (res.exact_subadditivity
                   ? " (subadditivity exact)"
                   : " (verified up to bound " +
                         std::to_string(res.box_bound) + ")");
    text << "\n";
    if (res.violation)
      text << "violation [" << res.violation->kind << "] at ("
           << res.violation->p1.r << "," << res.violation->p1.s << ") + ("
           << res.violation->p2.r << "," << res.violation->p2.s
           << "): " << res.violation->detail << "\n";
    return {res.ok ? 0 : 4, render(payload, text.str(), job)};
  } else if (job.command == "normality") {
    NormalityResult res =
        job.options.fan_linear
            ? normality_check(job_functions(job, ep, fan), fan,
                              std::min<Int>(box.rs_bound, 12),
                              box.multiplier_bound)
            : normality_check(ep, std::min<Int>(box.rs_bound, 12),
                              box.multiplier_bound);
    payload["verified"] = res.normal;
    payload["box"] = res.box_bound;
    payload["multiplier_bound"] = res.multiplier_bound;
    if (res.counterexample) {
      payload["counterexample"] = {{"z", res.counterexample->z},
                                   {"multiplier", res.counterexample->multiplier}};
    }
    text << "normal (box " << res.box_bound << ", multipliers up to "
         << res.multiplier_bound
         << "): " << (res.normal ? "true" : "false") << "\n";
    if (res.counterexample)
      text << "counterexample: z = " << vector_string(res.counterexample->z)
           << " with multiplier " << res.counterexample->multiplier << "\n";
    return {res.normal ? 0 : 4, render(payload, text.str(), job)};
  } else if (job.command == "verify") {
    VerifyReport report = run_verify(ep, box, job.options.degree_cap);
    payload["verified"] = report.all_pass();
    payload["checks"] = to_json(report);
    for (const VerifyCheck& c : report.checks) {
      text << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << "  "
           << c.name << ": " << c.detail << "\n";
    }
    text << "verified: " << (report.all_pass() ? "true" : "false") << "\n";
    return {report.all_pass() ? 0 : 4, render(payload, text.str(), job)};
  }

  return {0, render(payload, text.str(), job)};
}

}  // namespace isect
