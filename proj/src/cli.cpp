#include "sumcheck/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sumcheck/adversary.hpp"
#include "sumcheck/analysis.hpp"
#include "sumcheck/conformance.hpp"
#include "sumcheck/document.hpp"
#include "sumcheck/random_poly.hpp"

namespace sumcheck::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kJson };

struct Common {
  std::string format = "text";
  Format fmt() const { return format == "json" ? Format::kJson : Format::kText; }
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

InstanceDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance_document(buf.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

std::vector<VarId> parse_var_list(const std::string& text) {
  std::vector<VarId> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    VarId v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw UsageError("invalid variable id '" + item + "' in schedule");
    }
    out.push_back(v);
  }
  return out;
}

std::string join_vars(const std::vector<VarId>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "]";
}

std::string join_elements(const std::vector<FieldElement>& es) {
  std::string out = "{";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? "," : "") + std::to_string(es[i].value());
  return out + "}";
}

std::string describe_instance(const SumcheckInstance& inst) {
  return "F_" + std::to_string(inst.p.modulus().value()) + "  H=" + join_elements(inst.H) +
         "  p=" + to_string(inst.p) + "  v=" + std::to_string(inst.v.value());
}

std::string yes_no(bool b) { return b ? "ok" : "FAIL"; }

// --------------------------------------------------------------------------
// run

struct RunOptions : Common {
  std::string instance;
  std::string prover = "honest";
  std::uint64_t seed = 0;
  std::string schedule;
  bool short_circuit = false;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  auto doc = load_document(o.instance);
  if (!o.schedule.empty()) doc.schedule = parse_var_list(o.schedule);
  const auto vars = schedule_or_default(doc);
  const auto prover = make_prover(o.prover);
  const Modulus m = validate(doc.instance);

  SplitMix64 rng(o.seed);
  std::vector<FieldElement> rs;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto [e, next] = sample_uniform(m, rng);
    rs.push_back(e);
    rng = next;
  }
  const auto t = sumcheck_run(*prover, prover->initial_state(), doc.instance, FieldElement::zero(m),
                              zip_schedule(vars, rs), o.short_circuit ? RunMode::kShortCircuit : RunMode::kFull);

  if (o.fmt() == Format::kJson) {
    Json j = Json::object();
    j["accept"] = t.accept;
    j["instance"] = to_json(doc);
    j["prover"] = prover->name();
    j["schedule"] = vars;
    j["seed"] = o.seed;
    j["transcript"] = to_json(t);
    out << j.dump(2) << "\n";
  } else {
    out << "instance  " << describe_instance(doc.instance) << "\n";
    out << "prover    " << prover->name() << "   schedule " << join_vars(vars) << "   seed " << o.seed << "\n";
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
      const auto& rd = t.rounds[i];
      out << "round " << i + 1 << "  x" << rd.variable << "  q = " << to_string(rd.message)
          << "  r' = " << rd.randomness.value() << "\n";
      out << "  checks: variable " << yes_no(rd.variable_ok) << ", degree " << yes_no(rd.degree_ok)
          << ", evaluation " << yes_no(rd.evaluation_ok) << "\n";
      if (rd.reduced_p) {
        out << "  next:   p' = " << to_string(*rd.reduced_p) << ", v' = " << rd.reduced_v->value() << "\n";
      }
      if (!rd.note.empty()) out << "  note:   " << rd.note << "\n";
    }
    if (t.base_evaluated) out << "base      " << yes_no(t.base_ok) << "\n";
    if (auto f = t.first_failure()) {
      const bool base = f->second == CheckKind::kBase;
      out << "first failure: " << check_name(f->second) << " check"
          << (base ? std::string(" (base case)") : " in round " + std::to_string(f->first + 1)) << "\n";
    }
    out << "verdict   " << (t.accept ? "accept" : "reject") << "\n";
  }
  return t.accept ? kExitOk : kExitReject;
}

// --------------------------------------------------------------------------
// membership

struct MembershipOptions : Common {
  std::string instance;
};

int cmd_membership(const MembershipOptions& o, std::ostream& out) {
  const auto doc = load_document(o.instance);
  const auto vars = default_schedule(doc.instance);
  const auto sum = schedule_sum(doc.instance, vars);
  const bool member = sum == doc.instance.v;
  if (o.fmt() == Format::kJson) {
    Json j = Json::object();
    j["claimed"] = doc.instance.v.value();
    j["member"] = member;
    j["sum"] = sum.value();
    out << j.dump(2) << "\n";
  } else {
    out << "instance  " << describe_instance(doc.instance) << "\n";
    out << "sum over H^" << vars.size() << " = " << sum.value() << ", claimed " << doc.instance.v.value() << "\n";
    out << (member ? "member" : "not a member") << "\n";
  }
  return member ? kExitOk : kExitReject;
}

// --------------------------------------------------------------------------
// verify-bounds / gen

struct GenOptions {
  std::string kind;
  std::uint32_t modulus = 5;
  std::uint32_t arity = 2;
  std::uint32_t max_degree = 2;
  std::uint32_t h_size = 2;
  std::uint64_t gen_seed = 0;
};

void add_gen_params(CLI::App* cmd, GenOptions& g) {
  cmd->add_option("--modulus", g.modulus, "Field prime")->capture_default_str();
  cmd->add_option("--arity", g.arity, "Number of variables")->capture_default_str();
  cmd->add_option("--max-degree", g.max_degree, "Maximum total degree")->capture_default_str();
  cmd->add_option("--h-size", g.h_size, "|H|")->capture_default_str();
  cmd->add_option("--gen-seed", g.gen_seed, "Generator seed")->capture_default_str();
}

SumcheckInstance generate(const GenOptions& g) {
  const auto kind = g.kind == "valid" ? InstanceKind::kValid : InstanceKind::kFalse;
  return generate_instance(kind, {g.modulus, g.arity, g.max_degree, g.h_size, g.gen_seed});
}

struct BoundsOptions : Common {
  std::string instance;
  GenOptions gen;
  std::string mode = "exact";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> provers;
  std::string schedule;
};

std::string probability_text(const StrategyResult& row) {
  if (row.error) return "-";
  if (const auto* e = std::get_if<ExactProbability>(&row.probability)) {
    return e->value().str() + "  [" + std::to_string(e->accepting) + " of " + std::to_string(e->total) + " runs]";
  }
  const auto& mc = std::get<MonteCarloEstimate>(row.probability);
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << mc.estimate << " [" << mc.lower << ", " << mc.upper << "] ("
     << mc.accepting << " of " << mc.trials << ")";
  return os.str();
}

int cmd_verify_bounds(const BoundsOptions& o, std::ostream& out) {
  if (o.instance.empty() == o.gen.kind.empty()) {
    throw UsageError("verify-bounds needs exactly one of an instance file or --gen valid|false");
  }
  InstanceDocument doc = o.instance.empty() ? InstanceDocument{generate(o.gen), std::nullopt}
                                            : load_document(o.instance);
  if (!o.schedule.empty()) doc.schedule = parse_var_list(o.schedule);
  const auto vars = schedule_or_default(doc);

  std::vector<std::shared_ptr<const ProverStrategy>> strategies;
  if (o.provers.empty()) {
    strategies = default_strategies(o.seed);
  } else {
    for (const auto& spec : o.provers) strategies.push_back(make_prover(spec));
  }
  AnalysisMode mode = ExactMode{};
  if (o.mode == "mc") mode = MonteCarloMode{o.trials, o.seed};
  const auto report = bound_report(doc.instance, vars, strategies, mode);

  if (o.fmt() == Format::kJson) {
    Json j = to_json(report);
    j["instance"] = to_json(doc);
    out << j.dump(2) << "\n";
  } else {
    out << "instance  " << describe_instance(doc.instance) << "\n";
    out << "digest    " << report.digest << "   schedule " << join_vars(report.schedule) << "\n";
    out << "member    " << (report.member ? "yes" : "no") << "   claim over schedule "
        << (report.claim_true ? "true" : "false") << "\n";
    out << "bound     deg(p)*n/|F| = " << report.bound.str()
        << (report.bound > Rational(1, 1) ? " (vacuous, > 1)" : "") << "\n\n";
    out << std::left << std::setw(14) << "strategy" << std::setw(40) << "acceptance" << "verdict\n";
    for (const auto& row : report.rows) {
      out << std::setw(14) << row.strategy << std::setw(40) << probability_text(row) << row.verdict;
      if (row.error) out << ": " << *row.error;
      out << "\n";
      if (!row.stats.first_failures.empty() || row.stats.accepting > 0) {
        out << "    accepting runs with honest/deviating first message: " << row.stats.accept_first_honest << "/"
            << row.stats.accept_first_deviating;
        for (const auto& [key, n] : row.stats.first_failures) {
          out << "; " << check_name(key.second);
          if (key.second != CheckKind::kBase) out << " in round " << key.first + 1;
          out << " failed " << n << "x";
        }
        out << "\n";
      }
    }
    out << "\nresult    " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kExitOk : kExitReject;
}

struct GenCommandOptions {
  GenOptions gen;
  std::string output;
};

int cmd_gen(const GenCommandOptions& o, std::ostream& out) {
  const auto text = serialize(InstanceDocument{generate(o.gen), std::nullopt});
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.output + "'");
    f << text;
  }
  return kExitOk;
}

// --------------------------------------------------------------------------
// conformance

struct ConformanceOptions : Common {
  std::uint64_t cases = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> laws;
};

int cmd_conformance(const ConformanceOptions& o, std::ostream& out) {
  std::vector<LawReport> reports;
  if (o.laws.empty()) {
    reports = check_all(o.cases, o.seed);
  } else {
    for (const auto& name : o.laws) {
      if (auto law = parse_law(name)) {
        reports.push_back(check_axiom(*law, o.cases, o.seed));
      } else if (auto lemma = parse_lemma(name)) {
        reports.push_back(check_derived_lemma(*lemma, o.cases, o.seed));
      } else {
        throw UsageError("unknown law '" + name + "'");
      }
    }
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (o.fmt() == Format::kJson) {
    Json j = Json::object();
    j["laws"] = Json::array();
    for (const auto& r : reports) j["laws"].push_back(to_json(r));
    j["pass"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << std::left << std::setw(24) << r.law << (r.passed ? "pass" : "FAIL") << "  (" << r.cases << " cases)\n";
      if (!r.passed) out << "  counterexample: " << r.counterexample.dump() << "\n";
    }
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed ? 1 : 0;
    out << passed << "/" << reports.size() << " laws pass\n";
  }
  return all ? kExitOk : kExitReject;
}

// --------------------------------------------------------------------------
// bench

struct BenchOptions : Common {
  std::string sizes = "5:2:2,13:3:3,101:4:4";
  std::uint64_t repeats = 5;
  std::uint64_t runs = 200;
  std::uint64_t seed = 0;
};

struct Triple {
  std::uint32_t p, n, d;
};

std::vector<Triple> parse_sizes(const std::string& text) {
  std::vector<Triple> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Triple t{};
    char c1 = 0, c2 = 0;
    std::istringstream is(item);
    if (!(is >> t.p >> c1 >> t.n >> c2 >> t.d) || c1 != ':' || c2 != ':' || !is.eof()) {
      throw UsageError("invalid size '" + item + "' (expected p:n:d)");
    }
    out.push_back(t);
  }
  if (out.empty()) throw UsageError("--sizes needs at least one p:n:d entry");
  return out;
}

struct Stat {
  double mean = 0, sd = 0;
};

Stat summarize(const std::vector<double>& xs) {
  Stat s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  for (double x : xs) s.sd += (x - s.mean) * (x - s.mean);
  s.sd = xs.size() > 1 ? std::sqrt(s.sd / static_cast<double>(xs.size() - 1)) : 0.0;
  return s;
}

template <class F>
double ops_per_second(std::uint64_t ops, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < ops; ++i) body(i);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return static_cast<double>(ops) / std::max(dt.count(), 1e-9);
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  if (o.repeats == 0 || o.runs == 0) throw UsageError("--repeats and --runs must be positive");
  const auto triples = parse_sizes(o.sizes);
  Json rows = Json::array();
  if (o.fmt() == Format::kText) {
    out << std::left << std::setw(6) << "p" << std::setw(4) << "n" << std::setw(4) << "d" << std::right
        << std::setw(24) << "protocol runs/s" << std::setw(24) << "eval/s" << std::setw(24) << "inst/s" << "\n";
  }
  for (const auto& t : triples) {
    const auto inst = generate_instance(InstanceKind::kValid,
                                        {t.p, t.n, t.d, std::min<std::uint32_t>(2, t.p), o.seed});
    const Modulus m = inst.p.modulus();
    const auto vars = default_schedule(inst);
    std::vector<VarId> all_vars;
    for (VarId v = 1; v <= t.n; ++v) all_vars.push_back(v);
    const HonestProver honest;

    // Fixed workload: randomness and points drawn once from the seed.
    SplitMix64 rng(derive_seed(o.seed, 1));
    std::vector<RoundSchedule> schedules;
    std::vector<Substitution> points, partial;
    for (std::uint64_t i = 0; i < o.runs; ++i) {
      std::vector<FieldElement> rs;
      for (std::size_t k = 0; k < vars.size(); ++k) rs.push_back(random_element(rng, m));
      schedules.push_back(zip_schedule(vars, rs));
      points.push_back(random_substitution(rng, m, {all_vars.begin(), all_vars.end()}));
      partial.push_back(random_substitution(rng, m, {all_vars.begin(), all_vars.begin() + all_vars.size() / 2}));
    }

    std::vector<double> proto, ev, in;
    std::uint64_t sink = 0;
    for (std::uint64_t rep = 0; rep < o.repeats; ++rep) {
      proto.push_back(ops_per_second(o.runs, [&](std::uint64_t i) {
        sink += sumcheck_run(honest, {}, inst, FieldElement::zero(m), schedules[i], RunMode::kShortCircuit).accept;
      }));
      ev.push_back(ops_per_second(o.runs, [&](std::uint64_t i) { sink += eval(inst.p, points[i]).value(); }));
      in.push_back(ops_per_second(o.runs, [&](std::uint64_t i) { sink += sumcheck::inst(inst.p, partial[i]).terms().size(); }));
    }
    if (sink == 0xdeadbeef) out << "";
    const auto sp = summarize(proto), se = summarize(ev), si = summarize(in);
    if (o.fmt() == Format::kJson) {
      auto stat = [](Stat s) { return Json{{"mean", s.mean}, {"sd", s.sd}}; };
      rows.push_back(Json{{"d", t.d},
                          {"eval_per_s", stat(se)},
                          {"inst_per_s", stat(si)},
                          {"n", t.n},
                          {"p", t.p},
                          {"protocol_runs_per_s", stat(sp)},
                          {"repeats", o.repeats}});
    } else {
      auto cell = [](Stat s) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(0) << s.mean << " +- " << s.sd;
        return os.str();
      };
      out << std::left << std::setw(6) << t.p << std::setw(4) << t.n << std::setw(4) << t.d << std::right
          << std::setw(24) << cell(sp) << std::setw(24) << cell(se) << std::setw(24) << cell(si) << "\n";
    }
  }
  if (o.fmt() == Format::kJson) out << Json{{"rows", rows}}.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumcheck protocol runner, membership oracle and soundness harness", "sumcheck"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run the protocol once and print the transcript");
  run_cmd->add_option("instance", run.instance, "Instance document (JSON)")->required();
  run_cmd->add_option("--prover", run.prover, "honest | sum-fix | root-plant | random:<seed>")->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Seed for the verifier randomness")->capture_default_str();
  run_cmd->add_option("--schedule", run.schedule, "Comma-separated variable order");
  run_cmd->add_flag("--short-circuit", run.short_circuit, "Stop at the first failed check");
  add_format(run_cmd, run);

  MembershipOptions mem;
  auto* mem_cmd = app.add_subcommand("membership", "Decide whether the claimed sum is correct");
  mem_cmd->add_option("instance", mem.instance, "Instance document (JSON)")->required();
  add_format(mem_cmd, mem);

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("verify-bounds", "Check completeness and the soundness bound");
  bounds_cmd->add_option("instance", bounds.instance, "Instance document (JSON)");
  bounds_cmd->add_option("--gen", bounds.gen.kind, "Generate a valid or false instance instead")
      ->check(CLI::IsMember({"valid", "false"}));
  add_gen_params(bounds_cmd, bounds.gen);
  bounds_cmd->add_option("--mode", bounds.mode, "exact enumeration or Monte-Carlo")
      ->check(CLI::IsMember({"exact", "mc"}))
      ->capture_default_str();
  bounds_cmd->add_option("--trials", bounds.trials, "Monte-Carlo trials")->capture_default_str()
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--seed", bounds.seed, "Monte-Carlo seed and random:<seed> prover seed")
      ->capture_default_str();
  bounds_cmd->add_option("--prover", bounds.provers, "Strategies to test (repeatable; default all)");
  bounds_cmd->add_option("--schedule", bounds.schedule, "Comma-separated variable order");
  add_format(bounds_cmd, bounds);

  ConformanceOptions conf;
  auto* conf_cmd = app.add_subcommand("conformance", "Check the structure laws on random inputs");
  conf_cmd->add_option("--cases", conf.cases, "Cases per law")->capture_default_str()->check(CLI::PositiveNumber);
  conf_cmd->add_option("--seed", conf.seed, "Seed")->capture_default_str();
  conf_cmd->add_option("--law", conf.laws, "Restrict to the named laws (repeatable)");
  add_format(conf_cmd, conf);

  GenCommandOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance document");
  gen_cmd->add_option("kind", gen.gen.kind, "valid | false")->required()->check(CLI::IsMember({"valid", "false"}));
  add_gen_params(gen_cmd, gen.gen);
  gen_cmd->add_option("-o,--output", gen.output, "Write to a file instead of standard output");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time protocol runs, eval and inst");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated p:n:d triples")->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Timed repetitions per row")->capture_default_str();
  bench_cmd->add_option("--runs", bench.runs, "Operations per repetition")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Workload seed")->capture_default_str();
  add_format(bench_cmd, bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    if (*mem_cmd) return cmd_membership(mem, out);
    if (*bounds_cmd) return cmd_verify_bounds(bounds, out);
    if (*conf_cmd) return cmd_conformance(conf, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sumcheck::cli
