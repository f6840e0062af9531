#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aoi/approx.hpp"
#include "aoi/exact.hpp"
#include "aoi/generate.hpp"
#include "aoi/hardness.hpp"
#include "aoi/io.hpp"
#include "aoi/transform.hpp"

namespace aoi::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string format_ratio(Wide total, Wide bound) {
  if (bound == 0) return total == 0 ? "1.000000" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(total) / static_cast<double>(bound));
  return buf;
}

DpOptions dp_options() {
  DpOptions options;
  if (const char* env = std::getenv("AOI_SCHED_STATE_CAP")) {
    std::uint64_t cap = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(ErrorKind::domain, "AOI_SCHED_STATE_CAP is not an unsigned integer");
    }
    options.state_cap = cap;
  }
  return options;
}

// Min-age input is solved through its doubled Min-WCS image.
struct Problem {
  AnyInstance original;
  WcsInstance wcs;
  bool is_age() const { return std::holds_alternative<MinAgeInstance>(original); }
  Int t0() const { return is_age() ? std::get<MinAgeInstance>(original).t0 : 0; }
};

Problem load_problem(const std::string& path, std::istream& in) {
  Problem p{parse_instance(read_input(path, in)), {}};
  if (p.is_age()) {
    p.wcs = to_wcs_special(std::get<MinAgeInstance>(p.original));
  } else {
    p.wcs = std::get<WcsInstance>(p.original);
  }
  return p;
}

Wide halve(Wide doubled) {
  if (doubled % 2 != 0) {
    throw std::logic_error("doubled age objective is odd: " + to_string(doubled));
  }
  return doubled / 2;
}

struct SolveOptions {
  std::string algorithm = "dp";
  double p = 0.57735;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
};

struct Solved {
  JobSchedule schedule;
  Wide total = 0;
  std::vector<Wide> trial_totals;
};

Solved solve_with(const WcsInstance& inst, const SolveOptions& opt) {
  Solved s;
  if (opt.algorithm == "dp") {
    auto r = solve_dp(inst, dp_options());
    s.schedule = std::move(r.schedule);
  } else if (opt.algorithm == "brute") {
    s.schedule = brute_force(inst).schedule;
  } else if (opt.algorithm == "wc") {
    s.schedule = solve_min_wc(inst);
  } else if (opt.algorithm == "cs") {
    s.schedule = solve_min_cs_extended(inst);
  } else if (opt.algorithm == "approx") {
    auto r = solve_approx(inst, opt.p, opt.seed, opt.trials);
    s.schedule = std::move(r.best);
    s.trial_totals = std::move(r.totals);
  } else {
    throw Error(ErrorKind::domain, "unknown algorithm " + opt.algorithm);
  }
  s.total = evaluate_wcs(inst, s.schedule).total;
  return s;
}

void cmd_validate(const std::string& path, std::istream& in, std::ostream& out) {
  const auto inst = parse_instance(read_input(path, in));
  Json doc;
  doc["valid"] = true;
  doc["type"] = std::holds_alternative<MinAgeInstance>(inst) ? "min-age" : "min-wcs";
  out << doc.dump() << "\n";
}

void cmd_evaluate(const std::string& inst_path, const std::string& sched_path,
                  std::istream& in, std::ostream& out) {
  if (inst_path == "-" && sched_path == "-") {
    throw IoError("instance and schedule cannot both come from standard input");
  }
  const auto inst = parse_instance(read_input(inst_path, in));
  const std::string sched_text = read_input(sched_path, in);
  Json doc;
  if (const auto* age = std::get_if<MinAgeInstance>(&inst)) {
    doc["age"] = wide_to_json(evaluate_age(*age, parse_age_schedule(sched_text)));
  } else {
    const auto b = evaluate_wcs(std::get<WcsInstance>(inst), parse_job_schedule(sched_text));
    doc["wc"] = wide_to_json(b.wc);
    doc["cs"] = wide_to_json(b.cs);
    doc["constant"] = wide_to_json(b.constant);
    doc["total"] = wide_to_json(b.total);
  }
  out << doc.dump() << "\n";
}

void cmd_transform(const std::string& path, std::istream& in, std::ostream& out) {
  const auto inst = parse_instance(read_input(path, in));
  const auto* age = std::get_if<MinAgeInstance>(&inst);
  if (!age) throw Error(ErrorKind::validation, "transform expects a min-age instance");
  out << serialize_instance(to_wcs_special(*age));
}

void cmd_solve(const std::string& path, const SolveOptions& opt, std::istream& in,
               std::ostream& out) {
  const Problem prob = load_problem(path, in);
  const Solved s = solve_with(prob.wcs, opt);
  Json doc;
  doc["algorithm"] = opt.algorithm;
  if (prob.is_age()) {
    doc["age"] = wide_to_json(halve(s.total));
    doc["wcs"] = wide_to_json(s.total);
  } else {
    const auto b = evaluate_wcs(prob.wcs, s.schedule);
    doc["total"] = wide_to_json(b.total);
    doc["wc"] = wide_to_json(b.wc);
    doc["cs"] = wide_to_json(b.cs);
    doc["constant"] = wide_to_json(b.constant);
  }
  doc["lower_bound"] = wide_to_json(lower_bound(prob.wcs));
  if (opt.algorithm == "approx") {
    doc["p"] = opt.p;
    doc["seed"] = opt.seed;
    Json totals = Json::array();
    for (Wide t : s.trial_totals) totals.push_back(wide_to_json(t));
    doc["trial_totals"] = std::move(totals);
  }
  if (prob.is_age()) {
    doc["times"] = job_to_age(s.schedule, prob.t0()).times;
  } else {
    doc["slots"] = s.schedule.slots;
  }
  out << doc.dump() << "\n";
}

struct GenerateOptions {
  std::string kind = "random";
  RandomMinAgeSpec random;
  std::size_t n = 2;
  Int heavy = 0;  // 0: default_heavy_weight(n)
  std::vector<Int> elems;
  Int b = 0;
};

void cmd_generate(const GenerateOptions& opt, std::ostream& out) {
  if (opt.kind == "random") {
    out << serialize_instance(generate_random_min_age(opt.random));
  } else if (opt.kind == "adversarial-wc") {
    out << serialize_instance(gen_adversarial_wc(opt.n));
  } else if (opt.kind == "adversarial-cs") {
    const Int heavy = opt.heavy > 0 ? opt.heavy : default_heavy_weight(opt.n);
    out << serialize_instance(gen_adversarial_cs(opt.n, heavy));
  } else if (opt.kind == "hardness-3p") {
    const auto hard = pipeline_3p_to_min_age({opt.elems, opt.b});
    Json doc;
    doc["instance"] = to_json(hard.instance);
    doc["age_threshold"] = wide_to_json(hard.age_threshold);
    out << doc.dump() << "\n";
  } else {
    throw Error(ErrorKind::domain, "unknown generator kind " + opt.kind);
  }
}

struct BenchOptions {
  std::vector<std::string> files;
  std::vector<std::string> algorithms{"wc", "cs", "approx"};
  SolveOptions solve;
  std::string out = "-";
  bool timing = true;
};

struct BenchRow {
  std::string instance_id;
  std::string algorithm;
  std::string p;
  std::string seed;
  std::uint64_t seed_order = 0;
  Wide total = 0;
  Wide bound = 0;
  std::int64_t wall_ns = 0;
};

void cmd_bench(const BenchOptions& opt, std::istream& in, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (const auto& file : opt.files) {
    const std::string id =
        file == "-" ? "stdin" : std::filesystem::path(file).stem().string();
    const Problem prob = load_problem(file, in);
    const Wide bound = lower_bound(prob.wcs);
    for (const auto& alg : opt.algorithms) {
      const bool randomized = alg == "approx";
      const std::uint64_t runs = randomized ? opt.solve.trials : 1;
      for (std::uint64_t k = 0; k < runs; ++k) {
        SolveOptions one = opt.solve;
        one.algorithm = alg;
        one.seed = opt.solve.seed + k;
        one.trials = 1;
        const auto start = Clock::now();
        const Solved s = solve_with(prob.wcs, one);
        const auto elapsed = Clock::now() - start;
        BenchRow row;
        row.instance_id = id;
        row.algorithm = alg;
        row.p = randomized ? format_double(one.p) : "";
        row.seed = randomized ? std::to_string(one.seed) : "";
        row.seed_order = k;
        row.total = s.total;
        row.bound = bound;
        row.wall_ns = opt.timing
                          ? std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()
                          : 0;
        rows.push_back(std::move(row));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance_id, a.algorithm, a.seed_order) <
           std::tie(b.instance_id, b.algorithm, b.seed_order);
  });

  std::ostringstream csv;
  csv << "instance_id,algorithm,p,seed,total,lower_bound,ratio,wall_ns\n";
  for (const auto& r : rows) {
    csv << r.instance_id << ',' << r.algorithm << ',' << r.p << ',' << r.seed << ','
        << to_string(r.total) << ',' << to_string(r.bound) << ','
        << format_ratio(r.total, r.bound) << ',' << r.wall_ns << '\n';
  }
  if (opt.out == "-") {
    out << csv.str();
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw IoError("cannot write " + opt.out);
    file << csv.str();
  }
}

void report(std::ostream& err, std::string_view kind, const std::string& message,
            const std::vector<std::string>& details = {}) {
  Json doc;
  doc["error"] = kind;
  doc["message"] = message;
  if (!details.empty()) doc["details"] = details;
  err << doc.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimum-age TDMA scheduling and Min-WCS solvers", "aoi-sched"};
  app.require_subcommand(1);

  std::string inst_path, sched_path;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("instance", inst_path, "Instance file or -")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Objective of a schedule");
  evaluate->add_option("instance", inst_path, "Instance file or -")->required();
  evaluate->add_option("schedule", sched_path, "Schedule file or -")->required();

  auto* transform = app.add_subcommand("transform", "Min-age instance to min-wcs");
  transform->add_option("instance", inst_path, "Instance file or -")->required();

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", inst_path, "Instance file or -")->required();
  solve->add_option("--algorithm", solve_opt.algorithm)
      ->check(CLI::IsMember({"dp", "brute", "wc", "cs", "approx"}))
      ->capture_default_str();
  solve->add_option("--p", solve_opt.p, "Gap probability for approx")
      ->capture_default_str();
  solve->add_option("--seed", solve_opt.seed)->capture_default_str();
  solve->add_option("--trials", solve_opt.trials)->capture_default_str();

  GenerateOptions gen_opt;
  std::string elems_text;
  auto* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("--kind", gen_opt.kind)
      ->check(CLI::IsMember({"random", "adversarial-wc", "adversarial-cs", "hardness-3p"}))
      ->capture_default_str();
  generate->add_option("--pairs", gen_opt.random.pairs)->capture_default_str();
  generate->add_option("--max-chain", gen_opt.random.max_chain)->capture_default_str();
  generate->add_option("--max-gap", gen_opt.random.max_gap)->capture_default_str();
  generate->add_option("--seed", gen_opt.random.seed)->capture_default_str();
  generate->add_option("--n", gen_opt.n)->capture_default_str();
  generate->add_option("--wh", gen_opt.heavy, "Heavy weight (default n^3 * 10^6)");
  generate->add_option("--elems", elems_text, "Comma-separated 3-partition elements");
  generate->add_option("--b", gen_opt.b, "3-partition target sum");

  BenchOptions bench_opt;
  std::string algorithms_text = "wc,cs,approx";
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Benchmark algorithms, CSV output");
  bench->add_option("instances", bench_opt.files, "Instance files")->required();
  bench->add_option("--algorithms", algorithms_text)->capture_default_str();
  bench->add_option("--p", bench_opt.solve.p)->capture_default_str();
  bench->add_option("--seed", bench_opt.solve.seed)->capture_default_str();
  bench->add_option("--trials", bench_opt.solve.trials)->capture_default_str();
  bench->add_option("--out", bench_opt.out, "CSV path, - for standard output")
      ->capture_default_str();
  bench->add_flag("--no-timing", no_timing, "Write 0 in wall_ns");

  std::vector<const char*> argv{"aoi-sched"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*validate) {
      cmd_validate(inst_path, in, out);
    } else if (*evaluate) {
      cmd_evaluate(inst_path, sched_path, in, out);
    } else if (*transform) {
      cmd_transform(inst_path, in, out);
    } else if (*solve) {
      cmd_solve(inst_path, solve_opt, in, out);
    } else if (*generate) {
      if (!elems_text.empty()) {
        for (const auto& part : CLI::detail::split(elems_text, ',')) {
          gen_opt.elems.push_back(std::stoll(part));
        }
      }
      cmd_generate(gen_opt, out);
    } else if (*bench) {
      bench_opt.algorithms = CLI::detail::split(algorithms_text, ',');
      for (const auto& alg : bench_opt.algorithms) {
        if (alg != "dp" && alg != "brute" && alg != "wc" && alg != "cs" && alg != "approx") {
          throw Error(ErrorKind::domain, "unknown algorithm " + alg);
        }
      }
      if (bench_opt.solve.trials == 0) throw Error(ErrorKind::domain, "trials must be at least 1");
      bench_opt.timing = !no_timing;
      cmd_bench(bench_opt, in, out);
    }
  } catch (const Error& e) {
    report(err, to_string(e.kind()), e.what(), e.details());
    return e.kind() == ErrorKind::capacity ? 3 : 2;
  } catch (const IoError& e) {
    report(err, "io", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    report(err, "validation", std::string("not an integer: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace aoi::cli
