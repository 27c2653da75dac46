#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "groupwalk/group.hpp"
#include "groupwalk/json_io.hpp"
#include "groupwalk/matrix.hpp"
#include "groupwalk/philox.hpp"
#include "groupwalk/random_dist.hpp"
#include "groupwalk/simulate.hpp"
#include "groupwalk/walk.hpp"

namespace {

using namespace groupwalk;

// Exit codes: 0 success, 1 check/assertion failure, 2 usage/parse/IO error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

struct GroupSourceOpts {
  long cyclic = -1;
  long dihedral = -1;
  long symmetric = -1;
  std::vector<std::string> product;
  std::string table;
  long assoc_limit = 512;
  bool force_assoc = false;
};

void add_group_source(CLI::App* cmd, GroupSourceOpts& o) {
  cmd->add_option("--cyclic", o.cyclic, "cyclic group Z_n of order n");
  cmd->add_option("--dihedral", o.dihedral, "dihedral group D_m of order 2m");
  cmd->add_option("--symmetric", o.symmetric, "symmetric group S_k, 1 <= k <= 8");
  cmd->add_option("--product", o.product, "direct product of two Cayley table files")
      ->expected(2);
  cmd->add_option("--table", o.table, "Cayley table file");
  cmd->add_option("--assoc-limit", o.assoc_limit,
                  "largest order for the O(n^3) associativity scan (default 512)");
  cmd->add_flag("--force-assoc", o.force_assoc, "run the associativity scan at any order");
}

ValidateOptions validate_options(const GroupSourceOpts& o) {
  ValidateOptions v;
  v.assoc_order_limit = static_cast<int>(o.assoc_limit);
  v.force_assoc = o.force_assoc;
  return v;
}

FiniteGroup resolve_group(const GroupSourceOpts& o) {
  const int sources = (o.cyclic >= 0) + (o.dihedral >= 0) + (o.symmetric >= 0) +
                      (!o.product.empty()) + (!o.table.empty());
  if (sources != 1) {
    throw InvalidParameterError(
        "exactly one group source among --cyclic/--dihedral/--symmetric/--product/--table");
  }
  const ValidateOptions vopts = validate_options(o);
  if (o.cyclic >= 0) return FiniteGroup::cyclic(static_cast<int>(o.cyclic));
  if (o.dihedral >= 0) return FiniteGroup::dihedral(static_cast<int>(o.dihedral));
  if (o.symmetric >= 0) return FiniteGroup::symmetric(static_cast<int>(o.symmetric));
  if (!o.product.empty()) {
    const FiniteGroup a = parse_cayley_table(read_file(o.product[0]), vopts);
    const FiniteGroup b = parse_cayley_table(read_file(o.product[1]), vopts);
    return FiniteGroup::direct_product(a, b);
  }
  return parse_cayley_table(read_file(o.table), vopts);
}

GroupDistribution load_distribution(const std::string& path, const FiniteGroup& g,
                                    bool normalize) {
  if (path.empty()) throw InvalidParameterError("--dist is required");
  return parse_distribution(read_file(path), g, normalize);
}

int run_group_build(const GroupSourceOpts& src, const std::string& out) {
  const FiniteGroup g = resolve_group(src);
  write_output(out, serialize_cayley_table(g));
  return kOk;
}

int run_group_validate(const GroupSourceOpts& src, const std::string& out) {
  if (src.table.empty()) throw InvalidParameterError("group validate requires --table");
  const CayleyTable t = parse_cayley_table_raw(read_file(src.table));
  const GroupValidationReport report = validate_group(t, validate_options(src));
  json j;
  j["order"] = t.n;
  j.update(validation_report_json(report));
  write_output(out, dump_json(j));
  return report.is_group ? kOk : kCheckFailed;
}

int run_dist_check(const GroupSourceOpts& src, const std::string& dist_path, bool normalize,
                   const std::string& out) {
  const FiniteGroup g = resolve_group(src);
  json j;
  try {
    const GroupDistribution x = load_distribution(dist_path, g, normalize);
    j["valid"] = true;
    j["order"] = g.order();
    j["support_size"] = static_cast<int>(x.support().size());
    j["full_support"] = x.full_support();
    j["probabilities"] = distribution_json(x);
    write_output(out, dump_json(j));
    return kOk;
  } catch (const InvalidParameterError& e) {
    j["valid"] = false;
    j["order"] = g.order();
    j["reason"] = e.what();
    write_output(out, dump_json(j));
    return kCheckFailed;
  }
}

int run_conmat(const GroupSourceOpts& src, const std::string& dist_path, bool normalize,
               const std::string& format, const std::string& out) {
  const FiniteGroup g = resolve_group(src);
  const StochasticMatrix con = convolution_matrix(load_distribution(dist_path, g, normalize));
  if (format == "csv") {
    write_output(out, matrix_csv(con));
  } else {
    write_output(out, dump_json(matrix_json(con)));
  }
  return kOk;
}

int run_lemma_check(const GroupSourceOpts& src, long trials, std::uint64_t seed,
                    const std::string& out) {
  if (trials < 1) throw InvalidParameterError("--trials must be >= 1");
  const FiniteGroup g = resolve_group(src);
  json detail = json::array();
  long failures = 0;
  for (long t = 0; t < trials; ++t) {
    Philox4x64 rng(seed, static_cast<std::uint64_t>(t));
    const GroupDistribution x = random_distribution(g, rng, false);
    const GroupDistribution y = random_distribution(g, rng, false);
    const HomomorphismCheck check = check_homomorphism(x, y);
    json tj;
    tj["trial"] = t;
    tj["holds"] = check.holds;
    if (!check.holds) {
      ++failures;
      json w;
      w["row"] = check.witness->i + 1;
      w["col"] = check.witness->j + 1;
      w["conv_entry"] = check.witness->lhs.str();
      w["product_entry"] = check.witness->rhs.str();
      tj["witness"] = std::move(w);
    }
    detail.push_back(std::move(tj));
  }
  json j;
  j["group_order"] = g.order();
  j["trials"] = trials;
  j["seed"] = seed;
  j["failures"] = failures;
  j["all_hold"] = failures == 0;
  j["trial_results"] = std::move(detail);
  write_output(out, dump_json(j));
  return failures == 0 ? kOk : kCheckFailed;
}

int run_walk(const GroupSourceOpts& src, const std::string& dist_path, bool normalize,
             double epsilon, long max_steps, const std::string& out,
             const std::string& tv_csv) {
  const FiniteGroup g = resolve_group(src);
  const GroupDistribution xi = load_distribution(dist_path, g, normalize);
  const WalkReport report = analyze_walk(xi, epsilon, max_steps);
  write_output(out, dump_json(walk_report_json(report)));
  if (!tv_csv.empty()) write_output(tv_csv, tv_sequence_csv(report));
  // A full-support walk that fails to mix contradicts the limit theorem.
  if (report.increment_support_full && !report.converged) return kCheckFailed;
  return kOk;
}

int run_simulate(const GroupSourceOpts& src, const std::string& dist_path, bool normalize,
                 long steps, long trajectories, std::uint64_t seed, const std::string& out) {
  const FiniteGroup g = resolve_group(src);
  const GroupDistribution xi = load_distribution(dist_path, g, normalize);
  const SimulationResult result = simulate_walk(xi, steps, trajectories, seed);
  write_output(out, dump_json(simulation_json(result)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random walks on finite groups via doubly stochastic convolution matrices"};
  app.require_subcommand(1);

  GroupSourceOpts src;
  std::string out;
  std::string dist_path;
  std::string format = "json";
  std::string tv_csv;
  bool normalize = false;
  double epsilon = 1e-8;
  long max_steps = 10'000;
  long trials = 100;
  long steps = 1;
  long trajectories = 1;
  std::uint64_t seed = 0;

  CLI::App* group = app.add_subcommand("group", "build or validate finite groups");
  group->require_subcommand(1);
  CLI::App* group_build = group->add_subcommand("build", "emit a Cayley table file");
  add_group_source(group_build, src);
  group_build->add_option("-o,--output", out, "output path (default stdout)");
  CLI::App* group_validate =
      group->add_subcommand("validate", "check the group axioms of a Cayley table file");
  add_group_source(group_validate, src);
  group_validate->add_option("-o,--output", out, "output path (default stdout)");

  CLI::App* dist = app.add_subcommand("dist", "inspect distribution files");
  dist->require_subcommand(1);
  CLI::App* dist_check = dist->add_subcommand("check", "validate a distribution file");
  add_group_source(dist_check, src);
  dist_check->add_option("--dist", dist_path, "distribution file")->required();
  dist_check->add_flag("--normalize", normalize, "treat values as weights and normalize");
  dist_check->add_option("-o,--output", out, "output path (default stdout)");

  CLI::App* conmat = app.add_subcommand("conmat", "print the convolution matrix Con(X)");
  add_group_source(conmat, src);
  conmat->add_option("--dist", dist_path, "distribution file")->required();
  conmat->add_flag("--normalize", normalize, "treat values as weights and normalize");
  conmat->add_option("--format", format, "json (exact) or csv (decimal)")
      ->check(CLI::IsMember({"json", "csv"}));
  conmat->add_option("-o,--output", out, "output path (default stdout)");

  CLI::App* lemma = app.add_subcommand(
      "lemma-check", "verify Con(X*Y) = Con(X)Con(Y) on random rational distributions");
  add_group_source(lemma, src);
  lemma->add_option("--trials", trials, "number of random pairs (default 100)");
  lemma->add_option("--seed", seed, "base seed for the trial substreams");
  lemma->add_option("-o,--output", out, "output path (default stdout)");

  CLI::App* walk = app.add_subcommand("walk", "analyze convergence of the marginal law");
  add_group_source(walk, src);
  walk->add_option("--dist", dist_path, "increment distribution file")->required();
  walk->add_flag("--normalize", normalize, "treat values as weights and normalize");
  walk->add_option("--eps", epsilon, "TV convergence threshold (default 1e-8)");
  walk->add_option("--max-steps", max_steps, "step budget (default 10000)");
  walk->add_option("-o,--output", out, "report path (default stdout)");
  walk->add_option("--tv-csv", tv_csv, "also write the TV sequence as CSV");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo trajectories of the walk");
  add_group_source(simulate, src);
  simulate->add_option("--dist", dist_path, "increment distribution file")->required();
  simulate->add_flag("--normalize", normalize, "treat values as weights and normalize");
  simulate->add_option("--steps", steps, "walk length m")->required();
  simulate->add_option("--trajectories", trajectories, "number of trajectories")->required();
  simulate->add_option("--seed", seed, "Philox seed; trajectory t uses substream (seed, t)")
      ->required();
  simulate->add_option("-o,--output", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (group_build->parsed()) return run_group_build(src, out);
    if (group_validate->parsed()) return run_group_validate(src, out);
    if (dist_check->parsed()) return run_dist_check(src, dist_path, normalize, out);
    if (conmat->parsed()) return run_conmat(src, dist_path, normalize, format, out);
    if (lemma->parsed()) return run_lemma_check(src, trials, seed, out);
    if (walk->parsed())
      return run_walk(src, dist_path, normalize, epsilon, max_steps, out, tv_csv);
    if (simulate->parsed())
      return run_simulate(src, dist_path, normalize, steps, trajectories, seed, out);
    std::cerr << "no subcommand selected\n";
    return kUsage;
  } catch (const GroupValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
