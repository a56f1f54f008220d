// heckegraph: build, classify and export Hecke graphs over F_q(t).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hecke/acceptance.hpp"
#include "hecke/eigen.hpp"
#include "hecke/error.hpp"
#include "hecke/graph_io.hpp"
#include "hecke/levels.hpp"
#include "hecke/parse.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t q = 2;
  std::string level = "K";
  int r = 1;
  int deg_y = 1;
  std::string y;
  bool at_x = false;
  std::string exponent = "derived";
  int radius = -1;
  std::string format = "json";
  std::string output;
  long long budget = 0;
  std::uint64_t seed = hecke::acceptance::Config{}.seed;
  int trials = hecke::acceptance::Config{}.trials;
  std::string matrix;
  std::string seed_file;
  int n_max = 6;
  std::string method = "orbit";
};

const hecke::Field& field(const Options& o) {
  try {
    return hecke::field_of_order(o.q);
  } catch (const hecke::Error& e) {
    throw UsageError(std::string("--q: ") + e.what());
  }
}

long long budget(const Options& o) { return o.budget > 0 ? o.budget : hecke::budget_from_env(); }

hecke::OperatorDesc descriptor(const Options& o) {
  using hecke::Level;
  using hecke::OperatorDesc;
  const hecke::Field& f = field(o);
  Level level;
  if (o.level == "K") {
    level = Level::Unramified;
  } else if (o.level == "K1") {
    level = Level::RamifiedL1;
  } else if (o.level == "Kr") {
    level = Level::GeneralR;
  } else {
    throw UsageError("--level must be K, K1 or Kr");
  }
  if (level == Level::Unramified && o.at_x) throw UsageError("--at-x requires a ramified level (K1 or Kr)");
  if (level == Level::GeneralR && o.r < 1) throw UsageError("--r must be at least 1");
  OperatorDesc d;
  if (!o.y.empty()) {
    if (o.at_x) throw UsageError("--y and --at-x are exclusive");
    d = OperatorDesc::with_place(f, level, o.r, hecke::parse_poly(f, o.y));
  } else if (level == Level::Unramified) {
    d = OperatorDesc::unramified(f, o.deg_y);
  } else if (level == Level::RamifiedL1) {
    d = o.at_x ? OperatorDesc::ramified_at_x(f) : OperatorDesc::ramified(f, o.deg_y);
  } else {
    d = OperatorDesc::level_r(f, o.r, o.at_x, o.deg_y);
  }
  d.exponent = o.exponent == "printed" ? hecke::CosetExponent::Printed : hecke::CosetExponent::Derived;
  try {
    d.validate();
  } catch (const hecke::Error& e) {
    throw UsageError(e.what());
  }
  return d;
}

std::unique_ptr<hecke::LevelModel> model_for(const hecke::OperatorDesc& d) {
  if (d.level == hecke::Level::GeneralR) return std::make_unique<hecke::LevelRModel>(*d.field, d.r);
  return hecke::make_level_model(d);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
  } else {
    hecke::write_file_atomic(o.output, text);
  }
}

int require_radius(const Options& o) {
  if (o.radius < 0) throw UsageError("--radius is required");
  return o.radius;
}

int cmd_graph(const Options& o) {
  const hecke::HeckeGraph g = hecke::build_graph(descriptor(o), require_radius(o));
  if (o.format == "json") {
    emit(o, hecke::graph_to_json(g));
  } else if (o.format == "dot") {
    emit(o, hecke::graph_to_dot(g));
  } else {
    emit(o, hecke::graph_to_csv(g));
  }
  return 0;
}

int cmd_reduce(const Options& o) {
  if (o.matrix.empty()) throw UsageError("--matrix is required");
  const hecke::OperatorDesc d = descriptor(o);
  const hecke::Mat2 M = hecke::parse_matrix(*d.field, o.matrix);
  emit(o, hecke::vertex_label(d, model_for(d)->classify(M)) + "\n");
  return 0;
}

int cmd_eigdim(const Options& o) {
  emit(o, std::to_string(hecke::window_dimension(descriptor(o), require_radius(o))) + "\n");
  return 0;
}

int cmd_eigenform(const Options& o) {
  if (o.seed_file.empty()) throw UsageError("--seed-file is required");
  const hecke::OperatorDesc d = descriptor(o);
  std::ifstream in(o.seed_file);
  if (!in) throw hecke::Error(hecke::ErrorKind::Parse, "cannot read " + o.seed_file);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto seed = hecke::parse_seed_csv(d, buf.str());
  emit(o, hecke::eigenform_to_csv(d, hecke::extend_from_nucleus(d, seed, require_radius(o))));
  return 0;
}

int cmd_fibers(const Options& o) {
  if (o.r < 0) throw UsageError("--r must be non-negative");
  const hecke::ClassRoute route = o.method == "oracle" ? hecke::ClassRoute::Oracle : hecke::ClassRoute::Orbit;
  emit(o, hecke::fiber_report(field(o), o.r, o.n_max, route, budget(o)).to_json() + "\n");
  return 0;
}

int cmd_uniformizer(const Options& o) {
  if (o.y.empty()) throw UsageError("--y is required");
  const hecke::Field& f = field(o);
  const hecke::Place y = hecke::Place::finite(hecke::parse_poly(f, o.y));
  const hecke::RatF pi = hecke::uniformizer_for(y);
  emit(o, pi.to_string() + "\n" + hecke::divisor_of(pi).to_string() + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  hecke::acceptance::Config cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.budget = budget(o);
  int failed = 0;
  for (const auto& r : hecke::acceptance::run_all(cfg, std::cout)) failed += !r.pass;
  std::cout << (hecke::acceptance::kCriteria - failed) << "/" << hecke::acceptance::kCriteria << " criteria passed\n";
  return failed ? 1 : 0;
}

void add_field(CLI::App* c, Options& o) { c->add_option("--q", o.q, "field order (prime power)")->required(); }

void add_operator(CLI::App* c, Options& o) {
  add_field(c, o);
  c->add_option("--level", o.level, "K, K1 or Kr")->check(CLI::IsMember({"K", "K1", "Kr"}));
  c->add_option("--r", o.r, "congruence depth for --level Kr");
  auto* deg = c->add_option("--deg-y", o.deg_y, "degree of the place y");
  c->add_option("--y", o.y, "monic irreducible polynomial defining y")->excludes(deg);
  c->add_flag("--at-x", o.at_x, "operator at the ramified place x");
  c->add_option("--exponent", o.exponent, "at-x coset exponent for Kr: derived (r) or printed (r-1)")
      ->check(CLI::IsMember({"derived", "printed"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke operator graphs over F_q(t)"};
  app.require_subcommand(1);
  Options o;

  auto* graph = app.add_subcommand("graph", "build a graph and export it");
  add_operator(graph, o);
  graph->add_option("--radius", o.radius, "largest completed level")->required();
  graph->add_option("--format", o.format, "dot, json or csv")->check(CLI::IsMember({"dot", "json", "csv"}));

  auto* reduce = app.add_subcommand("reduce", "classify one matrix");
  add_operator(reduce, o);
  reduce->add_option("--matrix", o.matrix, "\"a,b;c,d\" with entries in t")->required();

  auto* eigdim = app.add_subcommand("eigdim", "dimension of the windowed eigenspace");
  add_operator(eigdim, o);
  eigdim->add_option("--radius", o.radius, "window radius")->required();

  auto* eigenform = app.add_subcommand("eigenform", "propagate an eigenform from a seed file");
  add_operator(eigenform, o);
  eigenform->add_option("--radius", o.radius, "window radius")->required();
  eigenform->add_option("--seed-file", o.seed_file, "CSV of vertex,value over the seed domain")->required();

  auto* fibers = app.add_subcommand("fibers", "class counts over each c_n at level r");
  add_field(fibers, o);
  fibers->add_option("--r", o.r, "congruence depth (0 is level K)");
  fibers->add_option("--n-max", o.n_max, "largest level index");
  fibers->add_option("--method", o.method, "orbit or oracle")->check(CLI::IsMember({"orbit", "oracle"}));

  auto* unif = app.add_subcommand("uniformizer", "function with divisor y - deg(y) x");
  add_field(unif, o);
  unif->add_option("--y", o.y, "monic irreducible polynomial")->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--trials", o.trials, "perturbation trials per case");

  for (auto* c : {graph, reduce, eigdim, eigenform, fibers, unif, verify}) {
    c->add_option("--output", o.output, "write to this file instead of stdout");
    c->add_option("--budget", o.budget, "enumeration budget (default HECKE_BUDGET or 100000)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*graph) return cmd_graph(o);
    if (*reduce) return cmd_reduce(o);
    if (*eigdim) return cmd_eigdim(o);
    if (*eigenform) return cmd_eigenform(o);
    if (*fibers) return cmd_fibers(o);
    if (*unif) return cmd_uniformizer(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const hecke::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
