#include "fgc/associahedron.hpp"
#include "fgc/cyclic.hpp"
#include "fgc/fatgraph.hpp"
#include "fgc/graph_io.hpp"
#include "fgc/parallel.hpp"
#include "fgc/quadrature.hpp"
#include "fgc/random_gen.hpp"
#include "fgc/verify.hpp"
#include "fgc/witten.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace fgc;

struct Options {
  unsigned k = 1;
  int n = 5;
  long long trials = 0;
  std::uint64_t seed = 12345;
  long long samples = 10'000'000;
  std::string weights;
  std::string input;
  bool json_out = false;
  unsigned threads = 1;
};

struct Output {
  std::string command;
  json checks = json::array();
  json counts = json::object();
  json stats = json::object();
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool pass = true;

  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    bool ok = expected == actual;
    pass = pass && ok;
    checks.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", ok}});
  }
  void check_tol(const std::string& name, double expected, double actual, double tol) {
    bool ok = std::abs(expected - actual) <= tol;
    pass = pass && ok;
    std::ostringstream e, a;
    e.precision(12);
    a.precision(12);
    e << expected << " (tol " << tol << ")";
    a << actual;
    checks.push_back({{"name", name}, {"expected", e.str()}, {"actual", a.str()}, {"pass", ok}});
  }
};

int emit(const Output& out, bool json_out, double ms) {
  if (json_out) {
    json doc = {{"command", out.command}, {"version", kVersion}, {"checks", out.checks},
                {"counts", out.counts},   {"stats", out.stats},  {"pass", out.pass},
                {"time_ms", ms}};
    if (out.has_seed) doc["seed"] = out.seed;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.command << " (v" << kVersion;
    if (out.has_seed) std::cout << ", seed " << out.seed;
    std::cout << ")\n";
    for (const auto& c : out.checks)
      std::cout << "  [" << (c.at("pass").get<bool>() ? "pass" : "FAIL") << "] "
                << c.at("name").get<std::string>() << ": expected "
                << c.at("expected").get<std::string>() << ", got "
                << c.at("actual").get<std::string>() << "\n";
    for (const auto& [k2, v] : out.counts.items()) std::cout << "  " << k2 << " = " << v << "\n";
    for (const auto& [k2, v] : out.stats.items())
      std::cout << "  " << k2 << " = " << v.get<std::string>() << "\n";
    std::cout << (out.pass ? "PASS" : "FAIL") << " (" << ms << " ms)\n";
  }
  return out.pass ? 0 : 1;
}

void fill_from_suite(Output& out, const SuiteResult& s) {
  out.command = s.name;
  for (const auto& c : s.checks) out.check(c.name, c.expected, c.actual);
  for (const auto& [name, v] : s.counts) out.counts[name] = v;
  out.seed = s.seed;
  out.has_seed = s.seed != 0;
}

void fill_from_report(Output& out, const Report& r) {
  out.command = r.name;
  out.check("value", to_fraction(r.closed_form), to_fraction(r.exact));
  for (const auto& f : r.failures) {
    out.pass = false;
    out.checks.push_back({{"name", f}, {"expected", ""}, {"actual", ""}, {"pass", false}});
  }
  if (!r.match) out.pass = false;
  for (const auto& [name, v] : r.counts) out.counts[name] = v;
  for (const auto& [name, v] : r.stats) out.stats[name] = to_fraction(v);
}

WeightSpec parse_weight_spec(const std::string& text) {
  WeightSpec w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto x = item.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--weights", "expected kxn pairs");
    w.terms.push_back({unsigned(std::stoul(item.substr(0, x))),
                       unsigned(std::stoul(item.substr(x + 1)))});
  }
  std::sort(w.terms.begin(), w.terms.end());
  if (w.terms.empty()) throw CLI::ValidationError("--weights", "empty weight list");
  return w;
}

std::vector<long long> parse_sizes(const std::string& text) {
  std::vector<long long> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) sizes.push_back(std::stoll(item));
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of cyclic-set cocycles, fat-graph classes, and their constants"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "machine-readable report on stdout");
  app.add_option("--threads", opt.threads, "worker cap (0 = hardware)")->capture_default_str();

  std::string action;

  auto* verify = app.add_subcommand("verify", "run a property suite");
  auto* v_cyc = verify->add_subcommand("cyclic-cocycle", "delta c_Z = 0 and delta s_k = c_Z o J");
  v_cyc->add_option("--k", opt.k)->check(CLI::Range(1u, 3u));
  v_cyc->add_option("--trials", opt.trials);
  v_cyc->add_option("--seed", opt.seed);
  auto* v_fat = verify->add_subcommand("fat-cocycle", "delta c_Fat = 0 on collapse chains");
  v_fat->add_option("--k", opt.k)->check(CLI::Range(1u, 2u));
  v_fat->add_option("--trials", opt.trials);
  v_fat->add_option("--seed", opt.seed);
  auto* v_ass = verify->add_subcommand("associahedron", "counts and orientation consistency");
  v_ass->add_option("--n", opt.n)->check(CLI::Range(4, 11));

  auto* compute = app.add_subcommand("compute", "exact enumeration vs closed form");
  for (const char* name : {"bk", "stats", "halfdisk", "collar", "kappa"}) {
    auto* c = compute->add_subcommand(name);
    c->add_option("--k", opt.k)->check(CLI::Range(1u, 4u));
  }
  auto* c_kon = compute->add_subcommand("kontsevich", "leading cycle coefficients");
  c_kon->add_option("--weights", opt.weights, "kxn pairs, e.g. 1x2,2x1")->required();

  auto* integrate = app.add_subcommand("integrate", "numeric checks of the form integrals");
  auto* i_simplex = integrate->add_subcommand("simplex", "mass integral vs closed form");
  i_simplex->add_option("--k", opt.k)->check(CLI::Range(1u, 3u));
  i_simplex->add_option("--weights", opt.weights, "sizes a_0,...,a_2k (default all ones)");
  i_simplex->add_option("--samples", opt.samples);
  i_simplex->add_option("--seed", opt.seed);
  auto* i_euler = integrate->add_subcommand("euler", "Euler 2-form vs c_Z on random 2-simplices");
  i_euler->add_option("--trials", opt.trials);
  i_euler->add_option("--seed", opt.seed);
  auto* i_power = integrate->add_subcommand("power", "4-form Monte Carlo vs c_Z (k=2)");
  i_power->add_option("--trials", opt.trials);
  i_power->add_option("--samples", opt.samples);
  i_power->add_option("--seed", opt.seed);

  auto* graph = app.add_subcommand("graph", "fat-graph file operations");
  auto* g_info = graph->add_subcommand("info", "parse, validate, and report topology");
  g_info->add_option("--input", opt.input, "fat-graph file")->required();

  // let --json / --threads appear after any subcommand
  auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
    a->fallthrough();
    for (auto* sub : a->get_subcommands({})) self(self, sub);
  };
  for (auto* sub : app.get_subcommands({})) enable_fallthrough(enable_fallthrough, sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  Output out;
  try {
    if (v_cyc->parsed()) {
      if (opt.trials == 0) opt.trials = 1000;
      fill_from_suite(out, verify_cyclic_cocycle(opt.k, opt.trials, opt.seed, opt.threads));
    } else if (v_fat->parsed()) {
      if (opt.trials == 0) opt.trials = 200;
      fill_from_suite(out, verify_fat_cocycle(opt.k, opt.trials, opt.seed, opt.threads));
    } else if (v_ass->parsed()) {
      fill_from_suite(out, verify_associahedron(opt.n));
    } else if (compute->parsed()) {
      auto* sub = compute->get_subcommands().at(0);
      if (sub->get_name() == "bk") fill_from_report(out, eval_bk(opt.k));
      else if (sub->get_name() == "stats") fill_from_report(out, stat_x(opt.k));
      else if (sub->get_name() == "halfdisk") fill_from_report(out, half_disk(opt.k));
      else if (sub->get_name() == "collar") fill_from_report(out, collar(opt.k));
      else if (sub->get_name() == "kappa") fill_from_report(out, kappa_constant(opt.k));
      else {
        auto [cfat, ktilde] = kontsevich_coeff(parse_weight_spec(opt.weights));
        out.command = "kontsevich " + opt.weights;
        out.stats["c_fat_basis"] = to_fraction(cfat);
        out.stats["kappa_tilde_basis"] = to_fraction(ktilde);
      }
    } else if (i_simplex->parsed()) {
      MassProfile p;
      p.a = opt.weights.empty() ? std::vector<long long>(2 * opt.k + 1, 1)
                                : parse_sizes(opt.weights);
      Rational exact = simplex_integral_exact(opt.k, p);
      out.command = "integrate simplex k=" + std::to_string(opt.k);
      out.stats["exact"] = to_fraction(exact);
      double want = exact.convert_to<double>();
      if (opt.k <= 2) {
        QuadratureResult g = simplex_integral_grid(opt.k, p);
        out.check_tol("grid", want, g.estimate, 1e-6);
        out.counts["grid_points"] = g.size;
      }
      QuadratureResult m = simplex_integral_mc(opt.k, p, opt.samples, opt.seed, opt.threads);
      out.check_tol("monte carlo (3 SE)", want, m.estimate, 3 * m.error_bound);
      out.counts["samples"] = m.size;
      out.seed = opt.seed;
      out.has_seed = true;
    } else if (i_euler->parsed()) {
      if (opt.trials == 0) opt.trials = 20;
      out.command = "integrate euler";
      Rng rng(opt.seed);
      for (long long i = 0; i < opt.trials; i++) {
        ZSimplex s = random_growing_simplex(rng, 2, 8);
        QuadratureResult q = euler_2form(s);
        out.check_tol("trial " + std::to_string(i),
                      c_z(s, 1).convert_to<double>(), q.estimate, 1e-6);
      }
      out.seed = opt.seed;
      out.has_seed = true;
    } else if (i_power->parsed()) {
      if (opt.trials == 0) opt.trials = 5;
      out.command = "integrate power";
      Rng rng(opt.seed);
      for (long long i = 0; i < opt.trials; i++) {
        ZSimplex s = random_growing_simplex(rng, 4, 8);
        QuadratureResult q = power_form(s, opt.samples, derive_seed(opt.seed, i), opt.threads);
        out.check_tol("trial " + std::to_string(i) + " (3 SE)",
                      c_z(s, 2).convert_to<double>(), q.estimate, 3 * q.error_bound);
      }
      out.seed = opt.seed;
      out.has_seed = true;
    } else if (g_info->parsed()) {
      FatGraph g = read_graph(opt.input);
      Topology t = topology(g);
      out.command = "graph info " + opt.input;
      out.counts["vertices"] = (long long)g.vertices().size();
      out.counts["edges"] = (long long)g.edges().size();
      out.counts["euler_char"] = t.euler_char;
      out.counts["genus"] = t.genus;
      out.counts["punctures"] = t.punctures;
      out.counts["codimension"] = t.codimension;
      out.stats["c_fat_0"] = to_fraction(c_fat(FatSimplex(g), 0));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return emit(out, opt.json_out, ms);
}
