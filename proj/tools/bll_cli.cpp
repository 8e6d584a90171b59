// Command line front end: evaluate the functional exactly, classify
// admissibility, run the truncation deformation, analyze equality cases,
// build nonuniqueness witnesses, and fuzz the core identities.
//
// Exit codes: 0 success, 1 fuzz found violations, 2 parse failure,
// 3 degenerate forms, 4 precondition failure, 5 certificate failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bll/bll.hpp"

namespace {

using bll::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bll::parse_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw bll::parse_error(std::string("invalid JSON: ") + e.what());
  }
}

bll::Problem load_problem(const std::string& path) {
  bll::Problem p = bll::problem_from_json(load_json(path));
  bll::validate_problem(p);
  return p;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_eval(const std::string& file, std::uint64_t samples, std::uint64_t seed) {
  const bll::Problem p = load_problem(file);
  const bll::Rat value = bll::evaluate(p);
  const bll::Rat sym = bll::evaluate_symmetrized(p);
  json out{{"value", bll::rat_to_json(value)},
           {"symmetrized", bll::rat_to_json(sym)},
           {"deficit", bll::rat_to_json(sym - value)}};
  if (samples > 0) {
    const bll::McEstimate mc = bll::mc_estimate(p, samples, seed);
    out["mc_estimate"] = mc.estimate;       // float: estimator only
    out["mc_std_error"] = mc.std_error;     // float: estimator only
    out["mc_samples"] = samples;
  }
  emit(out);
  return 0;
}

int cmd_admissible(const std::string& file) {
  const bll::Problem p = load_problem(file);
  json out = bll::report_to_json(bll::check(p));
  out["measures"] = bll::rats_to_json(p.measures());
  emit(out);
  return 0;
}

int cmd_deform(const std::string& file) {
  const bll::Problem p = load_problem(file);
  auto [nf, reduced] = bll::to_normal_form(p, 0, 1);
  const bll::NormalProblem np = bll::as_normal(reduced);
  json out = bll::rbar_to_json(bll::find_rbar(np));
  out["slopes"] = bll::rats_to_json(np.t);
  out["scale"] = bll::rat_to_json(nf.c);
  emit(out);
  return 0;
}

int cmd_analyze(const std::string& file) {
  const bll::Problem p = load_problem(file);
  const bll::EqualityVerdict v = bll::equality_analysis(p);
  emit(bll::equality_to_json(v));
  return v.theorem_violation ? 5 : 0;
}

int cmd_witness(const std::string& file, int index) {
  const bll::Problem p = load_problem(file);
  const bll::Problem w = bll::nonuniqueness_witness(p.forms, p.measures(), index);
  json out{{"witness", bll::problem_to_json(w)},
           {"deficit", bll::rat_to_json(bll::deficit(w))},
           {"split_components", w.sets[std::size_t(index)].components().size()}};
  emit(out);
  return 0;
}

int cmd_fuzz(std::uint64_t instances, std::uint64_t seed) {
  const bll::SuiteResult suites[] = {
      bll::fuzz_inequality(instances, seed),
      bll::fuzz_admissibility_agreement(instances, bll::derive_seed(seed, 1000001)),
      bll::fuzz_truncation(instances, bll::derive_seed(seed, 2000002)),
  };
  std::uint64_t total = 0;
  json out{{"instances", instances}, {"seed", seed}, {"suites", json::object()}};
  for (const auto& s : suites) {
    out["suites"][s.name] = bll::suite_to_json(s);
    total += s.violations;
  }
  out["violations_total"] = total;
  emit(out);
  return total > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for multilinear interval functionals on the plane"};
  app.require_subcommand(1);

  std::string file;
  int index = 0;
  std::uint64_t instances = 100, seed = 1, samples = 0;

  auto* eval = app.add_subcommand("eval", "value, rearranged value, and deficit of a problem");
  eval->add_option("--file", file, "problem document")->required();
  eval->add_option("--samples", samples, "add a Monte Carlo cross-estimate with this many samples");
  eval->add_option("--seed", seed, "Monte Carlo seed");

  auto* adm = app.add_subcommand("admissible", "classify the measure tuple of a problem");
  adm->add_option("--file", file, "problem document")->required();

  auto* def = app.add_subcommand("deform", "critical truncation parameter with certificate");
  def->add_option("--file", file, "problem document")->required();

  auto* ana = app.add_subcommand("analyze", "equality analysis: maximizer structure or positive deficit");
  ana->add_option("--file", file, "problem document")->required();

  auto* wit = app.add_subcommand("witness", "nonuniqueness witness for an inadmissible index");
  wit->add_option("--file", file, "problem document")->required();
  wit->add_option("--index", index, "witness index")->required();

  auto* fz = app.add_subcommand("fuzz", "randomized checks of the core identities");
  fz->add_option("--instances", instances, "instances per suite");
  fz->add_option("--seed", seed, "master seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(file, samples, seed);
    if (adm->parsed()) return cmd_admissible(file);
    if (def->parsed()) return cmd_deform(file);
    if (ana->parsed()) return cmd_analyze(file);
    if (wit->parsed()) return cmd_witness(file, index);
    if (fz->parsed()) return cmd_fuzz(instances, seed);
  } catch (const bll::parse_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const bll::degenerate_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 3;
  } catch (const bll::unbounded_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 4;
  } catch (const bll::precondition_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 4;
  } catch (const bll::certificate_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 5;
  }
  return 0;
}
