// braidlie: exact computations with generalized Lie algebras in braided
// monoidal categories of group-graded vector spaces, their enveloping Hopf
// algebras, and biproducts with the group algebra.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "braidlie/runner.hpp"

#ifndef BRAIDLIE_DEFAULT_CORPUS
#define BRAIDLIE_DEFAULT_CORPUS ""
#endif

using namespace braidlie;

int main(int argc, char** argv) {
  CLI::App app{"exact engine for graded Lie brackets and braided Hopf algebras"};
  app.require_subcommand(1);

  std::string model_path;
  std::string format = "text";
  bool timings = false;
  app.add_option("--format", format, "output format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--timings", timings, "print wall time to stderr");

  ExecOptions opts;
  auto add_model_option = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("-m,--model", model_path, "model file");
    if (required) o->required();
  };

  auto* families = app.add_subcommand("families", "enumerate zeta-families");
  add_model_option(families);
  families->add_option("--n", opts.n, "family length")->required();
  families->add_option("--zeta", opts.zeta,
                       "zeta (scalar expression); omit to list all values");

  auto* rho_cmd = app.add_subcommand("rho", "evaluate the rho coefficient");
  add_model_option(rho_cmd);
  rho_cmd->add_option("--perm", opts.perm, "one-line permutation, e.g. 2,1")->required();
  rho_cmd->add_option("--zeta", opts.zeta, "zeta")->required();
  rho_cmd->add_option("--family", opts.family, "family members")->required();

  auto* bracket = app.add_subcommand("bracket", "expand a formal bracket");
  add_model_option(bracket);
  bracket->add_option("--zeta", opts.zeta, "zeta")->required();
  bracket->add_option("--family", opts.family, "family members")->required();

  auto* check = app.add_subcommand(
      "check-identities", "verify symmetry, Jacobi, and primitivity symbolically");
  add_model_option(check);
  check->add_option("--max-n", opts.max_n, "largest family length (default 3)");
  check->add_flag("--strict-table", opts.strict_table,
                  "error on undeclared bracket operations");

  auto* envelop = app.add_subcommand("envelop", "build the enveloping algebra");
  add_model_option(envelop);
  envelop->add_option("--degree-bound", opts.degree_bound, "completion bound");
  envelop->add_flag("--warn-only", opts.warn_only, "skip the lie_validate gate");

  auto* hopf = app.add_subcommand("hopf-check", "verify the Hopf axioms");
  add_model_option(hopf);
  hopf->add_option("--degree-bound", opts.degree_bound, "completion bound");
  hopf->add_option("--truncate", opts.truncate,
                   "verify on the basis of words up to this length");
  hopf->add_flag("--warn-only", opts.warn_only, "skip the lie_validate gate");

  auto* prims = app.add_subcommand("primitives", "solve for primitive elements");
  add_model_option(prims);
  prims->add_option("--degree-bound", opts.degree_bound, "completion bound");

  auto* bip = app.add_subcommand("biproduct",
                                 "build the ordinary Hopf algebra H * kG");
  add_model_option(bip);
  bip->add_option("--degree-bound", opts.degree_bound, "completion bound");

  std::string corpus_dir = BRAIDLIE_DEFAULT_CORPUS;
  auto* paper = app.add_subcommand("paper-examples",
                                   "run the bundled reproduction corpus");
  paper->add_option("--corpus", corpus_dir, "corpus directory");

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  int code = 2;
  try {
    RunResult result{"", 2};
    if (paper->parsed()) {
      if (const char* env = std::getenv("BRAIDLIE_CORPUS")) corpus_dir = env;
      if (corpus_dir.empty()) {
        std::cerr << "error: no corpus directory (set BRAIDLIE_CORPUS)\n";
        return 2;
      }
      result = run_paper_examples(corpus_dir, format);
    } else {
      opts.command = app.get_subcommands().front()->get_name();
      opts.format = format;
      ModelDocument doc = load_model(model_path);
      result = execute(doc, opts);
    }
    std::cout << result.text;
    code = result.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  }
  if (timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "time: " << ms << " ms\n";
  }
  return code;
}
