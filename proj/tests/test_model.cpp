#include "braidlie/runner.hpp"
#include "braidlie/text.hpp"
#include "doctest.h"

#ifndef BRAIDLIE_TEST_MODELS_DIR
#define BRAIDLIE_TEST_MODELS_DIR "models"
#endif

using namespace braidlie;

namespace {
const std::string kModels = BRAIDLIE_TEST_MODELS_DIR;
}

TEST_CASE("sweedler model loads") {
  auto doc = load_model(kModels + "/sweedler.model");
  CHECK(doc.name == "sweedler");
  CHECK(doc.group->torsion() == std::vector<long>{2});
  REQUIRE(doc.lie);
  CHECK(doc.lie->table()->size() == 1);
  CHECK(doc.lie->table()->name(0) == "x");
  // The declared pair bracket plus nothing else (symmetrize adds no new op
  // for a constant family).
  CHECK(doc.lie->ops().size() == 1);
}

TEST_CASE("example6 model carries the four stated chi values") {
  auto doc = load_model(kModels + "/example6.model");
  const auto& chi = doc.bicharacter();
  auto g1 = doc.group->generator(0), g2 = doc.group->generator(1);
  CHECK(chi(g1, g1) == root_of_unity(3, 1));
  CHECK(chi(g1, g2) == root_of_unity(3, 2));
  CHECK(chi(g2, g1).is_one());
  CHECK(chi(g2, g2) == root_of_unity(3, 1));
}

TEST_CASE("malformed models are rejected with positions") {
  CHECK_THROWS_AS(load_model_text("nonsense"), ParseError);
  CHECK_THROWS_AS(load_model_text("[group]\ntorsion: 2\n[lie]\ncomponent: (1,2) x\n"),
                  ParseError);  // arity mismatch
  CHECK_THROWS_AS(load_model_text("[lie]\ncomponent: (1) x\n"),
                  ValidationError);  // no group
  CHECK_THROWS_AS(
      load_model_text("[group]\ntorsion: 2\nchi_level: 3\nchi_matrix: 1\n"),
      ValidationError);  // ill-defined bicharacter
  CHECK_THROWS_AS(
      load_model_text("[group]\ntorsion: 2\n[presentation]\ngenerator: x (1)\n"
                      "relation: x*w\n"),
      ParseError);  // unknown generator in a relation
}

TEST_CASE("hopf block requires full coproduct data") {
  std::string base =
      "[group]\ntorsion: 2\n"
      "[presentation]\ngenerator: t (0)\nrelation: t*t - 1\n";
  CHECK_THROWS_AS(load_model_text(base + "[hopf]\ncounit: t -> 1\n"),
                  ValidationError);
  auto doc = load_model_text(base +
                             "[hopf]\ncoproduct: t -> t(x)t\ncounit: t -> 1\n"
                             "antipode: t -> t\n");
  REQUIRE(doc.hopf);
  CHECK(doc.hopf->coproduct.size() == 1);
}

TEST_CASE("execute dispatches and reports deterministically") {
  auto doc = load_model(kModels + "/c3.model");
  ExecOptions opts;
  opts.command = "families";
  opts.n = 3;
  opts.zeta = "z^1@3";
  auto r1 = execute(doc, opts);
  auto r2 = execute(doc, opts);
  CHECK(r1.text == r2.text);
  CHECK(r1.exit_code == 0);
  CHECK(r1.text.find("FAMILY (1),(1),(1)") != std::string::npos);
  CHECK(r1.text.find("FAMILY (2),(2),(2)") != std::string::npos);
  CHECK(r1.text.find("COUNT 2") != std::string::npos);

  opts.format = "machine";
  auto r3 = execute(doc, opts);
  CHECK(r3.text.find("# command") == std::string::npos);

  opts.command = "no-such-command";
  CHECK_THROWS_AS(execute(doc, opts), UnknownCommand);
}

TEST_CASE("bracket command prints the classical commutator") {
  auto doc = load_model(kModels + "/classical.model");
  ExecOptions opts;
  opts.command = "bracket";
  opts.family = "(),()";
  opts.zeta = "-1";
  opts.format = "machine";
  auto r = execute(doc, opts);
  CHECK(r.text == "x*y - y*x\n");
}

TEST_CASE("check-identities exit code reflects failures") {
  // A lie block with a broken symmetry gives exit code 1, not an exception.
  auto doc = load_model_text(
      "name: broken\n[group]\ntorsion: 2\n"
      "[lie]\ncomponent: (0) e f h\n"
      "symmetrize: false\n"
      "bracket: -1 ; (0),(0) ; e,f -> h\n"
      "bracket: -1 ; (0),(0) ; f,e -> h\n");
  ExecOptions opts;
  opts.command = "check-identities";
  opts.max_n = 2;
  auto r = execute(doc, opts);
  CHECK(r.exit_code == 1);
  CHECK(r.text.find("FAIL") != std::string::npos);
}

TEST_CASE("paper-examples corpus is self-consistent") {
  auto result = run_paper_examples(kModels, "text");
  INFO(result.text);
  CHECK(result.exit_code == 0);
  // Deterministic byte-for-byte across runs.
  auto again = run_paper_examples(kModels, "text");
  CHECK(result.text == again.text);
}
