#pragma once

#include <memory>
#include <optional>
#include <string>

#include "braidlie/hopf.hpp"

namespace braidlie {

/// A fully validated model file: group and bicharacter, plus optional
/// presentation, Lie, and Hopf blocks. See docs/model-format.md for the
/// grammar.
struct ModelDocument {
  std::string name;
  std::string description;

  GroupPtr group;
  std::optional<Bicharacter> chi;

  struct Presentation {
    TablePtr table;
    std::vector<GradedPoly> relations;
    int degree_bound = 8;
  };
  std::optional<Presentation> presentation;

  std::shared_ptr<LiePresentation> lie;
  int lie_degree_bound = 8;

  struct Hopf {
    std::vector<TensorPoly> coproduct;  // aligned with presentation table
    std::vector<CycScalar> counit;
    std::vector<GradedPoly> antipode;
    bool biproduct = false;
  };
  std::optional<Hopf> hopf;

  const Bicharacter& bicharacter() const {
    if (!chi) throw ValidationError("group", "model has no bicharacter");
    return *chi;
  }
};

/// Parses and validates a model file. Throws ParseError with the file line
/// and column, or ValidationError naming the failing block.
ModelDocument load_model(const std::string& path);

/// Same, from an in-memory string (used by tests).
ModelDocument load_model_text(const std::string& text);

}  // namespace braidlie
