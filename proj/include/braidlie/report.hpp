#pragma once

#include <string>
#include <vector>

namespace braidlie {

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string witness;  // first counterexample or detail; empty on pass
};

/// Outcome of a symbolic or instance-level verification. Failures are
/// report content, not exceptions; entry order is deterministic.
struct CheckReport {
  std::string title;
  std::vector<CheckEntry> entries;
  std::vector<std::string> caveats;

  void add(std::string name, bool pass, std::string witness = "") {
    entries.push_back({std::move(name), pass, std::move(witness)});
  }
  void caveat(std::string note) { caveats.push_back(std::move(note)); }

  bool passed() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  size_t fail_count() const {
    size_t n = 0;
    for (const auto& e : entries)
      if (!e.pass) ++n;
    return n;
  }
};

}  // namespace braidlie
