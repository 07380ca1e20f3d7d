#pragma once

#include "braidlie/model.hpp"

namespace braidlie {

/// Decoded command-line request for execute().
struct ExecOptions {
  std::string command;
  int n = -1;                    // --n
  std::string zeta;              // --zeta (scalar expression)
  std::string family;            // --family, e.g. "1,1" or "(1,0),(0,1)"
  std::string perm;              // --perm one-line images "2,1"
  int max_n = 3;                 // --max-n for check-identities
  int truncate = -1;             // --truncate L
  int degree_bound = -1;         // --degree-bound override
  bool strict_table = false;     // --strict-table
  bool warn_only = false;        // --warn-only: skip lie_validate gate
  std::string format = "text";   // --format text|machine
};

struct RunResult {
  std::string text;  // deterministic report bytes
  int exit_code;     // 0 all-pass, 1 check failures, 2 input errors
};

/// Dispatches one command against a loaded model. Input errors surface as
/// exceptions from the library; the CLI maps them to exit code 2.
RunResult execute(const ModelDocument& doc, const ExecOptions& opts);

/// Runs the bundled reproduction corpus: every worked example from the
/// source material, executed and byte-compared against stored expectations.
RunResult run_paper_examples(const std::string& corpus_dir, const std::string& format);

/// The corpus manifest: entry name, model file, command line.
struct CorpusEntry {
  std::string name;
  std::string model_file;
  ExecOptions options;
};
const std::vector<CorpusEntry>& corpus_manifest();

}  // namespace braidlie
