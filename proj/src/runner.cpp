#include "braidlie/runner.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "braidlie/text.hpp"

namespace braidlie {

namespace {

std::vector<GroupElement> parse_family_flag(const GroupPtr& group,
                                            const std::string& text) {
  std::vector<GroupElement> out;
  if (text.find('(') != std::string::npos) {
    // Parenthesized tuples: "(1,0),(0,1)".
    int depth = 0;
    std::string cur;
    auto flush = [&]() {
      std::string t = cur;
      size_t a = t.find('('), b = t.rfind(')');
      if (a == std::string::npos || b == std::string::npos || b < a)
        throw ParseError(1, 1, "malformed family tuple '" + cur + "'");
      std::string inner = t.substr(a + 1, b - a - 1);
      std::vector<long> exps;
      if (!inner.empty()) {
        std::istringstream in(inner);
        std::string part;
        while (std::getline(in, part, ',')) exps.push_back(std::stol(part));
      }
      out.push_back(group->element(exps));
      cur.clear();
    };
    for (char c : text) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        flush();
        continue;
      }
      cur += c;
    }
    if (!cur.empty()) flush();
  } else {
    // Bare coordinates for rank-1 groups: "1,1,2".
    if (group->generator_count() != 1)
      throw ParseError(1, 1, "bare family coordinates need a rank-1 group");
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(group->element({std::stol(part)}));
  }
  return out;
}

std::vector<std::string> bracket_generator_names(size_t n) {
  if (n == 2) return {"x", "y"};
  if (n == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// Builds the model's Hopf instance: explicit [hopf] data when present,
// otherwise the enveloping algebra of the [lie] block.
HopfInstance model_hopf_instance(const ModelDocument& doc, const ExecOptions& opts) {
  int bound = opts.degree_bound;
  if (doc.hopf) {
    const auto& pres = *doc.presentation;
    if (bound < 0) bound = pres.degree_bound;
    return HopfInstance{quotient_present(pres.table, pres.relations, bound),
                        doc.bicharacter(), doc.hopf->coproduct, doc.hopf->counit,
                        doc.hopf->antipode};
  }
  if (doc.lie) {
    if (bound < 0) bound = doc.lie_degree_bound;
    return enveloping_build(*doc.lie, bound, !opts.warn_only);
  }
  throw ValidationError("model", "command needs a [hopf] or [lie] section");
}

struct Out {
  std::ostringstream os;
  bool machine;
  void header(const std::string& line) {
    if (!machine) os << "# " << line << "\n";
  }
  template <typename T>
  Out& operator<<(const T& v) {
    os << v;
    return *this;
  }
};

std::string echo_options(const ExecOptions& o) {
  std::string s = o.command;
  if (o.n >= 0) s += " --n " + std::to_string(o.n);
  if (!o.zeta.empty()) s += " --zeta " + o.zeta;
  if (!o.family.empty()) s += " --family " + o.family;
  if (!o.perm.empty()) s += " --perm " + o.perm;
  if (o.command == "check-identities") s += " --max-n " + std::to_string(o.max_n);
  if (o.truncate >= 0) s += " --truncate " + std::to_string(o.truncate);
  if (o.degree_bound >= 0) s += " --degree-bound " + std::to_string(o.degree_bound);
  if (o.strict_table) s += " --strict-table";
  if (o.warn_only) s += " --warn-only";
  return s;
}

void append_axiom_result(Out& out, const HopfAxiomsResult& result) {
  out << render_report(result.report);
  out << "FLAG commutative " << (result.commutative ? "true" : "false") << "\n";
  out << "FLAG cocommutative-braided "
      << (result.cocommutative_braided ? "true" : "false") << "\n";
  out << "FLAG cocommutative-flip " << (result.cocommutative_flip ? "true" : "false")
      << "\n";
}

RunResult finish(Out& out, bool passed) {
  return RunResult{out.os.str(), passed ? 0 : 1};
}

RunResult cmd_families(const ModelDocument& doc, const ExecOptions& opts, Out& out) {
  const auto& chi = doc.bicharacter();
  int n = opts.n < 0 ? 2 : opts.n;
  if (opts.zeta.empty()) {
    for (const auto& [zeta, count] : list_zeta_values(chi, n))
      out << "ZETA " << render_scalar(zeta) << " count=" << count << "\n";
    return finish(out, true);
  }
  CycScalar zeta = parse_scalar(opts.zeta);
  auto fams = enumerate_zeta_families(chi, n, zeta);
  for (const auto& fam : fams) {
    out << "FAMILY ";
    for (size_t i = 0; i < fam.members.size(); ++i) {
      if (i) out << ",";
      out << render_group_element(fam.members[i]);
    }
    out << "\n";
  }
  out << "COUNT " << fams.size() << "\n";
  return finish(out, true);
}

RunResult cmd_rho(const ModelDocument& doc, const ExecOptions& opts, Out& out) {
  if (opts.perm.empty() || opts.zeta.empty() || opts.family.empty())
    throw ValidationError("rho", "needs --perm, --zeta, and --family");
  std::vector<int> images;
  {
    std::istringstream in(opts.perm);
    std::string part;
    while (std::getline(in, part, ',')) images.push_back((int)std::stol(part));
  }
  ZetaFamily fam{parse_scalar(opts.zeta),
                 parse_family_flag(doc.group, opts.family)};
  if (!is_zeta_family(doc.bicharacter(), fam.zeta, fam.members))
    throw NotAZetaFamily("the given tuple is not a zeta-family for that zeta");
  auto sigma = Permutation::from_one_line(images);
  out << "rho = " << render_scalar(rho(doc.bicharacter(), sigma, fam)) << "\n";
  return finish(out, true);
}

RunResult cmd_bracket(const ModelDocument& doc, const ExecOptions& opts, Out& out) {
  if (opts.zeta.empty() || opts.family.empty())
    throw ValidationError("bracket", "needs --zeta and --family");
  ZetaFamily fam{parse_scalar(opts.zeta),
                 parse_family_flag(doc.group, opts.family)};
  auto names = bracket_generator_names(fam.members.size());
  auto table = GeneratorTable::make(doc.group, names, fam.members);
  std::vector<GradedPoly> xs;
  for (size_t i = 0; i < names.size(); ++i)
    xs.push_back(GradedPoly::generator(table, i));
  out << render_poly(bracket_eval(doc.bicharacter(), xs, fam)) << "\n";
  return finish(out, true);
}

RunResult cmd_check_identities(const ModelDocument& doc, const ExecOptions& opts,
                               Out& out) {
  const auto& chi = doc.bicharacter();
  CheckReport combined;
  combined.title = "check-identities";

  if (doc.lie) {
    auto lie_report = lie_validate(*doc.lie, opts.strict_table);
    for (auto& e : lie_report.entries) combined.entries.push_back(e);
  }

  for (int n = 2; n <= opts.max_n; ++n) {
    for (const auto& [zeta, count] : list_zeta_values(chi, n)) {
      if (count == 0) continue;
      auto fams = enumerate_zeta_families(chi, n, zeta);
      bool primitive = is_primitive_nth_root(zeta, n);
      for (const auto& fam : fams) {
        combined.add("CHECK symmetry " + render_family(fam),
                     check_symmetry(chi, fam).passed());
        if (primitive) {
          combined.add("CHECK main-theorem " + render_family(fam),
                       check_main_theorem(chi, fam).passed());
          for (const auto& h : doc.group->elements()) {
            bool ok = true;
            for (const auto& g : fam.members)
              if (!is_zeta_family(chi, CycScalar::from_int(-1), {h, g})) ok = false;
            if (!ok) continue;
            combined.add("CHECK jacobi2 " + render_family(fam) +
                             " h=" + render_group_element(h),
                         check_jacobi2(chi, fam, h).passed());
          }
        }
      }
    }
    // First Jacobi: length n+1 families whose zeta is a primitive n-th root.
    for (const auto& [zeta, count] : list_zeta_values(chi, n + 1)) {
      if (count == 0 || !is_primitive_nth_root(zeta, n)) continue;
      for (const auto& fam : enumerate_zeta_families(chi, n + 1, zeta))
        combined.add("CHECK jacobi1 " + render_family(fam),
                     check_jacobi1(chi, fam).passed());
    }
  }
  out << render_report(combined);
  return finish(out, combined.passed());
}

RunResult cmd_envelop(const ModelDocument& doc, const ExecOptions& opts, Out& out) {
  if (!doc.lie) throw ValidationError("model", "envelop needs a [lie] section");
  auto H = model_hopf_instance(doc, opts);
  const auto& alg = H.carrier;
  out << "STABILIZED " << (alg.stabilized() ? "true" : "false") << "\n";
  for (const auto& [lhs, rhs] : alg.rules())
    out << "RULE " << render_word(*alg.table(), lhs) << " -> " << render_poly(rhs)
        << "\n";
  out << "FINITE " << (alg.finite_dimensional() ? "true" : "false") << "\n";
  if (alg.finite_dimensional()) {
    out << "DIMENSION " << alg.dimension() << "\n";
    for (const auto& w : alg.full_basis())
      out << "BASIS " << render_word(*alg.table(), w) << "\n";
  } else if (alg.stabilized()) {
    for (int len = 0; len <= alg.degree_bound(); ++len)
      out << "GROWTH len<=" << len << " dim=" << alg.basis(len).size() << "\n";
  }
  return finish(out, alg.stabilized());
}

RunResult cmd_hopf_check(const ModelDocument& doc, const ExecOptions& opts, Out& out) {
  auto H = model_hopf_instance(doc, opts);
  auto result = hopf_axioms_check(H, opts.truncate);
  append_axiom_result(out, result);
  return finish(out, result.report.passed());
}

RunResult cmd_primitives(const ModelDocument& doc, const ExecOptions& opts, Out& out) {
  auto H = model_hopf_instance(doc, opts);
  auto prims = primitives_solve(H);
  for (const auto& [deg, vecs] : prims.components) {
    out << "PRIMITIVE degree=" << render_group_element(deg) << " dim=" << vecs.size()
        << "\n";
    for (const auto& v : vecs)
      out << "PRIMITIVE-BASIS degree=" << render_group_element(deg) << " "
          << render_poly(v) << "\n";
  }
  out << "TOTAL " << prims.total_dimension() << "\n";
  return finish(out, true);
}

RunResult cmd_biproduct(const ModelDocument& doc, const ExecOptions& opts, Out& out) {
  auto H = model_hopf_instance(doc, opts);
  auto B = biproduct_build(H);
  out << "DIMENSION " << B.dimension << "\n";
  auto result = hopf_axioms_check(B.hopf);
  append_axiom_result(out, result);
  return finish(out, result.report.passed());
}

}  // namespace

RunResult execute(const ModelDocument& doc, const ExecOptions& opts) {
  Out out{std::ostringstream{}, opts.format == "machine"};
  out.header("command: " + echo_options(opts));
  out.header("model: " + doc.name);

  if (opts.command == "families") return cmd_families(doc, opts, out);
  if (opts.command == "rho") return cmd_rho(doc, opts, out);
  if (opts.command == "bracket") return cmd_bracket(doc, opts, out);
  if (opts.command == "check-identities") return cmd_check_identities(doc, opts, out);
  if (opts.command == "envelop") return cmd_envelop(doc, opts, out);
  if (opts.command == "hopf-check") return cmd_hopf_check(doc, opts, out);
  if (opts.command == "primitives") return cmd_primitives(doc, opts, out);
  if (opts.command == "biproduct") return cmd_biproduct(doc, opts, out);
  throw UnknownCommand(opts.command);
}

namespace {

ExecOptions make_opts(std::string command) {
  ExecOptions o;
  o.command = std::move(command);
  return o;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_manifest() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;
    auto add = [&](std::string name, std::string model, ExecOptions o) {
      v.push_back({std::move(name), std::move(model), std::move(o)});
    };

    ExecOptions o;

    o = make_opts("bracket");
    o.family = "(),()";
    o.zeta = "-1";
    add("brackets1-classical-pair", "classical.model", o);

    o = make_opts("check-identities");
    o.max_n = 2;
    add("brackets1-classical-identities", "classical.model", o);

    o = make_opts("bracket");
    o.family = "1,1";
    o.zeta = "-1";
    add("brackets2-super-pair", "super.model", o);

    o = make_opts("check-identities");
    o.max_n = 2;
    add("brackets2-super-identities", "super.model", o);

    o = make_opts("bracket");
    o.family = "(1,0),(0,1)";
    o.zeta = "-1";
    add("brackets3-color-pair", "color.model", o);

    o = make_opts("check-identities");
    o.max_n = 2;
    add("brackets3-color-identities", "color.model", o);

    o = make_opts("families");
    o.n = 3;
    o.zeta = "z^1@3";
    add("brackets4-c3-families", "c3.model", o);

    o = make_opts("bracket");
    o.family = "1,1,1";
    o.zeta = "z^1@3";
    add("brackets4-c3-ternary", "c3.model", o);

    o = make_opts("rho");
    o.perm = "2,1,3,4,5,6";
    o.zeta = "-z^1@3";
    o.family = "1,1,1,1,1,1";
    add("brackets4-c3-sixfold-sign", "c3.model", o);

    o = make_opts("check-identities");
    o.max_n = 3;
    add("brackets4-c3-identities", "c3.model", o);

    o = make_opts("bracket");
    o.family = "(1,0),(1,0),(1,0)";
    o.zeta = "z^1@3";
    add("brackets5-cnr-symmetric-sum", "cnr.model", o);

    o = make_opts("bracket");
    o.family = "(1,0),(1,0),(0,1)";
    o.zeta = "z^1@3";
    add("brackets6-ex6-family-a", "example6.model", o);

    o = make_opts("bracket");
    o.family = "(1,0),(0,1),(0,1)";
    o.zeta = "z^1@3";
    add("brackets6-ex6-family-b", "example6.model", o);

    add("ex5-1-sweedler-envelop", "sweedler.model", make_opts("envelop"));
    add("ex5-1-sweedler-biproduct", "sweedler.model", make_opts("biproduct"));
    add("ex5-2-taft-biproduct", "taft3.model", make_opts("biproduct"));
    add("ex5-2-taft-primitives", "taft3.model", make_opts("primitives"));

    add("ex5-3-envelop", "ex5-3.model", make_opts("envelop"));
    o = make_opts("hopf-check");
    o.truncate = 6;
    add("ex5-3-hopf-truncated", "ex5-3.model", o);

    add("ex5-4-envelop", "ex5-4.model", make_opts("envelop"));
    add("ex5-5-envelop", "ex5-5.model", make_opts("envelop"));
    return v;
  }();
  return entries;
}

RunResult run_paper_examples(const std::string& corpus_dir, const std::string& format) {
  Out out{std::ostringstream{}, format == "machine"};
  out.header("command: paper-examples");
  out.header("corpus: " + corpus_dir);

  size_t failed = 0;
  const auto& entries = corpus_manifest();
  for (const auto& entry : entries) {
    std::string verdict;
    try {
      ModelDocument doc = load_model(corpus_dir + "/" + entry.model_file);
      RunResult got = execute(doc, entry.options);

      std::ifstream exp(corpus_dir + "/expected/" + entry.name + ".txt");
      if (!exp) {
        verdict = "FAIL missing-expected-file";
      } else {
        std::ostringstream buf;
        buf << exp.rdbuf();
        if (buf.str() == got.text && got.exit_code == 0)
          verdict = "PASS";
        else if (buf.str() != got.text)
          verdict = "FAIL output-differs";
        else
          verdict = "FAIL exit-code " + std::to_string(got.exit_code);
      }
    } catch (const Error& e) {
      verdict = std::string("FAIL error: ") + e.what();
    }
    if (verdict != "PASS") ++failed;
    out << "EXAMPLE " << entry.name << " " << verdict << "\n";
  }
  out << "SUMMARY " << (failed == 0 ? "PASS" : "FAIL") << " checked="
      << entries.size() << " failed=" << failed << "\n";
  return RunResult{out.os.str(), failed == 0 ? 0 : 1};
}

}  // namespace braidlie
