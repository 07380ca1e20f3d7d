// Acceptance suite: one line per criterion, exact arithmetic throughout,
// wall-clock budgets enforced. Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "braidlie/derivation.hpp"
#include "braidlie/hopf.hpp"
#include "braidlie/linalg.hpp"
#include "braidlie/runner.hpp"
#include "braidlie/text.hpp"

using namespace braidlie;

namespace {

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

const std::vector<std::vector<long>> kGroupShapes{{2}, {3}, {4},    {5},
                                                  {6}, {3, 3}, {2, 4}};

// Canonical diagonal bicharacter: E_ii = L / m_i, zero off-diagonal.
Bicharacter canonical_chi(const std::vector<long>& shape) {
  auto G = AbelianGroup::make(shape);
  long L = 1;
  for (long m : shape) L = std::lcm(L, m);
  std::vector<std::vector<long>> E(shape.size(), std::vector<long>(shape.size(), 0));
  for (size_t i = 0; i < shape.size(); ++i) E[i][i] = L / shape[i];
  return Bicharacter::make(G, L, E);
}

// ---------------------------------------------------------------------------

bool criterion_rho_cocycle(std::string& detail) {
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<size_t> pick_shape(0, kGroupShapes.size() - 1);
  std::uniform_int_distribution<int> pick_n(2, 5);
  long checked = 0;

  for (int trial = 0; trial < 500; ++trial) {
    auto shape = kGroupShapes[pick_shape(rng)];
    auto G = AbelianGroup::make(shape);
    long L = 1;
    for (long m : shape) L = std::lcm(L, m);
    size_t s = shape.size();
    std::vector<std::vector<long>> E(s, std::vector<long>(s));
    for (size_t i = 0; i < s; ++i)
      for (size_t j = 0; j < s; ++j) {
        long base = L / std::gcd(shape[i], shape[j]);
        E[i][j] = base * std::uniform_int_distribution<long>(0, L / base - 1)(rng);
      }
    auto chi = Bicharacter::make(G, L, E);

    int n = pick_n(rng);
    auto pool = G->elements();
    std::uniform_int_distribution<size_t> pe(0, pool.size() - 1);

    // Try a random tuple; fall back to a constant one (always a family).
    std::vector<GroupElement> members;
    for (int attempt = 0; attempt < 8 && members.empty(); ++attempt) {
      std::vector<GroupElement> cand;
      for (int i = 0; i < n; ++i) cand.push_back(pool[pe(rng)]);
      long v = -1;
      bool constant = true;
      for (int i = 0; i < n && constant; ++i)
        for (int j = i + 1; j < n; ++j) {
          long e = (chi.exponent_of(cand[i], cand[j]) +
                    chi.exponent_of(cand[j], cand[i])) % L;
          if (v < 0) v = e;
          if (e != v) {
            constant = false;
            break;
          }
        }
      if (constant) members = std::move(cand);
    }
    long v;
    if (members.empty()) {
      auto g = pool[pe(rng)];
      members.assign((size_t)n, g);
      v = (2 * chi.exponent_of(g, g)) % L;
    } else {
      v = members.size() > 1 ? (chi.exponent_of(members[0], members[1]) +
                                chi.exponent_of(members[1], members[0])) % L
                             : 0;
    }
    CycScalar zeta = root_of_unity(2 * L, v + (trial % 2) * L);
    ZetaFamily fam{zeta, members};
    if (!is_zeta_family(chi, zeta, fam.members)) return false;

    auto perms = Permutation::all(n);
    std::uniform_int_distribution<size_t> pp(0, perms.size() - 1);
    auto sigma = perms[pp(rng)], tau = perms[pp(rng)];
    if (rho(chi, sigma.compose(tau), fam) !=
        rho(chi, tau, fam.permuted(sigma)) * rho(chi, sigma, fam))
      return false;
    ++checked;
  }
  detail = std::to_string(checked) + " randomized instances";
  return checked == 500;
}

bool criterion_symmetry(std::string& detail) {
  long families = 0;
  for (const auto& shape : kGroupShapes) {
    auto chi = canonical_chi(shape);
    for (int n = 2; n <= 4; ++n) {
      for (const auto& [zeta, count] : list_zeta_values(chi, n)) {
        if (count == 0) continue;
        for (const auto& fam : enumerate_zeta_families(chi, n, zeta)) {
          if (!check_symmetry(chi, fam).passed()) {
            detail = "failed at " + render_family(fam);
            return false;
          }
          ++families;
        }
      }
    }
  }
  detail = std::to_string(families) + " families, all sigma";
  return true;
}

bool criterion_jacobi(std::string& detail) {
  long checks = 0;
  for (const auto& shape : kGroupShapes) {
    auto chi = canonical_chi(shape);
    auto elements = chi.group()->elements();
    for (int n = 2; n <= 4; ++n) {
      // Identity 1 over (n+1)-families with zeta a primitive n-th root.
      for (const auto& [zeta, count] : list_zeta_values(chi, n + 1)) {
        if (count == 0 || !is_primitive_nth_root(zeta, n)) continue;
        for (const auto& fam : enumerate_zeta_families(chi, n + 1, zeta)) {
          if (!check_jacobi1(chi, fam).passed()) {
            detail = "jacobi1 failed at " + render_family(fam);
            return false;
          }
          ++checks;
        }
      }
      // Identity 2 over n-families with primitive zeta and compatible h.
      for (const auto& [zeta, count] : list_zeta_values(chi, n)) {
        if (count == 0 || !is_primitive_nth_root(zeta, n)) continue;
        for (const auto& fam : enumerate_zeta_families(chi, n, zeta)) {
          for (const auto& h : elements) {
            bool ok = true;
            for (const auto& g : fam.members)
              if (!is_zeta_family(chi, CycScalar::from_int(-1), {h, g})) {
                ok = false;
                break;
              }
            if (!ok) continue;
            if (!check_jacobi2(chi, fam, h).passed()) {
              detail = "jacobi2 failed at " + render_family(fam) +
                       " h=" + render_group_element(h);
              return false;
            }
            ++checks;
          }
        }
      }
    }
  }
  detail = std::to_string(checks) + " identity instances";
  return true;
}

bool criterion_main_theorem(std::string& detail) {
  long families = 0;
  for (const auto& shape : kGroupShapes) {
    auto chi = canonical_chi(shape);
    for (int n = 2; n <= 5; ++n) {
      for (const auto& [zeta, count] : list_zeta_values(chi, n)) {
        if (count == 0 || !is_primitive_nth_root(zeta, n)) continue;
        for (const auto& fam : enumerate_zeta_families(chi, n, zeta)) {
          if (!check_main_theorem(chi, fam).passed()) {
            detail = "failed at " + render_family(fam);
            return false;
          }
          ++families;
        }
      }
    }
  }
  // Negative control: zeta = 1, n = 2 must report a nonzero mixed term.
  auto G = AbelianGroup::make({2});
  auto chi = Bicharacter::trivial(G);
  ZetaFamily bad{CycScalar::one(), {G->zero(), G->zero()}};
  auto control = check_main_theorem(chi, bad, false);
  if (control.passed()) {
    detail = "negative control unexpectedly passed";
    return false;
  }
  detail = std::to_string(families) + " families + negative control";
  return true;
}

bool criterion_gaussian_sylvester(std::string& detail) {
  // Integer polynomials, ascending coefficients.
  using IPoly = std::vector<Int>;
  auto mul = [](const IPoly& a, const IPoly& b) {
    IPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  auto one_minus_qk = [](long k) {
    IPoly p(k + 1, Int(0));
    p[0] = 1;
    p[k] = -1;
    return p;
  };
  auto trim = [](IPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  };

  long identities = 0;
  for (long n = 0; n <= 12; ++n)
    for (long i = 0; i <= n; ++i) {
      IPoly lhs{Int(1)};  // prod_{k=n-i+1}^{n} (1 - q^k)
      for (long k = n - i + 1; k <= n; ++k) lhs = mul(lhs, one_minus_qk(k));
      IPoly partition_sum(i * (n - i) + 1, Int(0));
      for (long t = 0; t <= i * (n - i); ++t)
        partition_sum[t] = partition_count(i, n - i, t);
      IPoly rhs = partition_sum;  // times prod_{k=1}^{i} (1 - q^k)
      for (long k = 1; k <= i; ++k) rhs = mul(rhs, one_minus_qk(k));
      if (trim(lhs) != trim(rhs)) {
        detail = "Sylvester identity failed at n=" + std::to_string(n) +
                 " i=" + std::to_string(i);
        return false;
      }
      ++identities;
    }

  for (long n = 2; n <= 12; ++n)
    for (long k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      for (long i = 1; i < n; ++i)
        if (!gaussian_coefficient(i, n, root_of_unity(n, k)).is_zero()) {
          detail = "vanishing failed at n=" + std::to_string(n);
          return false;
        }
    }
  detail = std::to_string(identities) + " polynomial identities + vanishing";
  return true;
}

HopfInstance taft_line(long n) {
  auto G = AbelianGroup::make({n});
  auto chi = Bicharacter::make(G, n, {{1}});
  auto t1 = G->element({1});
  auto table = GeneratorTable::make(G, {"x"}, {t1});
  LiePresentation P(chi, table);
  ZetaFamily fam{chi(t1, t1), std::vector<GroupElement>((size_t)n, t1)};
  P.set_entry(fam, std::vector<int>((size_t)n, 0), GradedPoly(table));
  P.symmetrize();
  return enveloping_build(P, (int)(2 * n));
}

bool criterion_sweedler(std::string& detail) {
  auto B = biproduct_build(taft_line(2));
  if (B.dimension != 4) {
    detail = "dimension " + std::to_string(B.dimension);
    return false;
  }
  auto result = hopf_axioms_check(B.hopf);
  if (!result.report.passed()) {
    detail = "axioms failed";
    return false;
  }
  if (result.commutative || result.cocommutative_flip) {
    detail = "expected noncommutative and noncocommutative";
    return false;
  }
  detail = "dimension 4, axioms pass, both flags noncommutative/noncocommutative";
  return true;
}

bool criterion_taft(std::string& detail) {
  for (long n : {2L, 3L, 4L}) {
    auto B = biproduct_build(taft_line(n));
    if (B.dimension != n * n) {
      detail = "n=" + std::to_string(n) + " dimension " + std::to_string(B.dimension);
      return false;
    }
    const auto& alg = B.hopf.carrier;
    auto table = alg.table();
    auto x = GradedPoly::generator(table, 0);
    auto t = GradedPoly::generator(table, (size_t)B.group_generators[0]);

    GradedPoly tn = GradedPoly::unit(table), xn = GradedPoly::unit(table);
    for (long i = 0; i < n; ++i) {
      tn = alg.mul_nf(tn, t);
      xn = alg.mul_nf(xn, x);
    }
    if (!(tn == GradedPoly::unit(table)) || !xn.is_zero() ||
        alg.mul_nf(t, x) != root_of_unity(n, 1) * alg.mul_nf(x, t)) {
      detail = "relations failed at n=" + std::to_string(n);
      return false;
    }
    if (!hopf_axioms_check(B.hopf).report.passed()) {
      detail = "axioms failed at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "n in {2,3,4}: dimension n^2, relations, axioms";
  return true;
}

bool criterion_primitives(std::string& detail) {
  for (long n : {2L, 3L, 4L, 5L}) {
    auto H = taft_line(n);
    auto prims = primitives_solve(H);

    // Oracle: independent kernel over the basis {1, x, ..., x^(n-1)} with
    // Delta coefficients supplied by gaussian_coefficient, not comultiply.
    auto zeta = root_of_unity(n, 1);
    std::vector<std::pair<long, long>> mixed;  // (i, j-i) pairs per power j
    std::map<std::pair<long, long>, size_t> row_of;
    for (long j = 0; j < n; ++j)
      for (long i = 1; i < j; ++i) row_of.emplace(std::make_pair(i, j - i), 0);
    size_t r = 0;
    for (auto& [key, idx] : row_of) idx = r++;
    Matrix mat(row_of.size() + 1, (size_t)n);
    for (long j = 0; j < n; ++j)
      for (long i = 1; i < j; ++i)
        mat.at(row_of.at({i, j - i}), (size_t)j) = gaussian_coefficient(i, j, zeta);
    // Constants are group-like, not primitive: Delta(1) - 1(x)1 - 1(x)1 = -1(x)1.
    mat.at(row_of.size(), 0) = CycScalar::one();
    auto kernel = kernel_basis(std::move(mat));
    if (kernel.size() != 1 || !kernel[0][1].is_one()) {
      detail = "oracle kernel wrong at n=" + std::to_string(n);
      return false;
    }

    if (prims.total_dimension() != 1 || prims.components.size() != 1) {
      detail = "solver dimension wrong at n=" + std::to_string(n);
      return false;
    }
    const auto& [deg, vecs] = prims.components[0];
    if (!(deg == H.chi.group()->element({1})) ||
        vecs[0] != GradedPoly::generator(H.carrier.table(), 0)) {
      detail = "solver output wrong at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "P(k[x]/(x^n)) = <x> in degree 1 for n in {2,3,4,5}, oracle agrees";
  return true;
}

bool criterion_example_5_3(std::string& detail) {
  auto G = AbelianGroup::make({3});
  auto chi = Bicharacter::make(G, 3, {{1}});
  auto one = G->element({1}), zero = G->zero();
  auto table = GeneratorTable::make(G, {"x", "y", "z"}, {one, one, zero});
  LiePresentation P(chi, table);
  auto zeta = root_of_unity(3, 1);
  ZetaFamily tern{zeta, {one, one, one}};
  P.set_entry(tern, {0, 0, 1}, GradedPoly::generator(table, 2));
  P.set_entry(tern, {0, 0, 0}, GradedPoly(table));
  P.set_entry(tern, {1, 1, 1}, GradedPoly(table));
  P.set_entry(tern, {0, 1, 1}, GradedPoly(table));
  ZetaFamily zx{CycScalar::from_int(-1), {zero, one}};
  P.set_entry(zx, {2, 0}, GradedPoly(table));
  P.set_entry(zx, {2, 1}, GradedPoly(table));
  P.symmetrize();

  auto H = enveloping_build(P, 8);
  if (!H.carrier.stabilized()) {
    detail = "completion did not stabilize";
    return false;
  }
  auto x = GradedPoly::generator(table, 0), y = GradedPoly::generator(table, 1);
  auto bracket = bracket_eval(chi, {x, x, y}, tern, &H.carrier);
  auto expected = CycScalar::from_int(2) * (x * x * y + x * y * x + y * x * x);
  if (bracket != H.carrier.normal_form(expected)) {
    detail = "normal form of [x,x,y] differs: " + render_poly(bracket);
    return false;
  }
  auto result = hopf_axioms_check(H, 6);
  if (!result.report.passed()) {
    detail = "truncated axioms failed";
    return false;
  }
  if (result.report.caveats.empty()) {
    detail = "truncation caveat missing";
    return false;
  }
  detail = "stabilized, [x,x,y] = 2(x^2y + xyx + yx^2), axioms at length <= 6";
  return true;
}

bool criterion_derivation_closure(std::string& detail) {
  auto G = AbelianGroup::make({3});
  auto chi = Bicharacter::make(G, 3, {{1}});
  auto table = GeneratorTable::make(G, {"x"}, {G->element({1})});
  auto x = GradedPoly::generator(table, 0);
  auto A = quotient_present(table, {x * x * x}, 6);

  std::vector<GradedDerivation> all;
  for (const auto& g : G->elements())
    for (auto& d : derivations_solve(A, chi, g)) all.push_back(std::move(d));
  if (all.empty()) {
    detail = "no derivations found";
    return false;
  }

  Span span(9);
  for (const auto& d : all) span.add(derivation_coordinates(A, d));

  long brackets = 0;
  int max_len = 3;
  std::function<void(std::vector<size_t>&)> rec = [&](std::vector<size_t>& pick) {
    if ((int)pick.size() >= 2) {
      std::vector<GroupElement> degs;
      std::vector<GradedDerivation> args;
      for (auto i : pick) {
        degs.push_back(all[i].degree);
        args.push_back(all[i]);
      }
      int n = (int)pick.size();
      for (const auto& [zeta, count] : list_zeta_values(chi, n)) {
        if (!is_primitive_nth_root(zeta, n)) continue;
        if (!is_zeta_family(chi, zeta, degs)) continue;
        auto br = derivation_bracket(A, chi, args, zeta);
        if (!span.contains(derivation_coordinates(A, br)))
          throw std::runtime_error("bracket escaped the solved span");
        ++brackets;
      }
    }
    if ((int)pick.size() == max_len) return;
    for (size_t i = 0; i < all.size(); ++i) {
      pick.push_back(i);
      rec(pick);
      pick.pop_back();
    }
  };
  std::vector<size_t> pick;
  try {
    rec(pick);
  } catch (const std::exception& e) {
    detail = e.what();
    return false;
  }
  detail = std::to_string(brackets) + " brackets, all inside Der(A)";
  return brackets > 0;
}

bool criterion_cli_determinism(std::string& detail) {
  std::string cmd = std::string("BRAIDLIE_CORPUS=") + BRAIDLIE_MODELS_DIR + " " +
                    BRAIDLIE_CLI_PATH + " paper-examples 2>/dev/null";
  auto capture = [&](int& code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    code = pclose(pipe);
    return out;
  };
  int code1 = -1, code2 = -1;
  std::string run1 = capture(code1);
  std::string run2 = capture(code2);
  if (run1.empty() || run1 != run2) {
    detail = "outputs differ or empty";
    return false;
  }
  if (code1 != 0 || code2 != 0) {
    detail = "exit code " + std::to_string(code1) + "/" + std::to_string(code2);
    return false;
  }
  detail = "byte-identical across two runs, exit 0";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "rho cocycle law", 10, criterion_rho_cocycle},
      {2, "symmetry theorem", 30, criterion_symmetry},
      {3, "jacobi identities", 60, criterion_jacobi},
      {4, "main theorem mixed coefficients", 120, criterion_main_theorem},
      {5, "gaussian/sylvester identity", 5, criterion_gaussian_sylvester},
      {6, "sweedler reproduction", 5, criterion_sweedler},
      {7, "taft reproduction", 30, criterion_taft},
      {8, "primitive solver", 10, criterion_primitives},
      {9, "example 5(3) reproduction", 60, criterion_example_5_3},
      {10, "derivation closure", 10, criterion_derivation_closure},
      {11, "cli determinism", 60, criterion_cli_determinism},
  };

  bool all_pass = true;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    bool in_budget = seconds < c.limit_seconds;
    bool pass = ok && in_budget;
    all_pass = all_pass && pass;
    std::ostringstream line;
    line << "CRITERION " << c.number << " (" << c.name << "): "
         << (pass ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) line << " [" << detail << "]";
    if (ok && !in_budget) line << " [over budget]";
    char t[32];
    std::snprintf(t, sizeof t, "%.2f", seconds);
    line << " (" << t << " s, limit " << c.limit_seconds << " s)";
    if (pass && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return all_pass ? 0 : 1;
}
