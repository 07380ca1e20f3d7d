#include "braidlie/lie.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "braidlie/errors.hpp"
#include "braidlie/text.hpp"

namespace braidlie {

namespace {

TablePtr formal_table(const GroupPtr& group, const std::vector<GroupElement>& degrees,
                      const std::string& prefix) {
  std::vector<std::string> names;
  for (size_t i = 0; i < degrees.size(); ++i)
    names.push_back(prefix + std::to_string(i + 1));
  return GeneratorTable::make(group, names, degrees);
}

std::vector<GradedPoly> formal_generators(const TablePtr& table) {
  std::vector<GradedPoly> xs;
  for (size_t i = 0; i < table->size(); ++i)
    xs.push_back(GradedPoly::generator(table, i));
  return xs;
}

// The 2-ary (-1)-bracket [a, b] = ab - chi(deg a, deg b) ba used by both
// Jacobi identities. Degrees must make (deg a, deg b) a (-1)-family.
GradedPoly minus_one_pair_bracket(const Bicharacter& chi, const GradedPoly& a,
                                  const GradedPoly& b) {
  auto da = a.homogeneous_degree(), db = b.homogeneous_degree();
  if (!da || !db) throw DegreeMismatch("pair bracket needs homogeneous arguments");
  ZetaFamily pair{CycScalar::from_int(-1), {*da, *db}};
  return bracket_eval(chi, {a, b}, pair);
}

}  // namespace

GradedPoly bracket_eval(const Bicharacter& chi, const std::vector<GradedPoly>& xs,
                        const ZetaFamily& fam, const PresentedAlgebra* ambient) {
  size_t n = fam.members.size();
  if (xs.size() != n) throw LengthMismatch("bracket arity differs from family length");
  if (n == 0) throw LengthMismatch("empty bracket");
  if (!is_zeta_family(chi, fam.zeta, fam.members))
    throw NotAZetaFamily("tuple fails the zeta-family condition for " +
                         render_scalar(fam.zeta));
  const TablePtr& table = xs[0].table();
  for (size_t i = 0; i < n; ++i) {
    auto d = xs[i].homogeneous_degree();
    if (!d || (!xs[i].is_zero() && !(*d == fam.members[i])))
      throw DegreeMismatch("argument " + std::to_string(i + 1) +
                           " is not homogeneous of the family degree");
  }

  GradedPoly acc(table);
  CycScalar zinv = fam.zeta.inverse();
  for (const auto& sigma : Permutation::all((int)n)) {
    GradedPoly prod = rho(chi, sigma, fam, zinv) * xs[sigma(0)];
    for (int i = 1; i < (int)n; ++i) {
      prod = ambient ? ambient->mul_nf(prod, xs[sigma(i)]) : prod * xs[sigma(i)];
    }
    acc = acc + prod;
  }
  return ambient ? ambient->normal_form(acc) : acc;
}

CheckReport check_symmetry(const Bicharacter& chi, const ZetaFamily& fam) {
  CheckReport report;
  report.title = "symmetry";
  if (!is_zeta_family(chi, fam.zeta, fam.members))
    throw NotAZetaFamily("symmetry check needs a valid zeta-family");

  auto table = formal_table(chi.group(), fam.members, "x");
  auto xs = formal_generators(table);
  GradedPoly lhs = bracket_eval(chi, xs, fam);

  int n = (int)fam.members.size();
  CycScalar zinv = fam.zeta.inverse();
  for (const auto& sigma : Permutation::all(n)) {
    std::vector<GradedPoly> permuted;
    for (int i = 0; i < n; ++i) permuted.push_back(xs[sigma(i)]);
    GradedPoly rhs = rho(chi, sigma, fam, zinv) * bracket_eval(chi, permuted, fam.permuted(sigma));
    bool ok = lhs == rhs;
    report.add("CHECK symmetry sigma=" + render_permutation(sigma), ok,
               ok ? "" : "difference " + render_poly(lhs - rhs));
  }
  return report;
}

CheckReport check_jacobi1(const Bicharacter& chi, const ZetaFamily& fam) {
  int len = (int)fam.members.size();
  if (len < 2) throw LengthMismatch("first Jacobi identity needs length >= 2");
  int n = len - 1;
  if (!is_primitive_nth_root(fam.zeta, n))
    throw NotPrimitiveRoot("zeta must be a primitive " + std::to_string(n) +
                           "-th root of unity");
  if (!is_zeta_family(chi, fam.zeta, fam.members))
    throw NotAZetaFamily("tuple fails the zeta-family condition");

  CheckReport report;
  report.title = "jacobi1";
  auto table = formal_table(chi.group(), fam.members, "x");
  auto xs = formal_generators(table);

  GradedPoly total(table);
  for (int i = 1; i <= len; ++i) {
    // The cycle (i...1): 1 -> i, k -> k-1 for 2 <= k <= i, fixed beyond.
    std::vector<int> images{i};
    for (int k = 2; k <= i; ++k) images.push_back(k - 1);
    for (int k = i + 1; k <= len; ++k) images.push_back(k);
    auto cyc = Permutation::from_one_line(images);
    CycScalar coeff = rho(chi, cyc, fam);

    // Cross-check the closed form zeta^(1-i) prod_{j<i} chi(g_j, g_i).
    CycScalar closed = fam.zeta.pow(1 - i);
    for (int j = 1; j < i; ++j)
      closed *= chi(fam.members[j - 1], fam.members[i - 1]);
    report.add("CHECK rho-cycle-form i=" + std::to_string(i), coeff == closed,
               coeff == closed ? "" : render_scalar(coeff) + " vs " + render_scalar(closed));

    // Outer pair (g_i, sum of the rest) must be a (-1)-family.
    GroupElement rest_sum = chi.group()->zero();
    std::vector<GroupElement> rest;
    std::vector<GradedPoly> rest_args;
    for (int j = 1; j <= len; ++j) {
      if (j == i) continue;
      rest.push_back(fam.members[j - 1]);
      rest_args.push_back(xs[j - 1]);
      rest_sum = rest_sum + fam.members[j - 1];
    }
    bool pair_ok = is_zeta_family(chi, CycScalar::from_int(-1),
                                  {fam.members[i - 1], rest_sum});
    report.add("CHECK outer-pair-is-minus-one-family i=" + std::to_string(i), pair_ok);
    if (!pair_ok) continue;

    GradedPoly inner = bracket_eval(chi, rest_args, ZetaFamily{fam.zeta, rest});
    total = total + coeff * minus_one_pair_bracket(chi, xs[i - 1], inner);
  }
  report.add("CHECK jacobi1-sum-vanishes", total.is_zero(),
             total.is_zero() ? "" : render_poly(total));
  return report;
}

CheckReport check_jacobi2(const Bicharacter& chi, const ZetaFamily& fam,
                          const GroupElement& h) {
  int n = (int)fam.members.size();
  if (!is_primitive_nth_root(fam.zeta, n))
    throw NotPrimitiveRoot("zeta must be a primitive " + std::to_string(n) +
                           "-th root of unity");
  if (!is_zeta_family(chi, fam.zeta, fam.members))
    throw NotAZetaFamily("tuple fails the zeta-family condition");
  for (int i = 0; i < n; ++i)
    if (!is_zeta_family(chi, CycScalar::from_int(-1), {h, fam.members[i]}))
      throw PairNotMinusOneFamily(
          i + 1, "(h, g_" + std::to_string(i + 1) + ") is not a (-1)-family");

  CheckReport report;
  report.title = "jacobi2";

  // Formal generators: x of degree h, then y_1..y_n.
  std::vector<GroupElement> degrees{h};
  for (const auto& g : fam.members) degrees.push_back(g);
  std::vector<std::string> names{"x"};
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  auto table = GeneratorTable::make(chi.group(), names, degrees);
  auto x = GradedPoly::generator(table, 0);
  std::vector<GradedPoly> ys;
  for (int i = 1; i <= n; ++i) ys.push_back(GradedPoly::generator(table, (size_t)i));

  GradedPoly inner = bracket_eval(chi, ys, fam);
  GradedPoly lhs = minus_one_pair_bracket(chi, x, inner);

  GradedPoly rhs(table);
  for (int i = 0; i < n; ++i) {
    CycScalar prefix = CycScalar::one();
    for (int j = 0; j < i; ++j) prefix *= chi(h, fam.members[j]);
    GradedPoly xy = minus_one_pair_bracket(chi, x, ys[i]);
    std::vector<GradedPoly> args = ys;
    args[i] = xy;
    std::vector<GroupElement> members = fam.members;
    members[i] = h + fam.members[i];
    bool shifted_ok = is_zeta_family(chi, fam.zeta, members);
    report.add("CHECK shifted-family-valid i=" + std::to_string(i + 1), shifted_ok);
    if (!shifted_ok) continue;
    rhs = rhs + prefix * bracket_eval(chi, args, ZetaFamily{fam.zeta, members});
  }
  bool ok = lhs == rhs;
  report.add("CHECK jacobi2-identity", ok, ok ? "" : render_poly(lhs - rhs));
  return report;
}

TensorPoly primitive_lift_expansion(const Bicharacter& chi, const ZetaFamily& fam) {
  auto table = formal_table(chi.group(), fam.members, "x");
  auto xs = formal_generators(table);
  int n = (int)fam.members.size();

  TensorPoly acc(table);
  CycScalar zinv = fam.zeta.inverse();
  for (const auto& sigma : Permutation::all(n)) {
    TensorPoly prod = rho(chi, sigma, fam, zinv) * TensorPoly::unit(table);
    for (int i = 0; i < n; ++i) {
      TensorPoly lift = TensorPoly::left(xs[sigma(i)]) + TensorPoly::right(xs[sigma(i)]);
      prod = tensor_mul(prod, lift, chi);
    }
    acc = acc + prod;
  }
  return acc;
}

CheckReport check_main_theorem(const Bicharacter& chi, const ZetaFamily& fam,
                               bool require_primitive) {
  int n = (int)fam.members.size();
  bool primitive = is_primitive_nth_root(fam.zeta, n);
  if (require_primitive && !primitive)
    throw NotPrimitiveRoot("zeta must be a primitive " + std::to_string(n) +
                           "-th root of unity");
  if (!is_zeta_family(chi, fam.zeta, fam.members))
    throw NotAZetaFamily("tuple fails the zeta-family condition");

  CheckReport report;
  report.title = "main-theorem";
  report.add("CHECK zeta-primitive-nth-root n=" + std::to_string(n), primitive,
             primitive ? "" : render_scalar(fam.zeta));

  TensorPoly expansion = primitive_lift_expansion(chi, fam);
  auto table = expansion.table();
  auto xs = formal_generators(table);
  GradedPoly bracket = bracket_eval(chi, xs, fam);
  TensorPoly expected = TensorPoly::left(bracket) + TensorPoly::right(bracket);

  // Mixed coefficients c_{sigma,i}, 0 < i < n: every term with both legs
  // nonempty must cancel.
  size_t mixed_failures = 0;
  for (const auto& [key, c] : expansion.terms()) {
    if (key.first.empty() || key.second.empty()) continue;
    ++mixed_failures;
    Word joined = key.first;
    joined.insert(joined.end(), key.second.begin(), key.second.end());
    std::vector<int> images;
    for (auto g : joined) images.push_back((int)g + 1);
    report.add("CHECK mixed-coefficient sigma=" +
                   render_permutation(Permutation::from_one_line(images)) +
                   " i=" + std::to_string(key.first.size()),
               false, "coefficient " + render_scalar(c));
  }
  if (mixed_failures == 0) report.add("CHECK mixed-coefficients-vanish", true);

  // Boundary coefficients c_{1,n} = c_{1,0} = 1.
  Word full;
  for (uint32_t i = 0; i < (uint32_t)n; ++i) full.push_back(i);
  auto left_it = expansion.terms().find({full, Word{}});
  auto right_it = expansion.terms().find({Word{}, full});
  bool left_one = left_it != expansion.terms().end() && left_it->second.is_one();
  bool right_one = right_it != expansion.terms().end() && right_it->second.is_one();
  report.add("CHECK boundary-coefficient-left", left_one);
  report.add("CHECK boundary-coefficient-right", right_one);

  bool equal = expansion == expected;
  report.add("CHECK expansion-equals-primitive-form", equal,
             equal ? "" : render_tensor(expansion - expected));
  return report;
}

long partition_count(long i, long j, long t) {
  if (t < 0) return 0;
  if (t == 0) return 1;
  if (i <= 0 || j <= 0) return 0;
  static std::map<std::tuple<long, long, long>, long> memo;
  auto key = std::make_tuple(i, j, t);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // Split on the largest part k; the remaining parts are <= k.
  long total = 0;
  for (long k = 1; k <= std::min(i, t); ++k) total += partition_count(k, j - 1, t - k);
  memo[key] = total;
  return total;
}

CycScalar gaussian_coefficient(long i, long n, const CycScalar& zeta) {
  if (i < 0 || i > n) throw Error("gaussian coefficient needs 0 <= i <= n");
  CycScalar acc = CycScalar::zero();
  CycScalar zpow = CycScalar::one();
  for (long t = 0; t <= i * (n - i); ++t) {
    long p = partition_count(i, n - i, t);
    if (p != 0) acc += CycScalar::from_int(p) * zpow;
    zpow = zpow * zeta;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// LiePresentation

bool LiePresentation::OpKey::operator<(const OpKey& o) const {
  if (family_exps != o.family_exps) return family_exps < o.family_exps;
  if (zeta_level != o.zeta_level) return zeta_level < o.zeta_level;
  for (size_t i = 0; i < zeta_coeffs.size(); ++i) {
    int c = cmp(zeta_coeffs[i], o.zeta_coeffs[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

LiePresentation::OpKey LiePresentation::key_of(const ZetaFamily& fam) {
  OpKey key;
  for (const auto& g : fam.members) key.family_exps.push_back(g.exponents());
  CycScalar m = fam.zeta.minimized();
  key.zeta_level = m.level();
  key.zeta_coeffs = m.coeffs();
  return key;
}

LiePresentation::LiePresentation(Bicharacter chi, TablePtr table)
    : chi_(std::move(chi)), table_(std::move(table)) {
  if (!same_group(*chi_.group(), *table_->group()))
    throw Error("bicharacter and basis table use different groups");
}

std::vector<int> LiePresentation::component(const GroupElement& g) const {
  std::vector<int> out;
  for (size_t i = 0; i < table_->size(); ++i)
    if (table_->degree(i) == g) out.push_back((int)i);
  return out;
}

std::vector<GroupElement> LiePresentation::support() const {
  std::vector<GroupElement> out;
  for (size_t i = 0; i < table_->size(); ++i) {
    const auto& d = table_->degree(i);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void LiePresentation::declare_bracket(const ZetaFamily& fam) {
  size_t n = fam.members.size();
  if (n < 2) throw Error("brackets are declared for arity >= 2 only");
  if (!is_primitive_nth_root(fam.zeta, (long)n))
    throw NotPrimitiveRoot("bracket zeta must be a primitive " + std::to_string(n) +
                           "-th root of unity");
  if (!is_zeta_family(chi_, fam.zeta, fam.members))
    throw NotAZetaFamily("declared tuple fails the zeta-family condition");
  ops_.emplace(key_of(fam), Op{fam, {}, false});
}

void LiePresentation::set_entry(const ZetaFamily& fam, const std::vector<int>& args,
                                GradedPoly value) {
  if (!op_declared(fam)) declare_bracket(fam);
  auto& op = ops_.at(key_of(fam));
  if (args.size() != fam.members.size())
    throw LengthMismatch("argument tuple length differs from family length");
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] < 0 || args[i] >= (int)table_->size())
      throw Error("argument index out of range");
    if (!(table_->degree(args[i]) == fam.members[i]))
      throw DegreeMismatch("argument " + std::to_string(i + 1) +
                           " does not lie in the family component");
  }
  if (!same_table(*value.table(), *table_)) throw TableMismatch();
  GroupElement target = fam.degree_sum();
  for (const auto& [w, c] : value.terms()) {
    if (w.size() != 1)
      throw Error("bracket values must be linear in the basis generators");
    if (!(table_->degree(w[0]) == target))
      throw DegreeMismatch("bracket value is not homogeneous of the sum degree");
  }
  op.entries.insert_or_assign(args, std::move(value));
}

void LiePresentation::symmetrize() {
  // One pass over a snapshot covers every orbit: each declared entry is
  // pushed through all of S_n directly.
  std::vector<std::pair<ZetaFamily, std::map<std::vector<int>, GradedPoly>>> snapshot;
  for (const auto& [key, op] : ops_) snapshot.emplace_back(op.fam, op.entries);

  for (const auto& [fam, entries] : snapshot) {
    int n = (int)fam.members.size();
    for (const auto& sigma : Permutation::all(n)) {
      ZetaFamily target_fam = fam.permuted(sigma);
      auto key = key_of(target_fam);
      auto it = ops_.find(key);
      if (it == ops_.end())
        it = ops_.emplace(key, Op{target_fam, {}, true}).first;
      CycScalar inv = rho(chi_, sigma, fam).inverse();
      for (const auto& [args, value] : entries) {
        std::vector<int> targs(args.size());
        for (int i = 0; i < n; ++i) targs[i] = args[sigma(i)];
        if (it->second.entries.count(targs)) continue;  // never overwrite
        it->second.entries.emplace(targs, inv * value);
      }
    }
  }
}

bool LiePresentation::op_declared(const ZetaFamily& fam) const {
  return ops_.count(key_of(fam)) > 0;
}

GradedPoly LiePresentation::bracket_value(const ZetaFamily& fam,
                                          const std::vector<int>& args,
                                          bool strict) const {
  auto it = ops_.find(key_of(fam));
  if (it == ops_.end()) {
    if (strict)
      throw MissingBracket("no declared bracket for " + render_family(fam));
    return GradedPoly(table_);
  }
  auto entry = it->second.entries.find(args);
  if (entry == it->second.entries.end()) return GradedPoly(table_);
  return entry->second;
}

GradedPoly LiePresentation::bracket_apply(const CycScalar& zeta,
                                          const std::vector<GradedPoly>& args,
                                          bool strict) const {
  for (const auto& a : args)
    if (a.is_zero()) return GradedPoly(table_);

  std::vector<GroupElement> degrees;
  for (const auto& a : args) {
    auto d = a.homogeneous_degree();
    if (!d) throw DegreeMismatch("bracket arguments must be homogeneous");
    degrees.push_back(*d);
  }
  if (!is_zeta_family(chi_, zeta, degrees))
    throw NotAZetaFamily("argument degrees do not form a zeta-family");
  ZetaFamily fam{zeta, degrees};

  // Multilinear expansion over the generator terms of each argument.
  GradedPoly acc(table_);
  std::vector<int> tuple(args.size());
  std::function<void(size_t, CycScalar)> expand = [&](size_t pos, CycScalar coeff) {
    if (pos == args.size()) {
      acc = acc + coeff * bracket_value(fam, tuple, strict);
      return;
    }
    for (const auto& [w, c] : args[pos].terms()) {
      if (w.size() != 1) throw Error("bracket arguments must be linear in generators");
      tuple[pos] = (int)w[0];
      expand(pos + 1, coeff * c);
    }
  };
  expand(0, CycScalar::one());
  return acc;
}

// ---------------------------------------------------------------------------
// lie_validate

namespace {

// All tuples from the given degree pool forming a zeta-family, lexicographic.
void family_tuples(const Bicharacter& chi, const std::vector<GroupElement>& pool,
                   const CycScalar& z2, int n, std::vector<GroupElement>& partial,
                   std::vector<std::vector<GroupElement>>& out) {
  if ((int)partial.size() == n) {
    out.push_back(partial);
    return;
  }
  for (const auto& g : pool) {
    bool ok = true;
    for (const auto& h : partial)
      if (chi(h, g) * chi(g, h) != z2) {
        ok = false;
        break;
      }
    if (!ok) continue;
    partial.push_back(g);
    family_tuples(chi, pool, z2, n, partial, out);
    partial.pop_back();
  }
}

// Iterate all generator-index tuples with prescribed component pools.
bool next_tuple(std::vector<size_t>& idx, const std::vector<std::vector<int>>& pools) {
  for (size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < pools[i].size()) return true;
    idx[i] = 0;
  }
  return false;
}

std::string args_name(const TablePtr& table, const std::vector<int>& args) {
  std::string s = "[";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += table->name(args[i]);
  }
  return s + "]";
}

}  // namespace

CheckReport lie_validate(const LiePresentation& pres, bool strict) {
  CheckReport report;
  report.title = "lie-validate";
  const auto& chi = pres.chi();
  const auto& table = pres.table();

  // (1) Symmetry on every op, every basis tuple, every sigma.
  for (const auto& [key, op] : pres.ops()) {
    int n = (int)op.fam.members.size();
    std::vector<std::vector<int>> pools;
    bool empty = false;
    for (const auto& g : op.fam.members) {
      pools.push_back(pres.component(g));
      if (pools.back().empty()) empty = true;
    }
    if (empty) continue;

    size_t violations = 0;
    std::string first;
    std::vector<size_t> idx(n, 0);
    do {
      std::vector<int> args(n);
      for (int i = 0; i < n; ++i) args[i] = pools[i][idx[i]];
      GradedPoly lhs = pres.bracket_value(op.fam, args, strict);
      for (const auto& sigma : Permutation::all(n)) {
        std::vector<int> pargs(n);
        for (int i = 0; i < n; ++i) pargs[i] = args[sigma(i)];
        GradedPoly rhs = rho(chi, sigma, op.fam) *
                         pres.bracket_value(op.fam.permuted(sigma), pargs, strict);
        if (lhs != rhs) {
          ++violations;
          if (first.empty())
            first = args_name(table, args) + " sigma=" + render_permutation(sigma) +
                    " difference " + render_poly(lhs - rhs);
        }
      }
    } while (next_tuple(idx, pools));
    report.add("CHECK identity-1 op " + render_family(op.fam), violations == 0,
               violations == 0 ? "" : std::to_string(violations) + " violations, first: " + first);
  }

  // Distinct (n, zeta) pairs among the declared ops.
  std::vector<std::pair<int, CycScalar>> arities;
  for (const auto& [key, op] : pres.ops()) {
    int n = (int)op.fam.members.size();
    bool seen = false;
    for (auto& [m, z] : arities)
      if (m == n && z == op.fam.zeta) seen = true;
    if (!seen) arities.emplace_back(n, op.fam.zeta);
  }

  auto support = pres.support();

  // (2) First Jacobi: zeta-families of length n+1 over the support.
  for (const auto& [n, zeta] : arities) {
    std::vector<std::vector<GroupElement>> tuples;
    std::vector<GroupElement> partial;
    family_tuples(chi, support, zeta * zeta, n + 1, partial, tuples);
    for (const auto& members : tuples) {
      ZetaFamily big{zeta, members};
      std::vector<std::vector<int>> pools;
      bool empty = false;
      for (const auto& g : members) {
        pools.push_back(pres.component(g));
        if (pools.back().empty()) empty = true;
      }
      if (empty) continue;

      size_t violations = 0;
      std::string first;
      std::vector<size_t> idx(n + 1, 0);
      do {
        std::vector<int> args(n + 1);
        for (int i = 0; i <= n; ++i) args[i] = pools[i][idx[i]];
        GradedPoly total(table);
        for (int i = 1; i <= n + 1; ++i) {
          std::vector<int> images{i};
          for (int k = 2; k <= i; ++k) images.push_back(k - 1);
          for (int k = i + 1; k <= n + 1; ++k) images.push_back(k);
          CycScalar coeff = rho(chi, Permutation::from_one_line(images), big);

          std::vector<GroupElement> rest;
          std::vector<int> rest_args;
          for (int j = 0; j <= n; ++j) {
            if (j == i - 1) continue;
            rest.push_back(members[j]);
            rest_args.push_back(args[j]);
          }
          GradedPoly inner =
              pres.bracket_value(ZetaFamily{zeta, rest}, rest_args, strict);
          GradedPoly outer = pres.bracket_apply(
              CycScalar::from_int(-1),
              {GradedPoly::generator(table, args[i - 1]), inner}, strict);
          total = total + coeff * outer;
        }
        if (!total.is_zero()) {
          ++violations;
          if (first.empty())
            first = args_name(table, args) + " sum " + render_poly(total);
        }
      } while (next_tuple(idx, pools));
      report.add("CHECK identity-2 " + render_family(big), violations == 0,
                 violations == 0 ? "" : std::to_string(violations) +
                                            " violations, first: " + first);
    }
  }

  // (3) Second Jacobi per declared op and compatible h.
  for (const auto& [key, op] : pres.ops()) {
    int n = (int)op.fam.members.size();
    std::vector<std::vector<int>> pools;
    bool empty = false;
    for (const auto& g : op.fam.members) {
      pools.push_back(pres.component(g));
      if (pools.back().empty()) empty = true;
    }
    if (empty) continue;

    for (const auto& h : support) {
      bool pairs_ok = true;
      for (const auto& g : op.fam.members)
        if (!is_zeta_family(chi, CycScalar::from_int(-1), {h, g})) pairs_ok = false;
      if (!pairs_ok) continue;
      auto hpool = pres.component(h);
      if (hpool.empty()) continue;

      size_t violations = 0;
      std::string first;
      for (int xi : hpool) {
        GradedPoly x = GradedPoly::generator(table, xi);
        std::vector<size_t> idx(n, 0);
        do {
          std::vector<int> args(n);
          for (int i = 0; i < n; ++i) args[i] = pools[i][idx[i]];
          GradedPoly inner = pres.bracket_value(op.fam, args, strict);
          GradedPoly lhs =
              pres.bracket_apply(CycScalar::from_int(-1), {x, inner}, strict);

          GradedPoly rhs(table);
          for (int i = 0; i < n; ++i) {
            CycScalar prefix = CycScalar::one();
            for (int j = 0; j < i; ++j) prefix *= chi(h, op.fam.members[j]);
            GradedPoly xy = pres.bracket_value(
                ZetaFamily{CycScalar::from_int(-1), {h, op.fam.members[i]}},
                {xi, args[i]}, strict);
            std::vector<GradedPoly> outer_args;
            for (int j = 0; j < n; ++j)
              outer_args.push_back(j == i ? xy
                                          : GradedPoly::generator(table, args[j]));
            rhs = rhs + prefix * pres.bracket_apply(op.fam.zeta, outer_args, strict);
          }
          if (lhs != rhs) {
            ++violations;
            if (first.empty())
              first = "x=" + table->name(xi) + " " + args_name(table, args) +
                      " difference " + render_poly(lhs - rhs);
          }
        } while (next_tuple(idx, pools));
      }
      report.add("CHECK identity-3 " + render_family(op.fam) +
                     " h=" + render_group_element(h),
                 violations == 0,
                 violations == 0 ? "" : std::to_string(violations) +
                                            " violations, first: " + first);
    }
  }

  return report;
}

}  // namespace braidlie
