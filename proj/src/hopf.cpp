#include "braidlie/hopf.hpp"

#include <array>
#include <map>

#include "braidlie/errors.hpp"
#include "braidlie/linalg.hpp"
#include "braidlie/text.hpp"

namespace braidlie {

namespace {

GroupElement word_degree(const TablePtr& table, const Word& w) {
  GroupElement acc = table->group()->zero();
  for (auto i : w) acc = acc + table->degree(i);
  return acc;
}

TensorPoly nf_legs(const PresentedAlgebra& alg, const TensorPoly& t) {
  TensorPoly out(t.table());
  for (const auto& [k, c] : t.terms()) {
    GradedPoly u = alg.normal_form(GradedPoly::from_word(t.table(), k.first));
    GradedPoly v = alg.normal_form(GradedPoly::from_word(t.table(), k.second));
    out = out + c * TensorPoly::of(u, v);
  }
  return out;
}

}  // namespace

HopfInstance enveloping_build(const LiePresentation& pres, int degree_bound,
                              bool validate) {
  if (validate) {
    auto report = lie_validate(pres);
    if (!report.passed())
      throw LieValidationFailure("lie_validate failed:\n" + render_report(report));
  }

  const auto& table = pres.table();
  std::vector<GradedPoly> relations;
  for (const auto& [key, op] : pres.ops()) {
    int n = (int)op.fam.members.size();
    std::vector<std::vector<int>> pools;
    bool empty = false;
    for (const auto& g : op.fam.members) {
      pools.push_back(pres.component(g));
      if (pools.back().empty()) empty = true;
    }
    if (empty) continue;

    std::vector<size_t> idx(n, 0);
    bool more = true;
    while (more) {
      std::vector<int> args(n);
      for (int i = 0; i < n; ++i) args[i] = pools[i][idx[i]];

      // sum_sigma rho(sigma, fam) x_{sigma(1)} ... x_{sigma(n)} - [args]
      GradedPoly rel(table);
      CycScalar zinv = op.fam.zeta.inverse();
      for (const auto& sigma : Permutation::all(n)) {
        Word w(n);
        for (int i = 0; i < n; ++i) w[i] = (uint32_t)args[sigma(i)];
        rel.add_term(w, rho(pres.chi(), sigma, op.fam, zinv));
      }
      rel = rel - pres.bracket_value(op.fam, args);
      if (!rel.is_zero()) relations.push_back(std::move(rel));

      more = false;
      for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < pools[i].size()) {
          more = true;
          break;
        }
        idx[i] = 0;
      }
    }
  }

  HopfInstance H{quotient_present(table, relations, degree_bound), pres.chi(), {}, {}, {}};
  for (size_t i = 0; i < table->size(); ++i) {
    GradedPoly x = H.carrier.normal_form(GradedPoly::generator(table, i));
    H.coproduct.push_back(TensorPoly::left(x) + TensorPoly::right(x));
    H.counit.push_back(CycScalar::zero());
    H.antipode.push_back(-x);
  }
  return H;
}

TensorPoly comultiply(const HopfInstance& H, const GradedPoly& p) {
  const auto& table = H.carrier.table();
  TensorPoly out(table);
  GradedPoly nf = H.carrier.normal_form(p);
  for (const auto& [w, c] : nf.terms()) {
    TensorPoly acc = c * TensorPoly::unit(table);
    for (auto i : w) {
      acc = tensor_mul(acc, H.coproduct[i], H.chi);
      acc = nf_legs(H.carrier, acc);
    }
    out = out + acc;
  }
  return out;
}

GradedPoly antipode(const HopfInstance& H, const GradedPoly& p) {
  const auto& table = H.carrier.table();
  GradedPoly out(table);
  GradedPoly nf = H.carrier.normal_form(p);
  for (const auto& [w, c] : nf.terms()) {
    // S(x_{i1} ... x_{ik}) built right-to-left:
    // S(a w') = chi(deg a, deg w') S(w') S(a).
    GradedPoly acc = GradedPoly::unit(table);
    GroupElement tail = table->group()->zero();  // degree of the processed suffix
    for (size_t pos = w.size(); pos-- > 0;) {
      const GroupElement& da = table->degree(w[pos]);
      acc = H.chi(da, tail) * H.carrier.mul_nf(acc, H.antipode[w[pos]]);
      tail = tail + da;
    }
    out = out + c * acc;
  }
  return H.carrier.normal_form(out);
}

CycScalar counit(const HopfInstance& H, const GradedPoly& p) {
  CycScalar out = CycScalar::zero();
  GradedPoly nf = H.carrier.normal_form(p);
  for (const auto& [w, c] : nf.terms()) {
    CycScalar prod = c;
    for (auto i : w) prod = prod * H.counit[i];
    out += prod;
  }
  return out;
}

namespace {

// Triple tensor terms for the coassociativity check.
using TripleKey = std::array<Word, 3>;
using TripleMap = std::map<TripleKey, CycScalar>;

void triple_add(TripleMap& m, TripleKey k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end())
    m.emplace(std::move(k), c);
  else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

HopfAxiomsResult hopf_axioms_check(const HopfInstance& H, int truncate_len) {
  HopfAxiomsResult result;
  CheckReport& report = result.report;
  report.title = "hopf-axioms";
  const auto& alg = H.carrier;
  const auto& table = alg.table();

  std::vector<Word> basis;
  bool truncated = false;
  if (alg.finite_dimensional()) {
    basis = alg.full_basis();
  } else {
    if (truncate_len < 0) throw InfiniteDimensional();
    basis = alg.basis(truncate_len);
    truncated = true;
    report.caveat("truncated: basis limited to word length <= " +
                  std::to_string(truncate_len) +
                  ", pair checks to total length <= " +
                  std::to_string(alg.degree_bound()));
  }

  // Delta on every irreducible word up to the bound, each extended from its
  // prefix with a single braided product. Every normal form that shows up
  // below stays inside this set.
  std::map<Word, TensorPoly, WordOrder> delta_cache;
  {
    auto all_words = alg.finite_dimensional() ? alg.full_basis()
                                              : alg.basis(alg.degree_bound());
    for (const auto& w : all_words) {
      if (w.empty()) {
        delta_cache.emplace(w, TensorPoly::unit(table));
        continue;
      }
      Word prefix(w.begin(), w.end() - 1);
      const TensorPoly& dp = delta_cache.at(prefix);
      delta_cache.emplace(
          w, nf_legs(alg, tensor_mul(dp, H.coproduct[w.back()], H.chi)));
    }
  }
  auto delta_of = [&](const GradedPoly& p) {
    TensorPoly out(table);
    for (const auto& [w, c] : p.terms()) out = out + c * delta_cache.at(w);
    return out;
  };

  // Antipode cache over the same word set: S(w a) = chi(deg w, deg a) S(a) S(w).
  std::map<Word, GradedPoly, WordOrder> antipode_cache;
  for (const auto& [w, d] : delta_cache) {
    if (w.empty()) {
      antipode_cache.emplace(w, GradedPoly::unit(table));
      continue;
    }
    Word prefix(w.begin(), w.end() - 1);
    const GradedPoly& sp = antipode_cache.at(prefix);
    antipode_cache.emplace(
        w, H.chi(word_degree(table, prefix), table->degree(w.back())) *
               alg.mul_nf(H.antipode[w.back()], sp));
  }
  auto antipode_of = [&](const Word& w) -> const GradedPoly& {
    return antipode_cache.at(w);
  };

  std::vector<GradedPoly> basis_polys;
  std::vector<TensorPoly> deltas;
  for (const auto& w : basis) {
    basis_polys.push_back(GradedPoly::from_word(table, w));
    deltas.push_back(delta_cache.at(w));
  }

  // Coassociativity.
  {
    bool ok = true;
    std::string witness;
    for (size_t b = 0; b < basis.size() && ok; ++b) {
      TripleMap lhs, rhs;
      for (const auto& [k, c] : deltas[b].terms()) {
        for (const auto& [kk, cc] : delta_cache.at(k.first).terms())
          triple_add(lhs, {kk.first, kk.second, k.second}, c * cc);
        for (const auto& [kk, cc] : delta_cache.at(k.second).terms())
          triple_add(rhs, {k.first, kk.first, kk.second}, c * cc);
      }
      if (lhs != rhs) {
        ok = false;
        witness = "element " + render_word(*table, basis[b]);
      }
    }
    report.add("AXIOM coassociativity", ok, witness);
  }

  // Counit: (eps (x) 1) Delta = id = (1 (x) eps) Delta.
  {
    bool ok = true;
    std::string witness;
    for (size_t b = 0; b < basis.size() && ok; ++b) {
      GradedPoly left(table), right(table);
      for (const auto& [k, c] : deltas[b].terms()) {
        left = left + (c * counit(H, GradedPoly::from_word(table, k.first))) *
                          GradedPoly::from_word(table, k.second);
        right = right + (c * counit(H, GradedPoly::from_word(table, k.second))) *
                            GradedPoly::from_word(table, k.first);
      }
      if (left != basis_polys[b] || right != basis_polys[b]) {
        ok = false;
        witness = "element " + render_word(*table, basis[b]);
      }
    }
    report.add("AXIOM counit", ok, witness);
  }

  // Antipode, both sides: nabla(S (x) 1)Delta = eta eps = nabla(1 (x) S)Delta.
  for (int side = 0; side < 2; ++side) {
    bool ok = true;
    std::string witness;
    for (size_t b = 0; b < basis.size() && ok; ++b) {
      GradedPoly acc(table);
      for (const auto& [k, c] : deltas[b].terms()) {
        GradedPoly u = GradedPoly::from_word(table, k.first);
        GradedPoly v = GradedPoly::from_word(table, k.second);
        GradedPoly prod = side == 0 ? alg.mul_nf(antipode_of(k.first), v)
                                    : alg.mul_nf(u, antipode_of(k.second));
        acc = acc + c * prod;
      }
      GradedPoly expected =
          counit(H, basis_polys[b]) * GradedPoly::unit(table);
      if (acc != expected) {
        ok = false;
        witness = "element " + render_word(*table, basis[b]) + " gave " +
                  render_poly(acc);
      }
    }
    report.add(side == 0 ? "AXIOM antipode-left" : "AXIOM antipode-right", ok,
               witness);
  }

  // Delta is an algebra morphism into the braided tensor square.
  {
    bool ok = true;
    std::string witness;
    size_t checked = 0;
    for (size_t a = 0; a < basis.size() && ok; ++a)
      for (size_t b = 0; b < basis.size() && ok; ++b) {
        if ((int)(basis[a].size() + basis[b].size()) > alg.degree_bound()) continue;
        ++checked;
        TensorPoly lhs = delta_of(alg.mul_nf(basis_polys[a], basis_polys[b]));
        TensorPoly rhs = nf_legs(alg, tensor_mul(deltas[a], deltas[b], H.chi));
        if (lhs != rhs) {
          ok = false;
          witness = "pair (" + render_word(*table, basis[a]) + ", " +
                    render_word(*table, basis[b]) + ")";
        }
      }
    report.add("AXIOM delta-multiplicative", ok,
               ok ? "" : witness + " of " + std::to_string(checked));
  }

  // Flags (not axioms): commutativity and the two cocommutativity notions.
  {
    result.commutative = true;
    for (size_t a = 0; a < basis.size() && result.commutative; ++a)
      for (size_t b = a + 1; b < basis.size(); ++b) {
        if ((int)(basis[a].size() + basis[b].size()) > alg.degree_bound()) continue;
        if (alg.mul_nf(basis_polys[a], basis_polys[b]) !=
            alg.mul_nf(basis_polys[b], basis_polys[a])) {
          result.commutative = false;
          break;
        }
      }

    result.cocommutative_braided = true;
    result.cocommutative_flip = true;
    for (size_t b = 0; b < basis.size(); ++b) {
      TensorPoly twisted(table), flipped(table);
      for (const auto& [k, c] : deltas[b].terms()) {
        twisted.add_term({k.second, k.first},
                         c * H.chi(word_degree(table, k.first),
                                   word_degree(table, k.second)));
        flipped.add_term({k.second, k.first}, c);
      }
      if (twisted != deltas[b]) result.cocommutative_braided = false;
      if (flipped != deltas[b]) result.cocommutative_flip = false;
    }
  }
  if (truncated) report.caveat("verified on the truncated basis only");
  return result;
}

PrimitiveSpace primitives_solve(const HopfInstance& H) {
  const auto& alg = H.carrier;
  const auto& table = alg.table();
  PrimitiveSpace out;
  out.basis = alg.full_basis();  // throws InfiniteDimensional

  // Group basis indices by degree.
  std::map<std::vector<long>, std::vector<size_t>> by_degree;
  for (size_t i = 0; i < out.basis.size(); ++i)
    by_degree[word_degree(table, out.basis[i]).exponents()].push_back(i);

  std::vector<TensorPoly> deltas;
  for (const auto& w : out.basis)
    deltas.push_back(comultiply(H, GradedPoly::from_word(table, w)));

  for (const auto& [deg_exps, indices] : by_degree) {
    // Kernel of v -> Delta(v) - v (x) 1 - 1 (x) v on this component.
    std::map<TensorPoly::Key, size_t, TensorPoly::KeyOrder> row_of;
    std::vector<TensorPoly> defects;
    for (size_t col = 0; col < indices.size(); ++col) {
      const Word& w = out.basis[indices[col]];
      GradedPoly v = GradedPoly::from_word(table, w);
      TensorPoly defect = deltas[indices[col]] - TensorPoly::left(v) - TensorPoly::right(v);
      for (const auto& [k, c] : defect.terms())
        row_of.emplace(k, row_of.size());
      defects.push_back(std::move(defect));
    }
    Matrix mat(row_of.size(), indices.size());
    for (size_t col = 0; col < indices.size(); ++col)
      for (const auto& [k, c] : defects[col].terms())
        mat.at(row_of.at(k), col) = c;
    auto kernel = kernel_basis(std::move(mat));
    if (kernel.empty()) continue;

    std::vector<GradedPoly> vecs;
    for (const auto& coeffs : kernel) {
      GradedPoly v(table);
      for (size_t col = 0; col < indices.size(); ++col)
        if (!coeffs[col].is_zero()) v.add_term(out.basis[indices[col]], coeffs[col]);
      vecs.push_back(std::move(v));
    }
    out.components.emplace_back(table->group()->element(deg_exps), std::move(vecs));
  }
  return out;
}

namespace {

// Solve nabla(S (x) 1)Delta = eta eps for S as a linear map on the basis.
std::vector<GradedPoly> solve_antipode(const PresentedAlgebra& alg,
                                       const std::vector<Word>& basis,
                                       const std::vector<TensorPoly>& deltas,
                                       const std::vector<CycScalar>& eps_values) {
  const auto& table = alg.table();
  size_t dim = basis.size();
  std::map<Word, size_t, WordOrder> index;
  for (size_t i = 0; i < dim; ++i) index.emplace(basis[i], i);

  // Unknown s_{u,m}: coefficient of basis[m] in S(basis[u]).
  Matrix mat(dim * dim, dim * dim);
  std::vector<CycScalar> rhs(dim * dim, CycScalar::zero());
  for (size_t b = 0; b < dim; ++b) {
    for (const auto& [k, c] : deltas[b].terms()) {
      size_t u = index.at(k.first);
      for (size_t m = 0; m < dim; ++m) {
        GradedPoly prod = alg.mul_nf(GradedPoly::from_word(table, basis[m]),
                                     GradedPoly::from_word(table, k.second));
        for (const auto& [tw, tc] : prod.terms()) {
          size_t row = b * dim + index.at(tw);
          mat.at(row, u * dim + m) = mat.at(row, u * dim + m) + c * tc;
        }
      }
    }
    rhs[b * dim + index.at(Word{})] = eps_values[b];
  }

  bool unique = false;
  auto sol = linear_solve(mat, rhs, &unique);
  if (!sol || !unique) throw AntipodeNotFound();

  std::vector<GradedPoly> images;
  for (size_t u = 0; u < dim; ++u) {
    GradedPoly img(table);
    for (size_t m = 0; m < dim; ++m)
      if (!(*sol)[u * dim + m].is_zero()) img.add_term(basis[m], (*sol)[u * dim + m]);
    images.push_back(std::move(img));
  }
  return images;
}

std::string group_gen_name(size_t count, size_t i) {
  return count == 1 ? "t" : "t" + std::to_string(i + 1);
}

Word group_element_word(const std::vector<uint32_t>& tgens, const GroupElement& g) {
  Word w;
  for (size_t i = 0; i < tgens.size(); ++i)
    for (long k = 0; k < g.exponents()[i]; ++k) w.push_back(tgens[i]);
  return w;
}

}  // namespace

BiproductInstance biproduct_build(const HopfInstance& H) {
  const auto& group = H.chi.group();
  if (!group->is_finite()) throw InfiniteGroup();
  const auto& htable = H.carrier.table();
  auto hbasis = H.carrier.full_basis();  // throws InfiniteDimensional

  // Flattened table: H's generators followed by t_i of degree 0.
  size_t s = group->torsion().size();
  std::vector<std::string> names;
  std::vector<GroupElement> degrees;
  for (size_t i = 0; i < htable->size(); ++i) {
    names.push_back(htable->name(i));
    degrees.push_back(htable->degree(i));
  }
  std::vector<uint32_t> tgens;
  for (size_t i = 0; i < s; ++i) {
    std::string name = group_gen_name(s, i);
    if (htable->index_of(name) >= 0)
      throw ValidationError("biproduct", "generator name '" + name +
                                             "' collides with the group part");
    tgens.push_back((uint32_t)names.size());
    names.push_back(name);
    degrees.push_back(group->zero());
  }
  auto table = GeneratorTable::make(group, names, degrees);

  // Relations: H's rules, t_i^(m_i) = 1, t-commutations, and
  // t_i x = chi(e_i, deg x) x t_i.
  std::vector<GradedPoly> relations;
  for (const auto& [lhs, rhsPoly] : H.carrier.rules()) {
    GradedPoly moved(table);
    moved.add_term(lhs, CycScalar::one());
    for (const auto& [w, c] : rhsPoly.terms()) moved.add_term(w, -c);
    relations.push_back(std::move(moved));
  }
  for (size_t i = 0; i < s; ++i) {
    GradedPoly rel(table);
    rel.add_term(Word((size_t)group->torsion()[i], tgens[i]), CycScalar::one());
    rel.add_term(Word{}, CycScalar::from_int(-1));
    relations.push_back(std::move(rel));
    for (size_t j = i + 1; j < s; ++j) {
      GradedPoly comm(table);
      comm.add_term(Word{tgens[j], tgens[i]}, CycScalar::one());
      comm.add_term(Word{tgens[i], tgens[j]}, CycScalar::from_int(-1));
      relations.push_back(std::move(comm));
    }
    for (size_t x = 0; x < htable->size(); ++x) {
      GradedPoly rel2(table);
      rel2.add_term(Word{tgens[i], (uint32_t)x}, CycScalar::one());
      rel2.add_term(Word{(uint32_t)x, tgens[i]},
                    -H.chi(group->generator(i), htable->degree(x)));
      relations.push_back(std::move(rel2));
    }
  }

  long tlen = 0;
  for (long m : group->torsion()) tlen += m - 1;
  int bound = H.carrier.degree_bound() + (int)tlen + 2;
  BiproductInstance out{
      HopfInstance{quotient_present(table, relations, bound),
                   Bicharacter::trivial(group), {}, {}, {}},
      tgens, 0};
  auto& B = out.hopf;
  if (!B.carrier.finite_dimensional())
    throw Error("biproduct carrier failed to close into a finite basis");
  out.dimension = B.carrier.dimension();

  // Coproducts: group-likes for t_i; Delta(x) twists the left leg by the
  // t-word of the right leg's degree.
  for (size_t i = 0; i < htable->size(); ++i) {
    TensorPoly d(table);
    TensorPoly dh = comultiply(H, GradedPoly::generator(htable, i));
    for (const auto& [k, c] : dh.terms()) {
      Word left = k.first;
      Word tword = group_element_word(tgens, word_degree(htable, k.second));
      left.insert(left.end(), tword.begin(), tword.end());
      d.add_term({left, k.second}, c);
    }
    B.coproduct.push_back(nf_legs(B.carrier, d));
    B.counit.push_back(H.counit[i]);
  }
  for (size_t i = 0; i < s; ++i) {
    TensorPoly d(table);
    d.add_term({Word{tgens[i]}, Word{tgens[i]}}, CycScalar::one());
    B.coproduct.push_back(std::move(d));
    B.counit.push_back(CycScalar::one());
  }

  // Antipode: exact convolution solve on the full basis, then generator
  // images (generators are irreducible words of length one).
  auto basis = B.carrier.full_basis();
  std::vector<TensorPoly> deltas;
  std::vector<CycScalar> eps_values;
  {
    // Temporarily extend Delta/eps over words multiplicatively; the
    // antipode entries are not needed by comultiply/counit.
    B.antipode.assign(table->size(), GradedPoly(table));
    for (const auto& w : basis) {
      deltas.push_back(comultiply(B, GradedPoly::from_word(table, w)));
      eps_values.push_back(counit(B, GradedPoly::from_word(table, w)));
    }
  }
  auto images = solve_antipode(B.carrier, basis, deltas, eps_values);
  std::map<Word, size_t, WordOrder> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  B.antipode.clear();
  for (size_t i = 0; i < table->size(); ++i) {
    auto it = index.find(Word{(uint32_t)i});
    if (it == index.end())
      throw Error("biproduct generator is not a basis word");
    B.antipode.push_back(images[it->second]);
  }
  return out;
}

}  // namespace braidlie
