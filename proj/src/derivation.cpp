#include "braidlie/derivation.hpp"

#include <map>

#include "braidlie/errors.hpp"
#include "braidlie/linalg.hpp"

namespace braidlie {

namespace {

std::map<Word, size_t, WordOrder> basis_index(const std::vector<Word>& basis) {
  std::map<Word, size_t, WordOrder> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

GroupElement word_degree(const PresentedAlgebra& alg, const Word& w) {
  GroupElement acc = alg.table()->group()->zero();
  for (auto i : w) acc = acc + alg.table()->degree(i);
  return acc;
}

}  // namespace

std::vector<GradedDerivation> derivations_solve(const PresentedAlgebra& alg,
                                                const Bicharacter& chi,
                                                const GroupElement& g) {
  auto basis = alg.full_basis();  // throws InfiniteDimensional
  auto idx = basis_index(basis);
  size_t dim = basis.size();

  // Unknowns u_{k,m}: coefficient of basis word m in d(basis word k),
  // restricted to deg(m) = deg(k) + g.
  std::vector<GroupElement> degs;
  degs.reserve(dim);
  for (const auto& w : basis) degs.push_back(word_degree(alg, w));

  std::vector<std::pair<size_t, size_t>> unknowns;
  std::vector<std::vector<long>> unknown_at(dim, std::vector<long>(dim, -1));
  for (size_t k = 0; k < dim; ++k)
    for (size_t m = 0; m < dim; ++m)
      if (degs[m] == degs[k] + g) {
        unknown_at[k][m] = (long)unknowns.size();
        unknowns.emplace_back(k, m);
      }

  // d expressed on a normal-form polynomial, as a row of unknown
  // coefficients per target basis word.
  struct Row {
    std::map<std::pair<size_t, long>, CycScalar> coeff;  // (target, unknown) -> c
    void add(size_t target, long unknown, const CycScalar& c) {
      if (unknown < 0 || c.is_zero()) return;
      auto key = std::make_pair(target, unknown);
      auto it = coeff.find(key);
      if (it == coeff.end())
        coeff.emplace(key, c);
      else {
        it->second += c;
        if (it->second.is_zero()) coeff.erase(it);
      }
    }
  };

  auto d_of_poly = [&](const GradedPoly& p, const CycScalar& scale, int side_word,
                       bool right, Row& row) {
    // d(p) multiplied by the fixed basis word on one side:
    //   right=false: d(p) * w_side;  right=true: w_side * d(p)
    for (const auto& [w, c] : p.terms()) {
      size_t k = idx.at(w);
      for (size_t m = 0; m < dim; ++m) {
        long u = unknown_at[k][m];
        if (u < 0) continue;
        GradedPoly prod =
            right ? alg.mul_nf(GradedPoly::from_word(alg.table(), basis[side_word]),
                               GradedPoly::from_word(alg.table(), basis[m]))
                  : alg.mul_nf(GradedPoly::from_word(alg.table(), basis[m]),
                               GradedPoly::from_word(alg.table(), basis[side_word]));
        for (const auto& [tw, tc] : prod.terms()) row.add(idx.at(tw), u, scale * c * tc);
      }
    }
  };

  // Equations over all basis pairs: d(NF(ab)) - d(a) b - chi(g, deg a) a d(b) = 0.
  std::vector<Row> rows;
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b) {
      Row row;
      GradedPoly ab = alg.mul_nf(GradedPoly::from_word(alg.table(), basis[a]),
                                 GradedPoly::from_word(alg.table(), basis[b]));
      for (const auto& [w, c] : ab.terms()) {
        size_t k = idx.at(w);
        for (size_t m = 0; m < dim; ++m)
          row.add(m, unknown_at[k][m], c);
      }
      // -d(a) * w_b
      GradedPoly pa = GradedPoly::from_word(alg.table(), basis[a]);
      d_of_poly(pa, CycScalar::from_int(-1), (int)b, false, row);
      // -chi(g, deg a) * w_a * d(b)
      GradedPoly pb = GradedPoly::from_word(alg.table(), basis[b]);
      d_of_poly(pb, -chi(g, degs[a]), (int)a, true, row);
      if (!row.coeff.empty()) rows.push_back(std::move(row));
    }

  // Assemble and take the kernel.
  Matrix mat(rows.size() * dim, unknowns.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [key, c] : rows[r].coeff)
      mat.at(r * dim + key.first, (size_t)key.second) = c;
  auto kernel = kernel_basis(std::move(mat));

  std::vector<GradedDerivation> out;
  for (const auto& vec : kernel) {
    GradedDerivation d{g, std::vector<GradedPoly>(dim, GradedPoly(alg.table()))};
    for (size_t u = 0; u < unknowns.size(); ++u)
      if (!vec[u].is_zero())
        d.images[unknowns[u].first].add_term(basis[unknowns[u].second], vec[u]);
    out.push_back(std::move(d));
  }
  return out;
}

GradedPoly apply_derivation(const PresentedAlgebra& alg, const GradedDerivation& d,
                            const GradedPoly& p) {
  auto basis = alg.full_basis();
  auto idx = basis_index(basis);
  GradedPoly out(alg.table());
  GradedPoly nf = alg.normal_form(p);
  for (const auto& [w, c] : nf.terms()) {
    auto it = idx.find(w);
    if (it == idx.end()) throw Error("apply_derivation: word outside the basis");
    out = out + c * d.images[it->second];
  }
  return out;
}

GradedDerivation derivation_bracket(const PresentedAlgebra& alg, const Bicharacter& chi,
                                    const std::vector<GradedDerivation>& ds,
                                    const CycScalar& zeta) {
  if (ds.empty()) throw Error("derivation bracket needs at least one argument");
  std::vector<GroupElement> degrees;
  for (const auto& d : ds) degrees.push_back(d.degree);
  if (!is_zeta_family(chi, zeta, degrees))
    throw NotAZetaFamily("derivation degrees do not form a zeta-family");
  ZetaFamily fam{zeta, degrees};

  auto basis = alg.full_basis();
  size_t dim = basis.size();
  GroupElement total = fam.degree_sum();
  GradedDerivation out{total, std::vector<GradedPoly>(dim, GradedPoly(alg.table()))};

  int n = (int)ds.size();
  for (const auto& sigma : Permutation::all(n)) {
    CycScalar coeff = rho(chi, sigma, fam);
    if (coeff.is_zero()) continue;
    for (size_t k = 0; k < dim; ++k) {
      // Composition d_sigma(1) o ... o d_sigma(n), applied to basis word k.
      GradedPoly v = GradedPoly::from_word(alg.table(), basis[k]);
      for (int i = n - 1; i >= 0; --i) v = apply_derivation(alg, ds[sigma(i)], v);
      out.images[k] = out.images[k] + coeff * v;
    }
  }
  return out;
}

std::vector<CycScalar> derivation_coordinates(const PresentedAlgebra& alg,
                                              const GradedDerivation& d) {
  auto basis = alg.full_basis();
  auto idx = basis_index(basis);
  size_t dim = basis.size();
  std::vector<CycScalar> v(dim * dim, CycScalar::zero());
  for (size_t k = 0; k < dim; ++k)
    for (const auto& [w, c] : d.images[k].terms()) v[k * dim + idx.at(w)] = c;
  return v;
}

}  // namespace braidlie
