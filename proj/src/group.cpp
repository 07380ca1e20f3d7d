#include "braidlie/group.hpp"

#include <algorithm>

#include "braidlie/errors.hpp"

namespace braidlie {

namespace {

long mod_reduce(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupElement::GroupElement(GroupPtr group, std::vector<long> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
  if (exps_.size() != group_->generator_count())
    throw Error("group element arity mismatch");
  const auto& tor = group_->torsion();
  for (size_t i = 0; i < tor.size(); ++i) exps_[i] = mod_reduce(exps_[i], tor[i]);
}

bool GroupElement::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long e) { return e == 0; });
}

GroupElement GroupElement::operator-() const { return scaled(-1); }

GroupElement GroupElement::scaled(long k) const {
  std::vector<long> e(exps_);
  for (auto& v : e) v *= k;
  return GroupElement(group_, std::move(e));
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (!same_group(*a.group_, *b.group_)) throw Error("elements of different groups");
  std::vector<long> e(a.exps_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
  return GroupElement(a.group_, std::move(e));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  return a + (-b);
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return same_group(*a.group_, *b.group_) && a.exps_ == b.exps_;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  return a.exps_ < b.exps_;
}

GroupPtr AbelianGroup::make(std::vector<long> torsion_orders, long free_rank) {
  for (long m : torsion_orders)
    if (m < 2) throw Error("torsion orders must be >= 2");
  if (free_rank < 0) throw Error("free rank must be nonnegative");
  return GroupPtr(new AbelianGroup(std::move(torsion_orders), free_rank));
}

long AbelianGroup::order() const {
  if (!is_finite()) throw InfiniteGroup();
  long n = 1;
  for (long m : torsion_) n *= m;
  return n;
}

GroupElement AbelianGroup::zero() const {
  return GroupElement(shared_from_this(), std::vector<long>(generator_count(), 0));
}

GroupElement AbelianGroup::element(std::vector<long> exponents) const {
  return GroupElement(shared_from_this(), std::move(exponents));
}

GroupElement AbelianGroup::generator(size_t i) const {
  std::vector<long> e(generator_count(), 0);
  e.at(i) = 1;
  return GroupElement(shared_from_this(), std::move(e));
}

std::vector<GroupElement> AbelianGroup::elements() const {
  if (!is_finite()) throw InfiniteGroup();
  std::vector<GroupElement> out;
  out.reserve(order());
  std::vector<long> cur(torsion_.size(), 0);
  while (true) {
    out.push_back(element(cur));
    size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] < torsion_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

Bicharacter Bicharacter::make(GroupPtr group, long value_level,
                              std::vector<std::vector<long>> exponent_matrix) {
  if (value_level < 1) throw Error("bicharacter level must be positive");
  size_t n = group->generator_count();
  if (exponent_matrix.size() != n)
    throw Error("bicharacter matrix row count mismatch");
  for (auto& row : exponent_matrix) {
    if (row.size() != n) throw Error("bicharacter matrix column count mismatch");
    for (auto& e : row) e = mod_reduce(e, value_level);
  }
  // chi(m_i g_i, .) = 1 forces m_i E_ij = 0 = m_i E_ji (mod L).
  const auto& tor = group->torsion();
  for (size_t i = 0; i < tor.size(); ++i)
    for (size_t j = 0; j < n; ++j) {
      if ((tor[i] * exponent_matrix[i][j]) % value_level != 0)
        throw IllDefinedBicharacter(
            (int)i, (int)j,
            "bicharacter ill-defined: " + std::to_string(tor[i]) + " * E[" +
                std::to_string(i) + "][" + std::to_string(j) + "] != 0 mod " +
                std::to_string(value_level));
      if ((tor[i] * exponent_matrix[j][i]) % value_level != 0)
        throw IllDefinedBicharacter(
            (int)j, (int)i,
            "bicharacter ill-defined: " + std::to_string(tor[i]) + " * E[" +
                std::to_string(j) + "][" + std::to_string(i) + "] != 0 mod " +
                std::to_string(value_level));
    }
  return Bicharacter(std::move(group), value_level, std::move(exponent_matrix));
}

Bicharacter Bicharacter::trivial(GroupPtr group) {
  size_t n = group->generator_count();
  return Bicharacter(std::move(group), 1,
                     std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
}

long Bicharacter::exponent_of(const GroupElement& g, const GroupElement& h) const {
  if (!same_group(*g.group(), *group_) || !same_group(*h.group(), *group_))
    throw Error("bicharacter applied to foreign group elements");
  long acc = 0;
  for (size_t i = 0; i < expo_.size(); ++i) {
    if (g.exponents()[i] == 0) continue;
    for (size_t j = 0; j < expo_.size(); ++j) {
      if (h.exponents()[j] == 0) continue;
      acc = mod_reduce(
          acc + mod_reduce(g.exponents()[i] * expo_[i][j], level_) * h.exponents()[j],
          level_);
    }
  }
  return acc;
}

CycScalar Bicharacter::operator()(const GroupElement& g, const GroupElement& h) const {
  return root_of_unity(level_, exponent_of(g, h));
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  std::vector<int> img(images.size());
  std::vector<bool> seen(images.size(), false);
  for (size_t i = 0; i < images.size(); ++i) {
    int v = images[i] - 1;
    if (v < 0 || v >= (int)images.size() || seen[v])
      throw Error("invalid one-line permutation");
    seen[v] = true;
    img[i] = v;
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (size() != inner.size())
    throw LengthMismatch("composing permutations of different sizes");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[inner.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = (int)i;
  return Permutation(std::move(img));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

int Permutation::inversions() const {
  int count = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

GroupElement ZetaFamily::degree_sum() const {
  if (members.empty()) throw Error("empty family has no degree sum");
  GroupElement acc = members[0].group()->zero();
  for (const auto& g : members) acc = acc + g;
  return acc;
}

ZetaFamily ZetaFamily::permuted(const Permutation& sigma) const {
  if (sigma.size() != (int)members.size())
    throw LengthMismatch("permutation length does not match family length");
  std::vector<GroupElement> out;
  out.reserve(members.size());
  for (int i = 0; i < sigma.size(); ++i) out.push_back(members[sigma(i)]);
  return ZetaFamily{zeta, std::move(out)};
}

bool is_zeta_family(const Bicharacter& chi, const CycScalar& zeta,
                    const std::vector<GroupElement>& members) {
  if (zeta.is_zero()) throw Error("zeta must be nonzero");
  if (!multiplicative_order(zeta)) throw Error("zeta is not a root of unity");
  CycScalar z2 = zeta * zeta;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (chi(members[i], members[j]) * chi(members[j], members[i]) != z2)
        return false;
  return true;
}

CycScalar rho(const Bicharacter& chi, const Permutation& sigma, const ZetaFamily& fam,
              const CycScalar& zeta_inverse) {
  if (sigma.size() != (int)fam.members.size())
    throw LengthMismatch("rho: permutation and family lengths differ");
  // All chi factors are powers of one root; accumulate exponents and pay
  // for scalar arithmetic once.
  long chi_exp = 0;
  long inversions = 0;
  for (int i = 0; i < sigma.size(); ++i)
    for (int j = i + 1; j < sigma.size(); ++j)
      if (sigma(i) > sigma(j)) {
        ++inversions;
        chi_exp = (chi_exp +
                   chi.exponent_of(fam.members[sigma(j)], fam.members[sigma(i)])) %
                  chi.value_level();
      }
  if (inversions == 0) return CycScalar::one();
  CycScalar acc = root_of_unity(chi.value_level(), chi_exp);
  return acc * zeta_inverse.pow(inversions);
}

CycScalar rho(const Bicharacter& chi, const Permutation& sigma, const ZetaFamily& fam) {
  return rho(chi, sigma, fam, fam.zeta.inverse());
}

namespace {

void extend_family(const Bicharacter& chi, const std::vector<GroupElement>& pool,
                   const CycScalar& z2, int n, std::vector<GroupElement>& partial,
                   const CycScalar& zeta, std::vector<ZetaFamily>& out) {
  if ((int)partial.size() == n) {
    out.push_back(ZetaFamily{zeta, partial});
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
    extend_family(chi, pool, z2, n, partial, zeta, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<ZetaFamily> enumerate_zeta_families(const Bicharacter& chi, int n,
                                                const CycScalar& zeta) {
  if (!chi.group()->is_finite()) throw InfiniteGroup();
  if (n < 1) throw Error("family length must be >= 1");
  if (zeta.is_zero()) throw Error("zeta must be nonzero");
  if (!multiplicative_order(zeta)) throw Error("zeta is not a root of unity");
  auto pool = chi.group()->elements();
  std::vector<ZetaFamily> out;
  std::vector<GroupElement> partial;
  extend_family(chi, pool, zeta * zeta, n, partial, zeta, out);
  return out;
}

std::vector<std::pair<CycScalar, long>> list_zeta_values(const Bicharacter& chi, int n) {
  if (!chi.group()->is_finite()) throw InfiniteGroup();
  auto pool = chi.group()->elements();

  std::vector<long> exponents;  // v = zeta_L^e over all ordered pairs
  for (const auto& g : pool)
    for (const auto& h : pool) {
      long e = (chi.exponent_of(g, h) + chi.exponent_of(h, g)) % chi.value_level();
      if (std::find(exponents.begin(), exponents.end(), e) == exponents.end())
        exponents.push_back(e);
    }

  long two_l = 2 * chi.value_level();
  std::vector<std::pair<CycScalar, long>> out;
  for (long e : exponents) {
    for (long root : {e, e + chi.value_level()}) {
      CycScalar zeta = root_of_unity(two_l, root);
      long count = (long)enumerate_zeta_families(chi, n, zeta).size();
      out.emplace_back(std::move(zeta), count);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return scalar_compare(a.first, b.first) < 0;
  });
  return out;
}

}  // namespace braidlie
