#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "braidlie/cyclotomic.hpp"

namespace braidlie {

class AbelianGroup;
using GroupPtr = std::shared_ptr<const AbelianGroup>;

/// Element of a finitely generated abelian group, written additively.
/// Torsion coordinates are stored reduced into [0, m_i).
class GroupElement {
 public:
  GroupElement(GroupPtr group, std::vector<long> exponents);

  const GroupPtr& group() const { return group_; }
  const std::vector<long>& exponents() const { return exps_; }

  bool is_zero() const;
  GroupElement operator-() const;
  GroupElement scaled(long k) const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b);  // lex

 private:
  GroupPtr group_;
  std::vector<long> exps_;
};

/// C_{m_1} x ... x C_{m_s} x Z^r, presented by invariant factors as given
/// (no Smith normal form canonicalization).
class AbelianGroup : public std::enable_shared_from_this<AbelianGroup> {
 public:
  static GroupPtr make(std::vector<long> torsion_orders, long free_rank = 0);

  const std::vector<long>& torsion() const { return torsion_; }
  long free_rank() const { return free_rank_; }
  size_t generator_count() const { return torsion_.size() + free_rank_; }

  bool is_finite() const { return free_rank_ == 0; }
  long order() const;  // throws InfiniteGroup

  GroupElement zero() const;
  GroupElement element(std::vector<long> exponents) const;
  GroupElement generator(size_t i) const;

  /// All elements in lexicographic order of exponent tuples.
  std::vector<GroupElement> elements() const;  // throws InfiniteGroup

  friend bool same_group(const AbelianGroup& a, const AbelianGroup& b) {
    return a.torsion_ == b.torsion_ && a.free_rank_ == b.free_rank_;
  }

 private:
  AbelianGroup(std::vector<long> torsion, long rank)
      : torsion_(std::move(torsion)), free_rank_(rank) {}
  std::vector<long> torsion_;
  long free_rank_;
};

/// chi(g, h) = zeta_L^(sum_ij g_i E_ij h_j). Well-definedness on torsion
/// generators is validated at construction.
class Bicharacter {
 public:
  static Bicharacter make(GroupPtr group, long value_level,
                          std::vector<std::vector<long>> exponent_matrix);
  static Bicharacter trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  long value_level() const { return level_; }
  const std::vector<std::vector<long>>& matrix() const { return expo_; }

  long exponent_of(const GroupElement& g, const GroupElement& h) const;
  CycScalar operator()(const GroupElement& g, const GroupElement& h) const;

 private:
  Bicharacter(GroupPtr g, long level, std::vector<std::vector<long>> e)
      : group_(std::move(g)), level_(level), expo_(std::move(e)) {}
  GroupPtr group_;
  long level_;
  std::vector<std::vector<long>> expo_;
};

/// Permutation of {1..n}, stored 0-based.
class Permutation {
 public:
  static Permutation identity(int n);
  /// One-line notation with 1-based images, e.g. {2,1} for the swap in S_2.
  static Permutation from_one_line(const std::vector<int>& images);
  static std::vector<Permutation> all(int n);

  int size() const { return (int)img_.size(); }
  int operator()(int i) const { return img_[i]; }  // 0-based
  Permutation compose(const Permutation& inner) const;  // (this o inner)
  Permutation inverse() const;
  std::vector<int> one_line() const;  // 1-based
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

/// A tuple (g_1, ..., g_n) with chi(g_i, g_j) chi(g_j, g_i) = zeta^2 for i != j.
struct ZetaFamily {
  CycScalar zeta;
  std::vector<GroupElement> members;

  size_t length() const { return members.size(); }
  GroupElement degree_sum() const;
  ZetaFamily permuted(const Permutation& sigma) const;
};

/// Throws if zeta is zero or not a root of unity.
bool is_zeta_family(const Bicharacter& chi, const CycScalar& zeta,
                    const std::vector<GroupElement>& members);

/// rho(sigma, fam) = prod over reverse-position pairs (i < j, sigma(i) > sigma(j))
/// of zeta^-1 chi(g_sigma(j), g_sigma(i)). Generalizes the permutation sign.
CycScalar rho(const Bicharacter& chi, const Permutation& sigma, const ZetaFamily& fam);

/// Same with zeta^-1 supplied, for callers evaluating many permutations of
/// one family (the inverse is the expensive part).
CycScalar rho(const Bicharacter& chi, const Permutation& sigma, const ZetaFamily& fam,
              const CycScalar& zeta_inverse);

/// All zeta-families of length n, lexicographic in concatenated exponents.
std::vector<ZetaFamily> enumerate_zeta_families(const Bicharacter& chi, int n,
                                                const CycScalar& zeta);

/// For each value v = chi(g,h) chi(h,g) realized on G x G, both square roots
/// of v at level 2L, each with its family count at length n.
std::vector<std::pair<CycScalar, long>> list_zeta_values(const Bicharacter& chi, int n);

}  // namespace braidlie
