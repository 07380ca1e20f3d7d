#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidlie/group.hpp"

namespace braidlie {

/// Named homogeneous generators with G-degrees.
class GeneratorTable {
 public:
  static std::shared_ptr<const GeneratorTable> make(GroupPtr group,
                                                    std::vector<std::string> names,
                                                    std::vector<GroupElement> degrees);

  const GroupPtr& group() const { return group_; }
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const GroupElement& degree(size_t i) const { return degrees_.at(i); }
  int index_of(const std::string& name) const;  // -1 when absent

  friend bool same_table(const GeneratorTable& a, const GeneratorTable& b);

 private:
  GeneratorTable(GroupPtr g, std::vector<std::string> n, std::vector<GroupElement> d)
      : group_(std::move(g)), names_(std::move(n)), degrees_(std::move(d)) {}
  GroupPtr group_;
  std::vector<std::string> names_;
  std::vector<GroupElement> degrees_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

/// A word in generator indices; the empty word is the algebra unit.
using Word = std::vector<uint32_t>;

/// Length first, then lexicographic by generator index. Total, and
/// compatible with concatenation on both sides.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial over CycScalar in the table's generators.
class GradedPoly {
 public:
  using TermMap = std::map<Word, CycScalar, WordOrder>;

  explicit GradedPoly(TablePtr table) : table_(std::move(table)) {}
  static GradedPoly zero(TablePtr table) { return GradedPoly(std::move(table)); }
  static GradedPoly unit(TablePtr table);
  static GradedPoly scalar(TablePtr table, const CycScalar& c);
  static GradedPoly generator(TablePtr table, size_t i);
  static GradedPoly from_word(TablePtr table, Word w,
                              CycScalar coeff = CycScalar::one());

  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t max_word_length() const;

  /// Accumulates c on word w, dropping the term if it cancels.
  void add_term(const Word& w, const CycScalar& c);

  GroupElement word_degree(const Word& w) const;
  /// Degree shared by all words; nullopt when inhomogeneous. The zero
  /// polynomial reports the group zero.
  std::optional<GroupElement> homogeneous_degree() const;

  GradedPoly operator-() const;
  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const CycScalar& c, const GradedPoly& p);
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

 private:
  TablePtr table_;
  TermMap terms_;
};

/// Element of the braided tensor square: word pairs with coefficients.
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  /// Left leg descending, right leg ascending: Delta-style displays read
  /// h (x) 1 + ... + 1 (x) h.
  struct KeyOrder {
    WordOrder w;
    bool operator()(const Key& a, const Key& b) const {
      if (w(b.first, a.first)) return true;
      if (w(a.first, b.first)) return false;
      return w(a.second, b.second);
    }
  };
  using TermMap = std::map<Key, CycScalar, KeyOrder>;

  explicit TensorPoly(TablePtr table) : table_(std::move(table)) {}
  static TensorPoly unit(TablePtr table);
  /// Bilinear p (x) q.
  static TensorPoly of(const GradedPoly& p, const GradedPoly& q);
  static TensorPoly left(const GradedPoly& p);   // p (x) 1
  static TensorPoly right(const GradedPoly& p);  // 1 (x) p

  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const CycScalar& c);

  TensorPoly operator-() const;
  friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const CycScalar& c, const TensorPoly& p);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b);
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

 private:
  TablePtr table_;
  TermMap terms_;
};

/// Braided product: (u1 (x) v1)(u2 (x) v2) = chi(deg v1, deg u2) u1u2 (x) v1v2.
TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b, const Bicharacter& chi);

}  // namespace braidlie
