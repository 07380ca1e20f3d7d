#include "braidlie/poly.hpp"

#include <algorithm>

#include "braidlie/errors.hpp"

namespace braidlie {

std::shared_ptr<const GeneratorTable> GeneratorTable::make(
    GroupPtr group, std::vector<std::string> names, std::vector<GroupElement> degrees) {
  if (names.size() != degrees.size())
    throw Error("generator table: names/degrees size mismatch");
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("generator names must be nonempty");
    if (!same_group(*degrees[i].group(), *group))
      throw Error("generator degree lies in a different group");
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error("duplicate generator name: " + names[i]);
  }
  return std::shared_ptr<const GeneratorTable>(
      new GeneratorTable(std::move(group), std::move(names), std::move(degrees)));
}

int GeneratorTable::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return (int)i;
  return -1;
}

bool same_table(const GeneratorTable& a, const GeneratorTable& b) {
  if (&a == &b) return true;
  if (!same_group(*a.group_, *b.group_)) return false;
  if (a.names_ != b.names_) return false;
  for (size_t i = 0; i < a.degrees_.size(); ++i)
    if (!(a.degrees_[i] == b.degrees_[i])) return false;
  return true;
}

namespace {

void require_same_table(const TablePtr& a, const TablePtr& b) {
  if (!same_table(*a, *b)) throw TableMismatch();
}

}  // namespace

GradedPoly GradedPoly::unit(TablePtr table) {
  return scalar(std::move(table), CycScalar::one());
}

GradedPoly GradedPoly::scalar(TablePtr table, const CycScalar& c) {
  GradedPoly p(std::move(table));
  p.add_term(Word{}, c);
  return p;
}

GradedPoly GradedPoly::generator(TablePtr table, size_t i) {
  if (i >= table->size()) throw Error("generator index out of range");
  GradedPoly p(std::move(table));
  p.add_term(Word{(uint32_t)i}, CycScalar::one());
  return p;
}

GradedPoly GradedPoly::from_word(TablePtr table, Word w, CycScalar coeff) {
  for (auto i : w)
    if (i >= table->size()) throw Error("generator index out of range");
  GradedPoly p(std::move(table));
  p.add_term(w, coeff);
  return p;
}

size_t GradedPoly::max_word_length() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void GradedPoly::add_term(const Word& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupElement GradedPoly::word_degree(const Word& w) const {
  GroupElement acc = table_->group()->zero();
  for (auto i : w) acc = acc + table_->degree(i);
  return acc;
}

std::optional<GroupElement> GradedPoly::homogeneous_degree() const {
  if (terms_.empty()) return table_->group()->zero();
  std::optional<GroupElement> deg;
  for (const auto& [w, c] : terms_) {
    GroupElement d = word_degree(w);
    if (!deg)
      deg = d;
    else if (!(*deg == d))
      return std::nullopt;
  }
  return deg;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(table_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  require_same_table(a.table_, b.table_);
  GradedPoly r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return a + (-b); }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  require_same_table(a.table_, b.table_);
  GradedPoly r(a.table_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, cu * cv);
    }
  return r;
}

GradedPoly operator*(const CycScalar& c, const GradedPoly& p) {
  GradedPoly r(p.table_);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : p.terms_) r.add_term(w, c * cw);
  return r;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  if (!same_table(*a.table_, *b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = a.terms_.begin(), jt = b.terms_.begin();
  for (; it != a.terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

TensorPoly TensorPoly::unit(TablePtr table) {
  TensorPoly t(std::move(table));
  t.add_term({Word{}, Word{}}, CycScalar::one());
  return t;
}

TensorPoly TensorPoly::of(const GradedPoly& p, const GradedPoly& q) {
  require_same_table(p.table(), q.table());
  TensorPoly t(p.table());
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms()) t.add_term({u, v}, cu * cv);
  return t;
}

TensorPoly TensorPoly::left(const GradedPoly& p) {
  return of(p, GradedPoly::unit(p.table()));
}

TensorPoly TensorPoly::right(const GradedPoly& p) {
  return of(GradedPoly::unit(p.table()), p);
}

void TensorPoly::add_term(const Key& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly r(table_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
  require_same_table(a.table_, b.table_);
  TensorPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) { return a + (-b); }

TensorPoly operator*(const CycScalar& c, const TensorPoly& p) {
  TensorPoly r(p.table_);
  if (c.is_zero()) return r;
  for (const auto& [k, ck] : p.terms_) r.add_term(k, c * ck);
  return r;
}

bool operator==(const TensorPoly& a, const TensorPoly& b) {
  if (!same_table(*a.table_, *b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = a.terms_.begin(), jt = b.terms_.begin();
  for (; it != a.terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b, const Bicharacter& chi) {
  if (!same_table(*a.table(), *b.table())) throw TableMismatch();
  const auto& table = *a.table();
  auto word_degree = [&](const Word& w) {
    GroupElement acc = table.group()->zero();
    for (auto i : w) acc = acc + table.degree(i);
    return acc;
  };
  TensorPoly r(a.table());
  for (const auto& [k1, c1] : a.terms()) {
    GroupElement dv1 = word_degree(k1.second);
    for (const auto& [k2, c2] : b.terms()) {
      CycScalar coeff = c1 * c2 * chi(dv1, word_degree(k2.first));
      Word u = k1.first;
      u.insert(u.end(), k2.first.begin(), k2.first.end());
      Word v = k1.second;
      v.insert(v.end(), k2.second.begin(), k2.second.end());
      r.add_term({std::move(u), std::move(v)}, coeff);
    }
  }
  return r;
}

}  // namespace braidlie
