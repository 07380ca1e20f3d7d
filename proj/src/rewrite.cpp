#include "braidlie/rewrite.hpp"

#include <deque>
#include <string>

#include "braidlie/errors.hpp"

namespace braidlie {

namespace {

std::string word_debug(const GeneratorTable& table, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += table.name(w[i]);
  }
  return s;
}

bool is_subword_at(const Word& needle, const Word& hay, size_t pos) {
  if (pos + needle.size() > hay.size()) return false;
  for (size_t i = 0; i < needle.size(); ++i)
    if (hay[pos + i] != needle[i]) return false;
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

// One full reduction of c*w to irreducible form, leftmost occurrence of the
// smallest matching rule first. Terminates because replacements are strictly
// smaller and the order is compatible with concatenation.
GradedPoly PresentedAlgebra::reduce_word(const Word& w, const CycScalar& c) const {
  GradedPoly out(table_);
  std::deque<std::pair<Word, CycScalar>> work{{w, c}};
  while (!work.empty()) {
    auto [cur, coeff] = std::move(work.front());
    work.pop_front();

    const Word* match = nullptr;
    size_t match_pos = 0;
    for (size_t pos = 0; pos < cur.size() && !match; ++pos) {
      for (const auto& [lhs, rhs] : rules_) {
        if (lhs.size() > cur.size() - pos) continue;
        if (is_subword_at(lhs, cur, pos)) {
          match = &lhs;
          match_pos = pos;
          break;
        }
      }
    }
    if (!match) {
      out.add_term(cur, coeff);
      continue;
    }
    const GradedPoly& rhs = rules_.at(*match);
    Word prefix(cur.begin(), cur.begin() + match_pos);
    Word suffix(cur.begin() + match_pos + match->size(), cur.end());
    for (const auto& [rw, rc] : rhs.terms())
      work.emplace_back(concat(concat(prefix, rw), suffix), coeff * rc);
  }
  return out;
}

GradedPoly PresentedAlgebra::normal_form(const GradedPoly& p) const {
  GradedPoly out(table_);
  for (const auto& [w, c] : p.terms()) {
    if ((int)w.size() > bound_)
      throw DegreeOverflow(word_debug(*table_, w), bound_);
    out = out + reduce_word(w, c);
  }
  return out;
}

GradedPoly PresentedAlgebra::mul_nf(const GradedPoly& a, const GradedPoly& b) const {
  return normal_form(a * b);
}

std::vector<Word> PresentedAlgebra::basis(int max_len) const {
  if (!stabilized_) throw IncompleteRewriteSystem();
  if (max_len > bound_) throw Error("basis request beyond the degree bound");
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (uint32_t g = 0; g < table_->size(); ++g) {
        Word cand = w;
        cand.push_back(g);
        // The prefix is irreducible, so any new redex must be a suffix.
        bool reducible = false;
        for (const auto& [lhs, rhs] : rules_) {
          if (lhs.size() > cand.size()) break;
          if (is_subword_at(lhs, cand, cand.size() - lhs.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(cand));
      }
    if (next.empty()) break;
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<Word> PresentedAlgebra::full_basis() const {
  if (!finite_dimensional()) throw InfiniteDimensional();
  return basis(bound_);
}

long PresentedAlgebra::dimension() const {
  if (!finite_dimensional()) throw InfiniteDimensional();
  return dimension_;
}

namespace {

// Returns (leading word, monic remainder) or throws OrientationFailure for a
// nonzero constant relation.
std::pair<Word, GradedPoly> orient(const GradedPoly& p) {
  auto lead = p.terms().rbegin();
  const Word& lw = lead->first;
  if (lw.empty())
    throw OrientationFailure("nonzero constant relation: quotient is the zero ring");
  CycScalar inv = lead->second.inverse();
  GradedPoly rhs(p.table());
  for (const auto& [w, c] : p.terms()) {
    if (w == lw) continue;
    rhs.add_term(w, -(inv * c));
  }
  return {lw, rhs};
}

}  // namespace

PresentedAlgebra quotient_present(TablePtr table,
                                  const std::vector<GradedPoly>& relations,
                                  int degree_bound) {
  PresentedAlgebra alg(table);
  alg.bound_ = degree_bound;

  std::deque<GradedPoly> pending;
  for (const auto& r : relations) {
    if (!same_table(*r.table(), *table)) throw TableMismatch();
    if (!r.homogeneous_degree())
      throw InhomogeneousRelation("relation is not G-homogeneous");
    if ((int)r.max_word_length() > degree_bound)
      throw Error("degree bound is smaller than a relation");
    pending.push_back(r);
  }

  bool skipped_overlap = false;
  while (true) {
    // Install pending relations, interreducing the rule set as we go.
    while (!pending.empty()) {
      GradedPoly p = alg.normal_form(pending.front());
      pending.pop_front();
      if (p.is_zero()) continue;
      auto [lw, rhs] = orient(p);

      // Existing rules whose leading word contains the new one must be
      // re-examined as plain relations.
      std::vector<Word> displaced;
      for (const auto& [olw, orhs] : alg.rules_) {
        if (olw.size() < lw.size()) continue;
        for (size_t pos = 0; pos + lw.size() <= olw.size(); ++pos)
          if (is_subword_at(lw, olw, pos)) {
            displaced.push_back(olw);
            break;
          }
      }
      for (const auto& olw : displaced) {
        GradedPoly rel = GradedPoly::from_word(table, olw) - alg.rules_.at(olw);
        alg.rules_.erase(olw);
        pending.push_back(std::move(rel));
      }
      alg.rules_.emplace(std::move(lw), std::move(rhs));
    }

    // Keep right-hand sides fully reduced against the current rules.
    bool rhs_changed = true;
    while (rhs_changed) {
      rhs_changed = false;
      for (auto& [lw, rhs] : alg.rules_) {
        GradedPoly red = alg.normal_form(rhs);
        if (!(red == rhs)) {
          rhs = std::move(red);
          rhs_changed = true;
        }
      }
    }

    // Critical pairs. Proper overlaps: lhs1 = a s, lhs2 = s b with s a
    // nonempty proper suffix/prefix. Containments cannot occur: leading
    // words stay mutually irreducible through interreduction above.
    skipped_overlap = false;
    for (const auto& [l1, r1] : alg.rules_) {
      for (const auto& [l2, r2] : alg.rules_) {
        size_t max_s = std::min(l1.size(), l2.size());
        for (size_t s = 1; s < max_s; ++s) {
          // suffix of l1 of length s == prefix of l2 of length s
          bool match = true;
          for (size_t i = 0; i < s; ++i)
            if (l1[l1.size() - s + i] != l2[i]) {
              match = false;
              break;
            }
          if (!match) continue;
          size_t total = l1.size() + l2.size() - s;
          if ((int)total > degree_bound) {
            skipped_overlap = true;
            continue;
          }
          Word a(l1.begin(), l1.end() - s);
          Word b(l2.begin() + s, l2.end());
          // a s b reduced two ways: r1 * b  vs  a * r2.
          GradedPoly left = r1 * GradedPoly::from_word(table, b);
          GradedPoly right = GradedPoly::from_word(table, a) * r2;
          GradedPoly diff = alg.normal_form(left - right);
          if (!diff.is_zero()) pending.push_back(std::move(diff));
        }
        if (!pending.empty()) break;
      }
      if (!pending.empty()) break;
    }
    if (pending.empty()) break;
  }
  alg.stabilized_ = !skipped_overlap;

  // Finite-dimensionality scan: a length below the bound with no irreducible
  // words caps the whole quotient.
  if (alg.stabilized_) {
    long count = 1;
    std::vector<Word> level{Word{}};
    for (int len = 1; len <= degree_bound; ++len) {
      std::vector<Word> next;
      for (const auto& w : level)
        for (uint32_t g = 0; g < table->size(); ++g) {
          Word cand = w;
          cand.push_back(g);
          bool reducible = false;
          for (const auto& [lhs, rhs] : alg.rules_) {
            if (lhs.size() > cand.size()) break;
            if (is_subword_at(lhs, cand, cand.size() - lhs.size())) {
              reducible = true;
              break;
            }
          }
          if (!reducible) next.push_back(std::move(cand));
        }
      if (next.empty()) {
        alg.finite_dim_ = true;
        alg.dimension_ = count;
        break;
      }
      count += (long)next.size();
      level = std::move(next);
    }
  }
  return alg;
}

}  // namespace braidlie
