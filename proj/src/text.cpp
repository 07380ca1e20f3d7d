#include "braidlie/text.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "braidlie/errors.hpp"

namespace braidlie {

namespace {

bool is_neg(const Rational& r) { return sgn(r) < 0; }

std::string rat_str(const Rational& r) { return r.get_str(); }

// A scalar as a sequence of (exponent, coefficient) at its minimal level.
struct ScalarTerms {
  long level;
  std::vector<std::pair<long, Rational>> terms;  // ascending exponent, nonzero
};

ScalarTerms scalar_terms(const CycScalar& u) {
  CycScalar m = u.minimized();
  ScalarTerms out{m.level(), {}};
  for (size_t k = 0; k < m.coeffs().size(); ++k)
    if (m.coeffs()[k] != 0) out.terms.emplace_back((long)k, m.coeffs()[k]);
  return out;
}

std::string term_body(long exp, const Rational& coeff_abs) {
  if (exp == 0) return rat_str(coeff_abs);
  return rat_str(coeff_abs) + "*z^" + std::to_string(exp);
}

}  // namespace

std::string render_scalar(const CycScalar& u) {
  auto st = scalar_terms(u);
  std::string s;
  if (st.terms.empty()) {
    s = "0";
  } else {
    bool first = true;
    for (const auto& [exp, c] : st.terms) {
      if (first) {
        s += (is_neg(c) ? "-" : "") + term_body(exp, abs(c));
        first = false;
      } else {
        s += (is_neg(c) ? " - " : " + ") + term_body(exp, abs(c));
      }
    }
  }
  return s + " @ " + std::to_string(st.level);
}

// ---------------------------------------------------------------------------
// Tokenizer shared by the scalar and polynomial parsers.

namespace {

enum class Tok { Number, Name, ZAtom, Plus, Minus, Star, Slash, Caret, At, LParen, RParen, Tensor, End };

struct Token {
  Tok kind;
  std::string text;   // Name
  long number = 0;    // Number
  long zexp = 0;      // ZAtom
  long zlevel = -1;   // ZAtom; -1 = pending (no inline @)
  int col = 0;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  std::vector<Token> tokens;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  [[noreturn]] void fail(const std::string& what, size_t at) {
    throw ParseError(1, (int)at + 1, what);
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (std::isspace((unsigned char)c)) {
        ++pos;
        continue;
      }
      int col = (int)pos;
      if (c == '(') {
        // The exact sequence "(x)" is the tensor separator.
        if (pos + 2 < src.size() && src[pos + 1] == 'x' && src[pos + 2] == ')') {
          tokens.push_back({Tok::Tensor, "", 0, 0, -1, col});
          pos += 3;
          continue;
        }
        tokens.push_back({Tok::LParen, "", 0, 0, -1, col});
        ++pos;
        continue;
      }
      if (c == ')') { tokens.push_back({Tok::RParen, "", 0, 0, -1, col}); ++pos; continue; }
      if (c == '+') { tokens.push_back({Tok::Plus, "", 0, 0, -1, col}); ++pos; continue; }
      if (c == '-') { tokens.push_back({Tok::Minus, "", 0, 0, -1, col}); ++pos; continue; }
      if (c == '*') { tokens.push_back({Tok::Star, "", 0, 0, -1, col}); ++pos; continue; }
      if (c == '/') { tokens.push_back({Tok::Slash, "", 0, 0, -1, col}); ++pos; continue; }
      if (c == '^') { tokens.push_back({Tok::Caret, "", 0, 0, -1, col}); ++pos; continue; }
      if (c == '@') { tokens.push_back({Tok::At, "", 0, 0, -1, col}); ++pos; continue; }
      if (std::isdigit((unsigned char)c)) {
        long v = 0;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
          v = v * 10 + (src[pos++] - '0');
        tokens.push_back({Tok::Number, "", v, 0, -1, col});
        continue;
      }
      if (std::isalpha((unsigned char)c) || c == '_') {
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
          ++pos;
        std::string name = src.substr(start, pos - start);
        // "z^k" or "z^k@M" is the root-of-unity atom.
        if (name == "z" && pos < src.size() && src[pos] == '^' && pos + 1 < src.size() &&
            std::isdigit((unsigned char)src[pos + 1])) {
          ++pos;  // ^
          long k = 0;
          while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
            k = k * 10 + (src[pos++] - '0');
          long lvl = -1;
          if (pos < src.size() && src[pos] == '@') {
            ++pos;
            if (pos >= src.size() || !std::isdigit((unsigned char)src[pos]))
              fail("expected level after '@'", pos);
            lvl = 0;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
              lvl = lvl * 10 + (src[pos++] - '0');
          }
          tokens.push_back({Tok::ZAtom, "", 0, k, lvl, col});
          continue;
        }
        tokens.push_back({Tok::Name, name, 0, 0, -1, col});
        continue;
      }
      fail(std::string("unexpected character '") + c + "'", pos);
    }
    tokens.push_back({Tok::End, "", 0, 0, -1, (int)src.size()});
  }
};

// Recursive-descent parser producing TensorPoly terms; plain polynomials are
// the no-Tensor special case and scalars the no-Name special case.
struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  TablePtr table;      // null => scalars only
  bool allow_tensor;
  long pending_level = -1;  // set when a trailing "@ M" was found up front

  const Token& peek() const { return toks[at]; }
  Token next() { return toks[at++]; }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(1, peek().col + 1, what);
  }

  struct Value {
    // Each parsed value is a tensor polynomial; pure scalars and plain
    // polynomials keep the right leg empty and are lowered at the end.
    TensorPoly t;
    bool saw_tensor = false;
    explicit Value(TablePtr tab) : t(std::move(tab)) {}
  };

  TablePtr work_table() const { return table; }

  Value parse_expr() {
    Value acc = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      Value rhs = parse_term();
      acc.saw_tensor |= rhs.saw_tensor;
      acc.t = minus ? acc.t - rhs.t : acc.t + rhs.t;
    }
    return acc;
  }

  Value parse_term() {
    Value acc = parse_factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash ||
           peek().kind == Tok::Tensor) {
      Tok op = next().kind;
      if (op == Tok::Tensor) {
        if (!allow_tensor) fail("'(x)' tensor separator not allowed here");
        Value rhs = parse_factor();
        while (peek().kind == Tok::Star) {
          next();
          Value more = parse_factor();
          rhs.t = mul(rhs.t, more.t);
        }
        if (acc.saw_tensor || rhs.saw_tensor) fail("nested '(x)' in one term");
        TensorPoly joined(work_table());
        for (const auto& [ku, cu] : acc.t.terms())
          for (const auto& [kv, cv] : rhs.t.terms()) {
            if (!ku.second.empty() || !kv.second.empty()) fail("malformed tensor term");
            joined.add_term({ku.first, kv.first}, cu * cv);
          }
        acc.t = std::move(joined);
        acc.saw_tensor = true;
        continue;
      }
      Value rhs = parse_factor();
      if (op == Tok::Slash) {
        auto c = as_scalar(rhs);
        if (c.is_zero()) fail("division by zero");
        acc.t = c.inverse() * acc.t;
      } else {
        if (rhs.saw_tensor) fail("'(x)' must not follow '*'");
        acc.t = mul(acc.t, rhs.t);
      }
    }
    return acc;
  }

  // Left-concatenation product for tensor-less values.
  TensorPoly mul(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r(work_table());
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) {
        Word u = ka.first;
        u.insert(u.end(), kb.first.begin(), kb.first.end());
        if (!ka.second.empty() || !kb.second.empty())
          fail("internal: tensor legs in plain product");
        r.add_term({std::move(u), Word{}}, ca * cb);
      }
    return r;
  }

  CycScalar as_scalar(const Value& v) {
    CycScalar c = CycScalar::zero();
    for (const auto& [k, coeff] : v.t.terms()) {
      if (!k.first.empty() || !k.second.empty()) fail("expected a scalar");
      c += coeff;
    }
    return c;
  }

  Value parse_factor() {
    Value base = parse_primary();
    while (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number) fail("expected integer exponent after '^'");
      long e = next().number;
      if (base.saw_tensor) fail("cannot raise a tensor term to a power");
      TensorPoly acc = TensorPoly::unit(work_table());
      for (long i = 0; i < e; ++i) acc = mul(acc, base.t);
      base.t = std::move(acc);
    }
    return base;
  }

  Value parse_primary() {
    Value v(work_table());
    switch (peek().kind) {
      case Tok::Minus: {
        next();
        Value inner = parse_factor();
        inner.t = -inner.t;
        return inner;
      }
      case Tok::Number: {
        long n = next().number;
        v.t.add_term({Word{}, Word{}}, CycScalar::from_int(n));
        return v;
      }
      case Tok::ZAtom: {
        Token tok = next();
        long lvl = tok.zlevel >= 0 ? tok.zlevel : pending_level;
        if (lvl < 0) fail("z^k needs a level: write z^k@M or a trailing '@ M'");
        v.t.add_term({Word{}, Word{}}, root_of_unity(lvl, tok.zexp));
        return v;
      }
      case Tok::Name: {
        Token tok = next();
        if (!table) fail("generator '" + tok.text + "' not allowed in a scalar");
        int idx = table->index_of(tok.text);
        if (idx < 0) fail("unknown generator '" + tok.text + "'");
        v.t.add_term({Word{(uint32_t)idx}, Word{}}, CycScalar::one());
        return v;
      }
      case Tok::LParen: {
        next();
        // Slice to the matching ')' and parse as a standalone scalar group,
        // honoring a trailing "@ M" level inside the group.
        size_t depth = 1, idx = at;
        while (idx < toks.size() && toks[idx].kind != Tok::End) {
          if (toks[idx].kind == Tok::LParen) ++depth;
          if (toks[idx].kind == Tok::RParen && --depth == 0) break;
          ++idx;
        }
        if (idx >= toks.size() || toks[idx].kind != Tok::RParen) fail("expected ')'");
        std::vector<Token> slice(toks.begin() + at, toks.begin() + idx);
        long sub_pending = pending_level;
        if (slice.size() >= 2 && slice[slice.size() - 2].kind == Tok::At &&
            slice.back().kind == Tok::Number) {
          sub_pending = slice.back().number;
          slice.resize(slice.size() - 2);
        }
        slice.push_back({Tok::End, "", 0, 0, -1, toks[idx].col});
        Parser sub{std::move(slice), 0, nullptr, false, sub_pending};
        Value inner = sub.parse_expr();
        if (sub.peek().kind != Tok::End) sub.fail("trailing input in scalar group");
        CycScalar c = sub.as_scalar(inner);
        at = idx + 1;
        Value out(work_table());
        out.t.add_term({Word{}, Word{}}, c);
        return out;
      }
      default:
        fail("unexpected token");
    }
  }
};

// Scans for a top-level trailing "@ M" (outside parentheses) and strips it.
std::pair<std::string, long> split_trailing_level(const std::string& text) {
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '@' && depth == 0) {
      // Is this '@' part of a z^k@M atom? It is iff preceded (ignoring
      // nothing) by a digit directly following "z^digits".
      size_t j = i;
      bool atom = false;
      if (j > 0 && std::isdigit((unsigned char)text[j - 1])) {
        size_t k = j - 1;
        while (k > 0 && std::isdigit((unsigned char)text[k])) --k;
        if (text[k] == '^' && k > 0 && text[k - 1] == 'z') atom = true;
      }
      if (!atom) {
        std::string head = text.substr(0, i);
        std::string tail = text.substr(i + 1);
        size_t p = 0;
        while (p < tail.size() && std::isspace((unsigned char)tail[p])) ++p;
        long lvl = 0;
        bool any = false;
        while (p < tail.size() && std::isdigit((unsigned char)tail[p])) {
          lvl = lvl * 10 + (tail[p++] - '0');
          any = true;
        }
        while (p < tail.size() && std::isspace((unsigned char)tail[p])) ++p;
        if (!any || p != tail.size())
          throw ParseError(1, (int)i + 1, "malformed trailing '@ M' level");
        return {head, lvl};
      }
    }
  }
  return {text, -1};
}

Parser make_parser(const std::string& text, TablePtr table, bool allow_tensor,
                   bool allow_trailing_level) {
  std::string body = text;
  long pending = -1;
  if (allow_trailing_level) {
    auto [head, lvl] = split_trailing_level(text);
    body = head;
    pending = lvl;
  }
  Lexer lex(body);
  Parser p{std::move(lex.tokens), 0, std::move(table), allow_tensor, pending};
  return p;
}

}  // namespace

CycScalar parse_scalar(const std::string& text) {
  Parser p = make_parser(text, nullptr, false, true);
  auto v = p.parse_expr();
  if (p.peek().kind != Tok::End) p.fail("trailing input");
  CycScalar c = p.as_scalar(v);
  if (p.pending_level > 0) c = c.embedded(std::lcm(c.level(), p.pending_level));
  return c;
}

GradedPoly parse_poly(const std::string& text, const TablePtr& table) {
  Parser p = make_parser(text, table, false, false);
  auto v = p.parse_expr();
  if (p.peek().kind != Tok::End) p.fail("trailing input");
  GradedPoly out(table);
  for (const auto& [k, c] : v.t.terms()) out.add_term(k.first, c);
  return out;
}

TensorPoly parse_tensor(const std::string& text, const TablePtr& table) {
  Parser p = make_parser(text, table, true, false);
  auto v = p.parse_expr();
  if (p.peek().kind != Tok::End) p.fail("trailing input");
  if (!v.saw_tensor)
    throw ParseError(1, 1, "tensor expression needs the '(x)' separator");
  return v.t;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Coefficient as (is_negative, factor_text). factor_text is empty for +-1.
std::pair<bool, std::string> coeff_factor(const CycScalar& c) {
  auto st = scalar_terms(c);
  if (st.terms.size() == 1) {
    auto [exp, r] = st.terms[0];
    bool neg = is_neg(r);
    Rational a = abs(r);
    std::string body;
    if (exp == 0) {
      if (a == 1) return {neg, ""};
      body = rat_str(a);
    } else {
      body = rat_str(a) + "*z^" + std::to_string(exp) + "@" + std::to_string(st.level);
    }
    return {neg, body};
  }
  return {false, "(" + render_scalar(c) + ")"};
}

}  // namespace

std::string render_word(const GeneratorTable& table, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += table.name(w[i]);
  }
  return s;
}

namespace {

std::string render_terms(
    const std::vector<std::pair<std::string, CycScalar>>& body_terms) {
  if (body_terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [body, c] : body_terms) {
    auto [neg, factor] = coeff_factor(c);
    std::string piece = factor.empty() ? body
                        : body == "1"  ? factor
                                       : factor + "*" + body;
    if (first) {
      s += (neg ? "-" : "") + piece;
      first = false;
    } else {
      s += (neg ? " - " : " + ") + piece;
    }
  }
  return s;
}

}  // namespace

std::string render_poly(const GradedPoly& p) {
  std::vector<std::pair<std::string, CycScalar>> body;
  for (const auto& [w, c] : p.terms())
    body.emplace_back(render_word(*p.table(), w), c);
  return render_terms(body);
}

std::string render_tensor(const TensorPoly& t) {
  std::vector<std::pair<std::string, CycScalar>> body;
  for (const auto& [k, c] : t.terms())
    body.emplace_back(render_word(*t.table(), k.first) + "(x)" +
                          render_word(*t.table(), k.second),
                      c);
  return render_terms(body);
}

std::string render_group_element(const GroupElement& g) {
  std::string s = "(";
  for (size_t i = 0; i < g.exponents().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.exponents()[i]);
  }
  return s + ")";
}

std::string render_permutation(const Permutation& sigma) {
  std::string s = "(";
  auto ol = sigma.one_line();
  for (size_t i = 0; i < ol.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ol[i]);
  }
  return s + ")";
}

std::string render_family(const ZetaFamily& fam) {
  std::string s = "zeta=" + render_scalar(fam.zeta) + " family=";
  for (size_t i = 0; i < fam.members.size(); ++i) {
    if (i) s += ",";
    s += render_group_element(fam.members[i]);
  }
  return s;
}

std::string render_report(const CheckReport& report) {
  std::ostringstream os;
  for (const auto& c : report.caveats) os << "CAVEAT " << c << "\n";
  for (const auto& e : report.entries) {
    os << e.name << (e.pass ? " PASS" : " FAIL");
    if (!e.pass && !e.witness.empty()) os << " " << e.witness;
    os << "\n";
  }
  os << "SUMMARY " << (report.passed() ? "PASS" : "FAIL") << " checked="
     << report.entries.size() << " failed=" << report.fail_count() << "\n";
  return os.str();
}

}  // namespace braidlie
