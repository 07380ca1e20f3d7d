#include "braidlie/model.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "braidlie/text.hpp"

namespace braidlie {

namespace {

struct Line {
  int number;
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

long parse_int(const std::string& s, int line) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, 1, "expected an integer, got '" + s + "'");
  }
}

// "(a,b,c)" -> exponent vector.
std::vector<long> parse_tuple(const std::string& s, int line) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError(line, 1, "expected a degree tuple '(a,b,...)', got '" + s + "'");
  std::vector<long> out;
  for (const auto& part : split(t.substr(1, t.size() - 2), ','))
    out.push_back(parse_int(part, line));
  return out;
}

// Comma-separated tuples: "(1),(1),(2)".
std::vector<std::vector<long>> parse_tuple_list(const std::string& s, int line) {
  std::vector<std::vector<long>> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_tuple(cur, line));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(parse_tuple(cur, line));
  return out;
}

using Section = std::vector<Line>;

ParseError at_line(int line, const ParseError& inner) {
  return ParseError(line, inner.col, inner.what());
}

}  // namespace

ModelDocument load_model_text(const std::string& text) {
  std::map<std::string, Section> sections;
  ModelDocument doc;

  // Pass 1: strip comments, collect "key: value" lines per section.
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::string current;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, 1, "unterminated section header");
      current = trim(line.substr(1, line.size() - 2));
      if (current != "group" && current != "presentation" && current != "lie" &&
          current != "hopf")
        throw ParseError(line_no, 1, "unknown section [" + current + "]");
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(line_no, 1, "expected 'key: value'");
    Line entry{line_no, trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
    if (current.empty()) {
      if (entry.key == "name")
        doc.name = entry.value;
      else if (entry.key == "description")
        doc.description = entry.value;
      else
        throw ParseError(line_no, 1, "unknown top-level key '" + entry.key + "'");
      continue;
    }
    sections[current].push_back(std::move(entry));
  }

  // [group]
  {
    auto it = sections.find("group");
    if (it == sections.end())
      throw ValidationError("group", "model needs a [group] section");
    std::vector<long> torsion;
    long free_rank = 0, chi_level = 1;
    std::optional<std::vector<std::vector<long>>> matrix;
    for (const auto& l : it->second) {
      if (l.key == "torsion") {
        if (!l.value.empty() && l.value != "none")
          for (const auto& part : split(l.value, ','))
            torsion.push_back(parse_int(part, l.number));
      } else if (l.key == "free_rank") {
        free_rank = parse_int(l.value, l.number);
      } else if (l.key == "chi_level") {
        chi_level = parse_int(l.value, l.number);
      } else if (l.key == "chi_matrix") {
        std::vector<std::vector<long>> rows;
        for (const auto& row : split(l.value, ';')) {
          rows.push_back({});
          if (!row.empty())
            for (const auto& e : split(row, ','))
              rows.back().push_back(parse_int(e, l.number));
        }
        matrix = std::move(rows);
      } else {
        throw ParseError(l.number, 1, "unknown [group] key '" + l.key + "'");
      }
    }
    doc.group = AbelianGroup::make(torsion, free_rank);
    if (!matrix) {
      doc.chi = Bicharacter::trivial(doc.group);
    } else {
      try {
        doc.chi = Bicharacter::make(doc.group, chi_level, *matrix);
      } catch (const Error& e) {
        throw ValidationError("group", e.what());
      }
    }
  }

  auto check_arity = [&](const std::vector<long>& tuple, int line) {
    if (tuple.size() != doc.group->generator_count())
      throw ParseError(line, 1,
                       "degree tuple arity " + std::to_string(tuple.size()) +
                           " does not match the group's " +
                           std::to_string(doc.group->generator_count()) +
                           " generators");
  };

  // [presentation]
  if (auto it = sections.find("presentation"); it != sections.end()) {
    std::vector<std::string> names;
    std::vector<GroupElement> degrees;
    std::vector<std::pair<int, std::string>> relation_texts;
    int bound = 8;
    for (const auto& l : it->second) {
      if (l.key == "generator") {
        auto paren = l.value.find('(');
        if (paren == std::string::npos)
          throw ParseError(l.number, 1, "generator needs 'name (degree-tuple)'");
        std::string name = trim(l.value.substr(0, paren));
        auto tuple = parse_tuple(l.value.substr(paren), l.number);
        check_arity(tuple, l.number);
        names.push_back(name);
        degrees.push_back(doc.group->element(tuple));
      } else if (l.key == "relation") {
        relation_texts.emplace_back(l.number, l.value);
      } else if (l.key == "degree_bound") {
        bound = (int)parse_int(l.value, l.number);
      } else {
        throw ParseError(l.number, 1, "unknown [presentation] key '" + l.key + "'");
      }
    }
    ModelDocument::Presentation pres;
    try {
      pres.table = GeneratorTable::make(doc.group, names, degrees);
    } catch (const Error& e) {
      throw ValidationError("presentation", e.what());
    }
    pres.degree_bound = bound;
    for (const auto& [ln, textual] : relation_texts) {
      try {
        pres.relations.push_back(parse_poly(textual, pres.table));
      } catch (const ParseError& e) {
        throw at_line(ln, e);
      }
    }
    doc.presentation = std::move(pres);
  }

  // [lie]
  if (auto it = sections.find("lie"); it != sections.end()) {
    std::vector<std::string> names;
    std::vector<GroupElement> degrees;
    std::vector<std::pair<int, std::string>> bracket_texts;
    bool symmetrize = true;
    for (const auto& l : it->second) {
      if (l.key == "component") {
        auto close = l.value.find(')');
        if (close == std::string::npos || l.value.front() != '(')
          throw ParseError(l.number, 1, "component needs '(degree-tuple) names...'");
        auto tuple = parse_tuple(l.value.substr(0, close + 1), l.number);
        check_arity(tuple, l.number);
        std::istringstream rest(l.value.substr(close + 1));
        std::string nm;
        while (rest >> nm) {
          names.push_back(nm);
          degrees.push_back(doc.group->element(tuple));
        }
      } else if (l.key == "bracket") {
        bracket_texts.emplace_back(l.number, l.value);
      } else if (l.key == "degree_bound") {
        doc.lie_degree_bound = (int)parse_int(l.value, l.number);
      } else if (l.key == "symmetrize") {
        symmetrize = l.value == "true";
      } else {
        throw ParseError(l.number, 1, "unknown [lie] key '" + l.key + "'");
      }
    }
    TablePtr table;
    try {
      table = GeneratorTable::make(doc.group, names, degrees);
    } catch (const Error& e) {
      throw ValidationError("lie", e.what());
    }
    doc.lie = std::make_shared<LiePresentation>(doc.bicharacter(), table);

    // bracket: <zeta> ; <family tuples> ; <args> -> <value>
    for (const auto& [ln, textual] : bracket_texts) {
      auto parts = split(textual, ';');
      if (parts.size() != 3)
        throw ParseError(ln, 1, "bracket needs 'zeta ; family ; args -> value'");
      auto arrow = parts[2].find("->");
      if (arrow == std::string::npos)
        throw ParseError(ln, 1, "bracket entry needs '-> value'");
      try {
        CycScalar zeta = parse_scalar(parts[0]);
        std::vector<GroupElement> members;
        for (auto& tuple : parse_tuple_list(parts[1], ln)) {
          check_arity(tuple, ln);
          members.push_back(doc.group->element(tuple));
        }
        std::vector<int> args;
        for (const auto& nm : split(trim(parts[2].substr(0, arrow)), ',')) {
          int idx = table->index_of(nm);
          if (idx < 0)
            throw ValidationError("lie", "unknown basis element '" + nm + "'");
          args.push_back(idx);
        }
        GradedPoly value = parse_poly(trim(parts[2].substr(arrow + 2)), table);
        doc.lie->set_entry(ZetaFamily{zeta, members}, args, std::move(value));
      } catch (const ParseError& e) {
        throw at_line(ln, e);
      } catch (const ValidationError&) {
        throw;
      } catch (const Error& e) {
        throw ValidationError("lie", std::string(e.what()) + " (line " +
                                         std::to_string(ln) + ")");
      }
    }
    if (symmetrize) doc.lie->symmetrize();
  }

  // [hopf]
  if (auto it = sections.find("hopf"); it != sections.end()) {
    if (!doc.presentation)
      throw ValidationError("hopf", "a [hopf] section needs a [presentation]");
    const auto& table = doc.presentation->table;
    size_t n = table->size();
    ModelDocument::Hopf hopf;
    hopf.coproduct.assign(n, TensorPoly(table));
    hopf.counit.assign(n, CycScalar::zero());
    hopf.antipode.assign(n, GradedPoly(table));
    std::vector<bool> seen(n, false);
    for (const auto& l : it->second) {
      if (l.key == "biproduct") {
        hopf.biproduct = l.value == "true";
        continue;
      }
      auto arrow = l.value.find("->");
      if (l.key != "coproduct" && l.key != "counit" && l.key != "antipode")
        throw ParseError(l.number, 1, "unknown [hopf] key '" + l.key + "'");
      if (arrow == std::string::npos)
        throw ParseError(l.number, 1, l.key + " needs 'generator -> expression'");
      std::string gen = trim(l.value.substr(0, arrow));
      int idx = table->index_of(gen);
      if (idx < 0) throw ValidationError("hopf", "unknown generator '" + gen + "'");
      std::string expr = trim(l.value.substr(arrow + 2));
      try {
        if (l.key == "coproduct") {
          hopf.coproduct[idx] = parse_tensor(expr, table);
          seen[idx] = true;
        } else if (l.key == "counit") {
          hopf.counit[idx] = parse_scalar(expr);
        } else {
          hopf.antipode[idx] = parse_poly(expr, table);
        }
      } catch (const ParseError& e) {
        throw at_line(l.number, e);
      }
    }
    for (size_t i = 0; i < n; ++i)
      if (!seen[i])
        throw ValidationError("hopf", "no coproduct given for generator '" +
                                          table->name(i) + "'");
    doc.hopf = std::move(hopf);
  }

  return doc;
}

ModelDocument load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("file", "cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model_text(buf.str());
}

}  // namespace braidlie
