#include "mimred/formula.hpp"

#include <algorithm>
#include <sstream>

#include "mimred/error.hpp"

namespace mimred {

std::vector<int> NaeFormula::occurrences() const {
  std::vector<int> occ(static_cast<std::size_t>(num_vars) + 1, 0);
  for (const auto& c : clauses)
    for (int x : c)
      if (x >= 1 && x <= num_vars) ++occ[x];
  return occ;
}

bool NaeFormula::is_four_occurrence() const {
  auto occ = occurrences();
  return std::all_of(occ.begin() + 1, occ.end(), [](int k) { return k == 4; });
}

void validate_formula(const NaeFormula& f, bool strict) {
  if (f.num_vars < 1) throw ValidationError("formula has no variables");
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    for (int x : c)
      if (x < 1 || x > f.num_vars)
        throw ValidationError("clause " + std::to_string(i + 1) +
                              ": variable " + std::to_string(x) +
                              " out of range");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw ValidationError("clause " + std::to_string(i + 1) +
                            ": repeated variable");
  }
  if (strict) {
    auto occ = f.occurrences();
    for (int x = 1; x <= f.num_vars; ++x)
      if (occ[x] != 4)
        throw ValidationError("variable " + std::to_string(x) + " occurs " +
                              std::to_string(occ[x]) + " times, expected 4");
  }
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

}  // namespace

NaeFormula parse_nae_dimacs(std::istream& in, bool strict) {
  NaeFormula f;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<Token> pending;
  std::string line;
  std::size_t lineno = 0;

  auto flush_clause = [&](const Token& zero) {
    if (pending.size() != 3)
      throw ParseError("clause has " + std::to_string(pending.size()) +
                           " literals, expected 3",
                       zero.line, zero.column);
    Clause c{};
    for (std::size_t k = 0; k < 3; ++k) {
      long lit = std::stol(pending[k].text);
      if (lit > f.num_vars)
        throw ParseError("variable " + pending[k].text + " exceeds header",
                         pending[k].line, pending[k].column);
      c[k] = static_cast<int>(lit);
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw ParseError("repeated variable in clause", pending[0].line,
                       pending[0].column);
    f.clauses.push_back(c);
    pending.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = 0;
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size() || line[pos] == 'c' || line[pos] == '%') continue;
    if (line[pos] == 'p') {
      if (have_header) throw ParseError("duplicate header", lineno, pos + 1);
      std::istringstream hs(line.substr(pos + 1));
      std::string fmt;
      long n = -1, m = -1;
      if (!(hs >> fmt >> n >> m) || fmt != "cnf" || n < 1 || m < 0)
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'",
                         lineno, pos + 1);
      std::string extra;
      if (hs >> extra) throw ParseError("trailing text after header", lineno, pos + 1);
      f.num_vars = static_cast<int>(n);
      declared_clauses = m;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before header", lineno, pos + 1);
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == line.size()) break;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      Token tok{line.substr(start, pos - start), lineno, start + 1};
      std::size_t digits = 0;
      bool negative = tok.text[0] == '-';
      for (std::size_t k = negative ? 1 : 0; k < tok.text.size(); ++k)
        if (std::isdigit(static_cast<unsigned char>(tok.text[k]))) ++digits;
      if (digits == 0 || digits + (negative ? 1 : 0) != tok.text.size() || digits > 9)
        throw ParseError("invalid literal '" + tok.text + "'", tok.line, tok.column);
      if (negative && tok.text != "-0")
        throw ParseError("negative literal " + tok.text + " not allowed", tok.line,
                         tok.column);
      if (std::stol(tok.text) == 0) {
        flush_clause(tok);
      } else {
        pending.push_back(tok);
      }
    }
  }
  if (!have_header) throw ParseError("missing header", lineno + 1, 1);
  if (!pending.empty())
    throw ParseError("unterminated clause", pending.back().line, pending.back().column);
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()),
                     lineno + 1, 1);
  validate_formula(f, strict);
  return f;
}

NaeFormula parse_nae_dimacs(const std::string& text, bool strict) {
  std::istringstream in(text);
  return parse_nae_dimacs(in, strict);
}

std::string to_dimacs(const NaeFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

bool eval_nae(const NaeFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars)
    throw ValidationError("assignment has " + std::to_string(a.size()) +
                          " values, formula has " + std::to_string(f.num_vars) +
                          " variables");
  for (const auto& c : f.clauses) {
    bool t = a[c[0] - 1], u = a[c[1] - 1], v = a[c[2] - 1];
    if (t == u && u == v) return false;
  }
  return true;
}

Assignment complement(const Assignment& a) {
  Assignment r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = !a[i];
  return r;
}

std::optional<Assignment> brute_force_nae(const NaeFormula& f, int cap) {
  if (f.num_vars > cap)
    throw BudgetExceeded("brute force limited to " + std::to_string(cap) +
                         " variables, formula has " + std::to_string(f.num_vars));
  const int n = f.num_vars;
  // Clause masks with variable 1 as the most significant bit.
  std::vector<std::uint32_t> masks;
  masks.reserve(f.clauses.size());
  for (const auto& c : f.clauses) {
    std::uint32_t m = 0;
    for (int x : c) m |= 1u << (n - x);
    masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (auto m : masks) {
      auto hit = static_cast<std::uint32_t>(bits) & m;
      if (hit == 0 || hit == m) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a(n);
      for (int x = 1; x <= n; ++x) a[x - 1] = (bits >> (n - x)) & 1u;
      return a;
    }
  }
  return std::nullopt;
}

std::string assignment_to_string(const Assignment& a) {
  std::string s;
  s.reserve(a.size());
  for (bool b : a) s.push_back(b ? '1' : '0');
  return s;
}

Assignment assignment_from_string(const std::string& bits) {
  Assignment a;
  for (char ch : bits) {
    if (ch == '1' || ch == 'T' || ch == 't') {
      a.push_back(true);
    } else if (ch == '0' || ch == 'F' || ch == 'f') {
      a.push_back(false);
    } else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') {
      throw ValidationError(std::string("invalid assignment character '") + ch + "'");
    }
  }
  return a;
}

}  // namespace mimred
