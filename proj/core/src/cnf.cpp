#include "sbt/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "sbt/error.hpp"
#include "text_util.hpp"

namespace sbt {

CnfFormula::CnfFormula(int m, std::vector<Clause> clauses) : m_(m), clauses_(std::move(clauses)) {
  if (m_ < 0) throw Error(Errc::parse_error, "negative variable count");
  for (const Clause &c : clauses_)
    for (const Literal &lit : c)
      if (lit.var < 1 || lit.var > m_)
        throw Error(Errc::parse_error, "literal x" + std::to_string(lit.var) +
                                           " outside variables 1.." + std::to_string(m_));
}

FormulaStats CnfFormula::stats() const {
  FormulaStats s;
  s.m = m_;
  s.gamma = clause_count();
  s.positive.assign(static_cast<std::size_t>(m_) + 1, 0);
  s.negative.assign(static_cast<std::size_t>(m_) + 1, 0);
  for (const Clause &c : clauses_) {
    s.clause_sizes.push_back(static_cast<int>(c.size()));
    for (const Literal &lit : c)
      ++(lit.negated ? s.negative : s.positive)[static_cast<std::size_t>(lit.var)];
  }
  return s;
}

bool CnfFormula::is_normalized() const {
  const FormulaStats s = stats();
  if (s.gamma < 2 || s.m < 2) return false;
  for (int k : s.clause_sizes)
    if (k < 2) return false;
  for (int i = 1; i <= m_; ++i)
    if (s.positive[static_cast<std::size_t>(i)] < 2 || s.negative[static_cast<std::size_t>(i)] < 2)
      return false;
  return true;
}

bool CnfFormula::satisfied_by(const Assignment &a) const {
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause &c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal &lit) { return a.value(lit); });
  });
}

CnfFormula normalize(const CnfFormula &f) {
  if (f.clause_count() == 0) throw Error(Errc::empty_formula, "formula has no clauses");
  std::vector<Clause> clauses = f.clauses();
  for (Clause &c : clauses) {
    if (c.empty()) throw Error(Errc::empty_formula, "formula contains an empty clause");
    if (c.size() == 1) c.push_back(c.front());
  }
  int m = f.variable_count();
  auto tautology = [](int var) { return Clause{{var, false}, {var, true}}; };

  std::vector<int> pos(static_cast<std::size_t>(m) + 1), neg(static_cast<std::size_t>(m) + 1);
  for (const Clause &c : clauses)
    for (const Literal &lit : c) ++(lit.negated ? neg : pos)[static_cast<std::size_t>(lit.var)];
  for (int i = 1; i <= m; ++i) {
    const auto u = static_cast<std::size_t>(i);
    while (pos[u] < 2 || neg[u] < 2) {
      clauses.push_back(tautology(i));
      ++pos[u];
      ++neg[u];
    }
  }
  if (m == 1) {
    m = 2;
    clauses.push_back(tautology(2));
    clauses.push_back(tautology(2));
  }
  if (clauses.size() < 2) clauses.push_back(tautology(1));
  return CnfFormula(m, std::move(clauses));
}

namespace {

// Values: 0 unassigned, 1 true, -1 false.
bool dpll(const std::vector<Clause> &clauses, std::vector<int> &values) {
  for (;;) {
    bool changed = false;
    for (const Clause &c : clauses) {
      int unassigned = 0;
      const Literal *last = nullptr;
      bool sat = false;
      for (const Literal &lit : c) {
        const int v = values[static_cast<std::size_t>(lit.var)];
        if (v == 0) {
          ++unassigned;
          last = &lit;
        } else if ((v > 0) != lit.negated) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        values[static_cast<std::size_t>(last->var)] = last->negated ? -1 : 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  const auto free = std::find(values.begin() + 1, values.end(), 0);
  if (free == values.end()) return true;
  for (int choice : {1, -1}) {
    std::vector<int> trial = values;
    trial[static_cast<std::size_t>(free - values.begin())] = choice;
    if (dpll(clauses, trial)) {
      values = std::move(trial);
      return true;
    }
  }
  return false;
}

} // namespace

std::optional<Assignment> solve(const CnfFormula &f) {
  std::vector<int> values(static_cast<std::size_t>(f.variable_count()) + 1, 0);
  if (!dpll(f.clauses(), values)) return std::nullopt;
  Assignment a;
  for (int i = 1; i <= f.variable_count(); ++i)
    if (values[static_cast<std::size_t>(i)] > 0) a.true_vars.insert(i);
  return a;
}

std::vector<Assignment> all_models(const CnfFormula &f) {
  const int m = f.variable_count();
  if (m > 20) throw std::invalid_argument("truth-table enumeration is limited to 20 variables");
  std::vector<Assignment> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Assignment a;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) a.true_vars.insert(i + 1);
    if (f.satisfied_by(a)) out.push_back(std::move(a));
  }
  return out;
}

namespace {

long parse_int(std::string_view tok, int line_no) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(Errc::parse_error,
                "line " + std::to_string(line_no) + ": bad integer '" + std::string(tok) + "'");
  return v;
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
  std::optional<int> vars;
  long declared = 0;
  std::vector<Clause> clauses;
  Clause current;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == 'c' || toks.front() == "%") continue;
    if (toks.front() == "p") {
      if (vars) throw Error(Errc::parse_error, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "cnf")
        throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": malformed header");
      const long v = parse_int(toks[2], line_no);
      declared = parse_int(toks[3], line_no);
      if (v < 0 || declared < 0)
        throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": negative count");
      vars = static_cast<int>(v);
      continue;
    }
    if (!vars) throw Error(Errc::parse_error, "clause before the 'p cnf' header");
    for (std::string_view tok : toks) {
      const long lit = parse_int(tok, line_no);
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long var = lit < 0 ? -lit : lit;
      if (var > *vars)
        throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": variable " +
                                           std::to_string(var) + " exceeds declared " +
                                           std::to_string(*vars));
      current.push_back({static_cast<int>(var), lit < 0});
    }
  }
  if (!vars) throw Error(Errc::parse_error, "missing 'p cnf' header");
  if (!current.empty()) throw Error(Errc::parse_error, "last clause is not terminated by 0");
  if (static_cast<long>(clauses.size()) != declared)
    throw Error(Errc::parse_error, "header declares " + std::to_string(declared) +
                                       " clauses, found " + std::to_string(clauses.size()));
  return CnfFormula(*vars, std::move(clauses));
}

std::string format_dimacs(const CnfFormula &f) {
  std::string out = "p cnf " + std::to_string(f.variable_count()) + " " +
                    std::to_string(f.clause_count()) + "\n";
  for (const Clause &c : f.clauses()) {
    for (const Literal &lit : c) out += (lit.negated ? "-" : "") + std::to_string(lit.var) + " ";
    out += "0\n";
  }
  return out;
}

std::string format_clause(const Clause &c) {
  std::string out = "(";
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (p) out += " v ";
    out += (c[p].negated ? "~x" : "x") + std::to_string(c[p].var);
  }
  return out + ")";
}

Assignment parse_assignment_bits(std::string_view bits, int m) {
  if (static_cast<int>(bits.size()) != m)
    throw Error(Errc::parse_error, "assignment needs " + std::to_string(m) + " bits, got " +
                                       std::to_string(bits.size()));
  Assignment a;
  for (int i = 0; i < m; ++i) {
    const char ch = bits[static_cast<std::size_t>(i)];
    if (ch != '0' && ch != '1') throw Error(Errc::parse_error, "assignment bits must be 0 or 1");
    if (ch == '1') a.true_vars.insert(i + 1);
  }
  return a;
}

std::string format_assignment_bits(const Assignment &a, int m) {
  std::string out;
  for (int i = 1; i <= m; ++i) out += a.value(i) ? '1' : '0';
  return out;
}

} // namespace sbt
