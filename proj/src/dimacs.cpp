#include "hypersat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hypersat/errors.hpp"

namespace hypersat {

namespace {

using Kind = ParseError::Kind;

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_long(std::string_view tok, long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

} // namespace

ParsedFormula parse_dimacs(std::istream& in, const DimacsOptions& opts) {
  ParsedFormula result;
  bool have_header = false;
  long num_vars = 0;
  long declared = 0;
  std::size_t width = opts.width;
  std::vector<Clause> clauses;
  std::vector<Lit> pending;
  std::size_t pending_line = 0;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split(line);
    if (toks.empty()) continue;
    if (toks[0][0] == 'c') continue;
    if (toks[0] == "%") break;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(Kind::malformed_header, lineno, "second header");
      if (toks.size() != 4 || toks[1] != "cnf" || !to_long(toks[2], num_vars) || !to_long(toks[3], declared) ||
          num_vars < 0 || declared < 0)
        throw ParseError(Kind::malformed_header, lineno, std::string(line));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(Kind::missing_header, lineno, "clause before 'p cnf' line");
    for (auto tok : toks) {
      long value = 0;
      if (!to_long(tok, value)) throw ParseError(Kind::bad_token, lineno, std::string(tok));
      if (pending.empty()) pending_line = lineno;
      if (value != 0) {
        const long v = value < 0 ? -value : value;
        if (v > num_vars)
          throw ParseError(Kind::variable_out_of_range, lineno,
                           std::to_string(value) + " with n = " + std::to_string(num_vars));
        const Lit lit = Lit::from_dimacs(value);
        for (Lit seen : pending) {
          if (seen == lit) throw ParseError(Kind::duplicate_literal, lineno, std::string(tok));
          if (seen.var() == lit.var()) throw ParseError(Kind::contradictory_literal, lineno, std::string(tok));
        }
        pending.push_back(lit);
        continue;
      }
      if (width == 0) width = pending.size();
      if (pending.size() != width)
        throw ParseError(Kind::clause_width, pending_line,
                         "got " + std::to_string(pending.size()) + " literals, expected " + std::to_string(width));
      clauses.emplace_back(std::move(pending));
      pending.clear();
    }
  }
  if (!pending.empty()) throw ParseError(Kind::unterminated_clause, pending_line, "missing trailing 0");
  if (!have_header) throw ParseError(Kind::missing_header, lineno, "no 'p cnf' line");
  if (static_cast<long>(clauses.size()) != declared)
    result.warnings.push_back("header declares " + std::to_string(declared) + " clauses, found " +
                              std::to_string(clauses.size()));
  if (width == 0) width = 3;
  result.formula = Formula(static_cast<std::size_t>(num_vars), width, std::move(clauses));
  if (result.formula.duplicate_clauses() > 0)
    result.warnings.push_back(std::to_string(result.formula.duplicate_clauses()) + " duplicate clause(s)");
  return result;
}

ParsedFormula parse_dimacs(std::string_view text, const DimacsOptions& opts) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, opts);
}

ParsedFormula read_dimacs_file(const std::string& path, const DimacsOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in, opts);
}

std::string emit_dimacs(const Formula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars()) + " " + std::to_string(f.num_clauses()) + "\n";
  for (const Clause& c : f.clauses()) {
    for (Lit l : c.lits()) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

} // namespace hypersat
