#include "gcls/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace gcls {

ParseError::ParseError(std::size_t line, std::size_t col, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;
};

// Splits into lines of whitespace-separated tokens with 1-based positions.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (start < i) toks.push_back({raw.substr(start, i - start), ln, start + 1});
    }
    lines.push_back(std::move(toks));
  }
  return lines;
}

template <typename T>
std::optional<T> to_number(std::string_view s) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

template <typename T>
T number(const Token& t, const char* what) {
  auto v = to_number<T>(t.text);
  if (!v) throw ParseError(t.line, t.col, std::string("expected ") + what + ", got '" + t.text + "'");
  return *v;
}

std::size_t end_col(const std::vector<Token>& toks) {
  return toks.empty() ? 1 : toks.back().col + toks.back().text.size();
}

}  // namespace

MultiClauseSet parse_gcls(const std::string& text) {
  auto lines = tokenize(text);
  std::optional<std::uint32_t> nvars;
  std::uint64_t nclauses = 0;
  std::map<Var, std::uint32_t> sizes;
  bool clauses_started = false;
  std::vector<std::vector<std::pair<Token, Literal>>> clauses;
  std::vector<std::pair<Token, Literal>> cur;
  std::size_t last_line = 0, last_col = 1;

  for (const auto& toks : lines) {
    if (toks.empty()) continue;
    last_line = toks.front().line;
    last_col = end_col(toks);
    const Token& head = toks.front();
    if (head.text == "c") continue;
    if (head.text == "p") {
      if (nvars) throw ParseError(head.line, head.col, "duplicate header");
      if (toks.size() != 4 || toks[1].text != "gcls")
        throw ParseError(head.line, head.col, "header must be 'p gcls <nvars> <nclauses>'");
      nvars = number<std::uint32_t>(toks[2], "variable count");
      nclauses = number<std::uint64_t>(toks[3], "clause count");
      continue;
    }
    if (!nvars) throw ParseError(head.line, head.col, "missing header");
    if (head.text == "d") {
      if (clauses_started) throw ParseError(head.line, head.col, "declaration after clauses");
      if (toks.size() != 3) throw ParseError(head.line, head.col, "declaration must be 'd <var> <size>'");
      auto v = number<Var>(toks[1], "variable");
      auto s = number<std::uint32_t>(toks[2], "domain size");
      if (v == 0 || v > *nvars) throw ParseError(toks[1].line, toks[1].col, "undeclared variable " + toks[1].text);
      if (s == 0) throw ParseError(toks[2].line, toks[2].col, "domain size must be positive");
      if (!sizes.emplace(v, s).second)
        throw ParseError(toks[1].line, toks[1].col, "variable " + toks[1].text + " declared twice");
      continue;
    }
    clauses_started = true;
    for (const auto& t : toks) {
      if (t.text == "0") {
        clauses.push_back(std::move(cur));
        cur.clear();
        continue;
      }
      auto colon = t.text.find(':');
      if (colon == std::string::npos) throw ParseError(t.line, t.col, "expected '<var>:<val>', got '" + t.text + "'");
      auto v = to_number<Var>(std::string_view(t.text).substr(0, colon));
      auto e = to_number<Value>(std::string_view(t.text).substr(colon + 1));
      if (!v || !e) throw ParseError(t.line, t.col, "expected '<var>:<val>', got '" + t.text + "'");
      if (*v == 0 || *v > *nvars) throw ParseError(t.line, t.col, "undeclared variable " + std::to_string(*v));
      cur.push_back({t, Literal{*v, *e}});
    }
  }
  if (!nvars) throw ParseError(1, 1, "missing header");
  if (!cur.empty()) throw ParseError(last_line, last_col, "unterminated clause");
  if (clauses.size() != nclauses)
    throw ParseError(last_line, last_col,
                     "header announces " + std::to_string(nclauses) + " clauses, found " +
                         std::to_string(clauses.size()));

  MultiClauseSet f;
  for (Var v = 1; v <= *nvars; ++v) {
    auto it = sizes.find(v);
    f.declare(v, it == sizes.end() ? 2 : it->second);
  }
  for (const auto& lits : clauses) {
    std::map<Var, Value> m;
    for (const auto& [t, x] : lits) {
      if (x.value >= f.domain_size(x.var))
        throw ParseError(t.line, t.col, "value " + std::to_string(x.value) + " out of range for variable " +
                                            std::to_string(x.var));
      auto [it, fresh] = m.emplace(x.var, x.value);
      if (!fresh && it->second != x.value)
        throw ParseError(t.line, t.col, "clashing literals on variable " + std::to_string(x.var));
    }
    std::vector<Literal> out;
    for (const auto& [v, e] : m) out.push_back(Literal{v, e});
    f.add(Clause(out));
  }
  return f;
}

std::string emit_gcls(const MultiClauseSet& f) {
  const auto& entries = f.table().entries();
  Var nv = entries.empty() ? 0 : entries.rbegin()->first;
  for (const auto& c : f.expanded())
    for (const auto& x : c) nv = std::max(nv, x.var);
  std::ostringstream out;
  out << "p gcls " << nv << ' ' << f.c() << '\n';
  for (Var v = 1; v <= nv; ++v)
    out << "d " << v << ' ' << (f.table().contains(v) ? f.domain_size(v) : 2) << '\n';
  for (const auto& c : f.expanded()) {
    for (const auto& x : c) out << x.var << ':' << x.value << ' ';
    out << "0\n";
  }
  return out.str();
}

DimacsFile to_dimacs(const TranslationResult& t) {
  DimacsFile d;
  d.nvars = static_cast<std::uint32_t>(t.cnf.table().entries().size());
  for (const auto& [b, o] : t.var_map)
    d.comments.push_back(std::string(t.direct() ? "gclsmap " : "gclsnest ") + std::to_string(b) + ' ' +
                         std::to_string(o.source) + ' ' + std::to_string(o.index));
  for (const auto& c : t.cnf.expanded()) {
    std::vector<long long> lits;
    for (const auto& x : c) lits.push_back(x.value == 0 ? static_cast<long long>(x.var) : -static_cast<long long>(x.var));
    d.clauses.push_back(std::move(lits));
  }
  return d;
}

std::string emit_dimacs(const DimacsFile& d) {
  std::ostringstream out;
  for (const auto& c : d.comments) out << "c " << c << '\n';
  out << "p cnf " << d.nvars << ' ' << d.clauses.size() << '\n';
  for (const auto& c : d.clauses) {
    for (auto l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string emit_dimacs(const TranslationResult& t) { return emit_dimacs(to_dimacs(t)); }

DimacsFile parse_dimacs(const std::string& text) {
  DimacsFile d;
  bool header = false;
  std::size_t announced = 0;
  std::vector<long long> cur;
  std::size_t last_line = 0, last_col = 1;
  std::istringstream in(text);
  std::string raw;
  std::size_t ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!raw.empty() && raw[0] == 'c') {
      if (raw.size() == 1) d.comments.emplace_back();
      else if (raw[1] == ' ') d.comments.push_back(raw.substr(2));
      else throw ParseError(ln, 1, "malformed comment line");
      continue;
    }
    auto toks = tokenize(raw);
    if (toks.empty() || toks[0].empty()) continue;
    auto& line = toks[0];
    for (auto& t : line) t.line = ln;
    last_line = ln;
    last_col = end_col(line);
    if (line[0].text == "p") {
      if (header) throw ParseError(ln, 1, "duplicate header");
      if (line.size() != 4 || line[1].text != "cnf") throw ParseError(ln, 1, "header must be 'p cnf <n> <m>'");
      d.nvars = number<std::uint32_t>(line[2], "variable count");
      announced = number<std::size_t>(line[3], "clause count");
      header = true;
      continue;
    }
    if (!header) throw ParseError(ln, line[0].col, "missing header");
    for (const auto& t : line) {
      auto l = number<long long>(t, "literal");
      if (l == 0) {
        d.clauses.push_back(std::move(cur));
        cur.clear();
        continue;
      }
      if (static_cast<unsigned long long>(l < 0 ? -l : l) > d.nvars)
        throw ParseError(t.line, t.col, "literal " + t.text + " exceeds the variable count");
      cur.push_back(l);
    }
  }
  if (!header) throw ParseError(1, 1, "missing header");
  if (!cur.empty()) throw ParseError(last_line, last_col, "unterminated clause");
  if (d.clauses.size() != announced)
    throw ParseError(last_line, last_col, "header announces " + std::to_string(announced) + " clauses, found " +
                                              std::to_string(d.clauses.size()));
  return d;
}

MultiClauseSet dimacs_to_clause_set(const DimacsFile& d) {
  MultiClauseSet f;
  for (Var v = 1; v <= d.nvars; ++v) f.declare(v, 2);
  for (const auto& c : d.clauses) {
    std::map<Var, Value> m;
    for (auto l : c) {
      Var v = static_cast<Var>(l < 0 ? -l : l);
      Value e = l < 0 ? 1 : 0;
      auto [it, fresh] = m.emplace(v, e);
      if (!fresh && it->second != e) throw std::invalid_argument("tautological DIMACS clause");
    }
    std::vector<Literal> out;
    for (const auto& [v, e] : m) out.push_back(Literal{v, e});
    f.add(Clause(out));
  }
  return f;
}

Hypergraph parse_hypergraph(const std::string& text) {
  Hypergraph g;
  bool header = false;
  std::size_t announced = 0;
  std::vector<std::uint32_t> cur;
  std::size_t last_line = 0, last_col = 1;
  for (const auto& toks : tokenize(text)) {
    if (toks.empty() || toks[0].text == "c") continue;
    last_line = toks[0].line;
    last_col = end_col(toks);
    if (toks[0].text == "p") {
      if (header) throw ParseError(toks[0].line, toks[0].col, "duplicate header");
      if (toks.size() != 4 || toks[1].text != "hyp")
        throw ParseError(toks[0].line, toks[0].col, "header must be 'p hyp <nv> <ne>'");
      g.num_vertices = number<std::uint32_t>(toks[2], "vertex count");
      announced = number<std::size_t>(toks[3], "edge count");
      header = true;
      continue;
    }
    if (!header) throw ParseError(toks[0].line, toks[0].col, "missing header");
    for (const auto& t : toks) {
      auto v = number<std::uint32_t>(t, "vertex");
      if (v == 0) {
        g.edges.push_back(std::move(cur));
        cur.clear();
        continue;
      }
      if (v > g.num_vertices) throw ParseError(t.line, t.col, "vertex " + t.text + " out of range");
      cur.push_back(v);
    }
  }
  if (!header) throw ParseError(1, 1, "missing header");
  if (!cur.empty()) throw ParseError(last_line, last_col, "unterminated hyperedge");
  if (g.edges.size() != announced) throw ParseError(last_line, last_col, "edge count does not match the header");
  return g;
}

std::string emit_hypergraph(const Hypergraph& g) {
  std::ostringstream out;
  out << "p hyp " << g.num_vertices << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    for (auto v : e) out << v << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace gcls
