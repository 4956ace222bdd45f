// Text formats: gcls clause-sets, DIMACS CNF and hypergraphs.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcls/core.hpp"
#include "gcls/encode.hpp"
#include "gcls/translate.hpp"

namespace gcls {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

MultiClauseSet parse_gcls(const std::string& text);
// Declares every variable 1..max id and lists clauses canonically, repeated by multiplicity.
std::string emit_gcls(const MultiClauseSet& f);

struct DimacsFile {
  std::uint32_t nvars = 0;
  std::vector<std::string> comments;  // without the leading "c "
  std::vector<std::vector<long long>> clauses;
};

DimacsFile to_dimacs(const TranslationResult& t);
std::string emit_dimacs(const DimacsFile& d);
std::string emit_dimacs(const TranslationResult& t);
DimacsFile parse_dimacs(const std::string& text);
// Boolean multi-clause-set over variables 1..nvars; (x,0) is the literal x.
MultiClauseSet dimacs_to_clause_set(const DimacsFile& d);

Hypergraph parse_hypergraph(const std::string& text);
std::string emit_hypergraph(const Hypergraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gcls
