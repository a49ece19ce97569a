#pragma once

#include "indisc/formula.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace indisc {

/// Parses the surface grammar. Infix `+`/`*` and the binary connectives may be
/// written without parentheses (precedence: `*` over `+`; `~` over `/\` over
/// `\/` over `->`, the last right-associative); a quantifier body extends as far
/// right as possible. Single-letter variables a..w and a bare `x` are sugar for
/// fresh ordinary indices above every explicit `x<n>`, assigned in first-use order.
///
/// Throws SyntaxError (with position) or FormulaError.
Formula parse_formula(std::string_view text, Language language = Language::LA);
Term parse_term(std::string_view text);

/// Canonical, fully parenthesized text. parse_formula(render(f)) == f.
std::string render(const Formula& f);
std::string render(const Term& t);

/// A line of a corpus file: formula text plus optional argument tuple written
/// after a `;` separator, e.g. `exists y . x1 < y ; 5`.
struct CorpusLine {
  std::size_t line_number = 0;
  std::string text;
  Formula formula = Formula::eq(Term::zero(), Term::zero());
  std::vector<Natural> args;
  bool has_args = false;
};

/// One formula per line; blank lines and lines starting with '#' are skipped.
std::vector<CorpusLine> parse_corpus(std::string_view content, Language language = Language::LA);
std::vector<CorpusLine> read_corpus_file(const std::string& path, Language language = Language::LA);

}  // namespace indisc
