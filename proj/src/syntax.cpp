#include "indisc/syntax.hpp"

#include "indisc/error.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace indisc {

namespace {

enum class Tok {
  End, Zero, Var, Succ, Pred, LParen, RParen, Plus, Star, Eq, Lt, Not, Or, And, Implies,
  Exists, Forall, Dot, Semicolon
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, start, std::string(s.substr(start, len))});
      i += len;
    };
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '=': push(Tok::Eq, 1); continue;
      case '<': push(Tok::Lt, 1); continue;
      case '~': push(Tok::Not, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case ';': push(Tok::Semicolon, 1); continue;
      case '0':
        if (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))
          throw SyntaxError(start, "numeric literals other than 0 are not terms; use S(...)");
        push(Tok::Zero, 1);
        continue;
      default: break;
    }
    if (s.substr(i, 2) == "\\/") { push(Tok::Or, 2); continue; }
    if (s.substr(i, 2) == "/\\") { push(Tok::And, 2); continue; }
    if (s.substr(i, 2) == "->") { push(Tok::Implies, 2); continue; }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      std::string word(s.substr(i, j - i));
      if (word == "exists") { push(Tok::Exists, j - i); continue; }
      if (word == "forall") { push(Tok::Forall, j - i); continue; }
      if (word == "S") { push(Tok::Succ, 1); continue; }
      if (word == "I") { push(Tok::Pred, 1); continue; }
      push(Tok::Var, j - i);
      continue;
    }
    throw SyntaxError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::uint32_t parse_index(const Token& t, std::string_view digits) {
  if (digits.size() > 9 || (digits.size() > 1 && digits[0] == '0'))
    throw SyntaxError(t.pos, "bad variable index in '" + t.text + "'");
  auto v = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
  if (v == 0) throw SyntaxError(t.pos, "variable indices start at 1: '" + t.text + "'");
  return v;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Language lang) : toks_(std::move(toks)), lang_(lang) {
    // Sugar letters are numbered above every explicit x-index in the text.
    std::uint32_t max_x = 0;
    for (const auto& t : toks_) {
      if (t.kind == Tok::Var && t.text.size() > 1 && t.text[0] == 'x' &&
          all_digits(std::string_view(t.text).substr(1)))
        max_x = std::max(max_x, parse_index(t, std::string_view(t.text).substr(1)));
    }
    next_sugar_ = max_x + 1;
  }

  Formula formula_to_end() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Formula formula_until_semicolon() {
    Formula f = formula();
    if (peek().kind != Tok::Semicolon && peek().kind != Tok::End)
      fail("expected end of formula");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  std::size_t position() const { return pos_; }
  const std::vector<Token>& tokens() const { return toks_; }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = peek();
    throw SyntaxError(t.pos, what + (t.kind == Tok::End ? " (found end of input)"
                                                        : " (found '" + t.text + "')"));
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  VarId variable() {
    const Token& t = peek();
    if (t.kind != Tok::Var) fail("expected a variable");
    advance();
    std::string_view w = t.text;
    if (w == "y") return VarId::y();
    if (w.size() > 1 && w[0] == 'x' && all_digits(w.substr(1))) return VarId::x(parse_index(t, w.substr(1)));
    if (w.size() > 1 && w[0] == 'z' && all_digits(w.substr(1))) return VarId::z(parse_index(t, w.substr(1)));
    if (w.size() == 1 && ((w[0] >= 'a' && w[0] <= 'w') || w[0] == 'x')) {
      auto it = sugar_.find(w[0]);
      if (it != sugar_.end()) return it->second;
      VarId v = VarId::x(next_sugar_++);
      sugar_.emplace(w[0], v);
      return v;
    }
    throw SyntaxError(t.pos, "unknown variable name '" + t.text + "'");
  }

  // term := sum ; sum := product ('+' product)* ; product := primary ('*' primary)*
  Term term() {
    Term t = product();
    while (accept(Tok::Plus)) t = Term::add(std::move(t), product());
    return t;
  }
  Term product() {
    Term t = primary();
    while (accept(Tok::Star)) t = Term::mul(std::move(t), primary());
    return t;
  }
  Term primary() {
    switch (peek().kind) {
      case Tok::Zero: advance(); return Term::zero();
      case Tok::Var: return Term::var(variable());
      case Tok::Succ: {
        advance();
        expect(Tok::LParen, "'(' after S");
        Term t = term();
        expect(Tok::RParen, "')'");
        return Term::succ(std::move(t));
      }
      case Tok::LParen: {
        advance();
        Term t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      default: fail("expected a term");
    }
  }

  // formula := implication
  Formula formula() { return implication(); }
  Formula implication() {
    Formula f = disjunction();
    if (accept(Tok::Implies)) return Formula::implies(std::move(f), implication());
    return f;
  }
  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disj(std::move(f), conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conj(std::move(f), unary());
    return f;
  }
  Formula unary() {
    switch (peek().kind) {
      case Tok::Not: advance(); return Formula::negate(unary());
      case Tok::Exists:
      case Tok::Forall: return quantifier();
      case Tok::LParen: {
        // Either a parenthesized formula or an atom whose left term starts with '('.
        std::size_t save = pos_;
        auto sugar_save = sugar_;
        auto next_save = next_sugar_;
        try {
          return atom();
        } catch (const SyntaxError&) {
          pos_ = save;
          sugar_ = std::move(sugar_save);
          next_sugar_ = next_save;
        }
        advance();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      default: return atom();
    }
  }
  Formula quantifier() {
    bool is_exists = advance().kind == Tok::Exists;
    const Token& vt = peek();
    VarId v = variable();
    std::optional<Term> bound;
    std::size_t bound_pos = peek().pos;
    if (accept(Tok::Lt)) bound = term();
    expect(Tok::Dot, "'.' after quantifier prefix");
    Formula body = formula();
    if (!bound) return is_exists ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
    if (bound->contains(v))
      throw SyntaxError(bound_pos, "bound term mentions the bound variable " + vt.text);
    return is_exists ? Formula::bdd_exists(v, std::move(*bound), std::move(body))
                     : Formula::bdd_forall(v, std::move(*bound), std::move(body));
  }
  Formula atom() {
    if (peek().kind == Tok::Pred) {
      std::size_t at = peek().pos;
      advance();
      expect(Tok::LParen, "'(' after I");
      Term t = term();
      expect(Tok::RParen, "')'");
      if (lang_ == Language::LA)
        throw FormulaError("predicate I is not part of the arithmetic language (position " +
                           std::to_string(at) + ")");
      return Formula::in_i(std::move(t));
    }
    Term a = term();
    if (accept(Tok::Eq)) return Formula::eq(std::move(a), term());
    if (accept(Tok::Lt)) return Formula::lt(std::move(a), term());
    fail("expected '=' or '<'");
  }

  std::vector<Token> toks_;
  Language lang_;
  std::size_t pos_ = 0;
  std::map<char, VarId> sugar_;
  std::uint32_t next_sugar_ = 1;
};

// Rendering ------------------------------------------------------------------

void render_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::Var: out += t.var().name(); return;
    case Term::Kind::Succ: {
      // Iterate the S-chain so long numerals do not recurse deeply.
      std::size_t depth = 0;
      const Term* cur = &t;
      while (cur->kind() == Term::Kind::Succ) {
        out += "S(";
        ++depth;
        cur = &cur->arg();
      }
      render_term(*cur, out);
      out.append(depth, ')');
      return;
    }
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out += '(';
      render_term(t.lhs(), out);
      out += t.kind() == Term::Kind::Add ? " + " : " * ";
      render_term(t.rhs(), out);
      out += ')';
      return;
  }
}

// True when the rendered text of f ends in a quantifier body, which would
// swallow any connective written after it.
bool ends_open(const Formula& f) {
  if (f.is_quantifier()) return true;
  if (f.kind() == Formula::Kind::Not) return ends_open(f.sub());
  return false;
}

void render_formula(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Lt:
      render_term(f.lhs(), out);
      out += f.kind() == K::Eq ? " = " : " < ";
      render_term(f.rhs(), out);
      return;
    case K::InI:
      out += "I(";
      render_term(f.term(), out);
      out += ')';
      return;
    case K::Not:
      out += "~ ";
      render_formula(f.sub(), out);
      return;
    case K::Or:
    case K::And:
    case K::Implies: {
      out += '(';
      bool wrap = ends_open(f.left());
      if (wrap) out += '(';
      render_formula(f.left(), out);
      if (wrap) out += ')';
      out += f.kind() == K::Or ? " \\/ " : f.kind() == K::And ? " /\\ " : " -> ";
      render_formula(f.right(), out);
      out += ')';
      return;
    }
    case K::Exists:
    case K::Forall:
    case K::BddExists:
    case K::BddForall:
      out += (f.kind() == K::Exists || f.kind() == K::BddExists) ? "exists " : "forall ";
      out += f.var().name();
      if (f.is_bounded_quantifier()) {
        out += " < ";
        render_term(f.bound(), out);
      }
      out += " . ";
      render_formula(f.body(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, Language language) {
  return Parser(tokenize(text), language).formula_to_end();
}

Term parse_term(std::string_view text) { return Parser(tokenize(text), Language::LA).term_to_end(); }

std::string render(const Formula& f) {
  std::string out;
  render_formula(f, out);
  return out;
}

std::string render(const Term& t) {
  std::string out;
  render_term(t, out);
  return out;
}

std::vector<CorpusLine> parse_corpus(std::string_view content, Language language) {
  std::vector<CorpusLine> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == content.size()) break;
      continue;
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    CorpusLine cl;
    cl.line_number = line_no;
    std::size_t semi = line.find(';');
    std::string_view ftext = semi == std::string_view::npos ? line : line.substr(0, semi);
    cl.text = std::string(ftext.substr(ftext.find_first_not_of(" \t")));
    while (!cl.text.empty() && cl.text.back() == ' ') cl.text.pop_back();
    try {
      cl.formula = parse_formula(ftext, language);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.position(), "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const FormulaError& e) {
      throw FormulaError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (semi != std::string_view::npos) {
      cl.has_args = true;
      std::string rest(line.substr(semi + 1));
      for (char& c : rest)
        if (c == ',') c = ' ';
      std::istringstream in(rest);
      std::string tok;
      while (in >> tok) {
        try {
          cl.args.push_back(parse_natural(tok));
        } catch (const std::invalid_argument&) {
          throw SyntaxError(semi + 1, "line " + std::to_string(line_no) + ": bad argument '" + tok + "'");
        }
      }
    }
    out.push_back(std::move(cl));
    if (end == content.size()) break;
  }
  return out;
}

std::vector<CorpusLine> read_corpus_file(const std::string& path, Language language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read corpus file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), language);
}

}  // namespace indisc
