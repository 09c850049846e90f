#include "bilip/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "bilip/errors.hpp"

namespace bilip {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  Lexer(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      const int col = column_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        out.push_back({Tok::number, std::string(text_.substr(pos_, end - pos_)), line_, col});
        advance(end - pos_);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
          ++end;
        out.push_back({Tok::ident, std::string(text_.substr(pos_, end - pos_)), line_, col});
        advance(end - pos_);
      } else if (text_.substr(pos_, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
        out.push_back({Tok::minus, "-", line_, col});
        advance(3);
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::plus; break;
          case '-': kind = Tok::minus; break;
          case '*': kind = Tok::star; break;
          case '/': kind = Tok::slash; break;
          case '^': kind = Tok::caret; break;
          case '(': kind = Tok::lparen; break;
          case ')': kind = Tok::rparen; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
        }
        out.push_back({kind, std::string(1, c), line_, col});
        advance(1);
      }
    }
    out.push_back({Tok::end, "", line_, column_});
    return out;
  }

 private:
  void advance(std::size_t n) {
    pos_ += n;
    column_ += static_cast<int>(n);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Ring& ring) : toks_(std::move(tokens)), ring_(ring) {}

  Polynomial parse() {
    if (peek().kind == Tok::end) fail("empty polynomial");
    Polynomial p = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  Polynomial expr() {
    Polynomial acc = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Polynomial rhs = product();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  bool starts_factor() const {
    const Tok k = peek().kind;
    return k == Tok::number || k == Tok::ident || k == Tok::lparen;
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (true) {
      if (peek().kind == Tok::star) {
        next();
        acc *= unary();
      } else if (peek().kind == Tok::slash) {
        next();
        const Token& at = peek();
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division only by a nonzero constant", at.line, at.column);
        acc *= Rational(1 / d.terms().begin()->second);
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (peek().kind == Tok::minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind == Tok::caret) {
      next();
      if (peek().kind != Tok::number) fail("exponent must be a non-negative integer");
      const Token t = next();
      if (t.text.size() > 4) throw ParseError("exponent too large", t.line, t.column);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Polynomial primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::number:
        next();
        return Polynomial::constant(ring_, Rational(Integer(t.text)));
      case Tok::ident: {
        next();
        auto idx = ring_.index_of(t.text);
        if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
        return Polynomial::variable(ring_, *idx);
      }
      case Tok::lparen: {
        next();
        Polynomial inner = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        next();
        return inner;
      }
      default:
        fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Ring& ring_;
};

struct Chunk {
  std::string text;
  int line;
  int column;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return Parser(Lexer(text, 1, 1).run(), ring).parse();
}

ParsedInput parse_input(std::string_view text) {
  std::vector<Chunk> chunks;
  std::optional<std::vector<std::string>> header;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string stripped = trim(line);
    if (stripped.rfind("vars:", 0) == 0) {
      if (header || !chunks.empty()) throw ParseError("'vars:' must come first and only once", line_no, 1);
      std::vector<std::string> names;
      std::string list = stripped.substr(5);
      std::replace(list.begin(), list.end(), ',', ' ');
      std::size_t p = 0;
      while (p < list.size()) {
        while (p < list.size() && list[p] == ' ') ++p;
        std::size_t q = p;
        while (q < list.size() && list[q] != ' ') ++q;
        if (q > p) names.push_back(list.substr(p, q - p));
        p = q;
      }
      for (const auto& n : names)
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
          throw ParseError("bad variable name '" + n + "'", line_no, 1);
      header = names;
    } else if (!stripped.empty()) {
      std::size_t piece_start = 0;
      while (piece_start <= line.size()) {
        std::size_t semi = line.find(';', piece_start);
        if (semi == std::string_view::npos) semi = line.size();
        std::string_view piece = line.substr(piece_start, semi - piece_start);
        if (!trim(piece).empty())
          chunks.push_back({std::string(piece), line_no, static_cast<int>(piece_start) + 1});
        piece_start = semi + 1;
      }
    }
    start = end + 1;
  }
  if (chunks.empty()) throw ParseError("no polynomial found", line_no, 1);

  std::vector<std::vector<Token>> lexed;
  std::set<std::string> seen;
  for (const auto& c : chunks) {
    lexed.push_back(Lexer(c.text, c.line, c.column).run());
    for (const auto& t : lexed.back())
      if (t.kind == Tok::ident) seen.insert(t.text);
  }
  Ring ring = header ? Ring(*header) : Ring(std::vector<std::string>(seen.begin(), seen.end()));
  ParsedInput out{ring, {}};
  for (auto& toks : lexed) out.polynomials.push_back(Parser(std::move(toks), out.ring).parse());
  return out;
}

}  // namespace bilip
