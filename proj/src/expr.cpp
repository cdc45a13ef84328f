#include "tropconic/expr.hpp"

#include <array>
#include <cctype>
#include <optional>

#include "tropconic/error.hpp"

namespace tropconic {

namespace {

struct Token {
  enum Kind { Number, MinusInf, Var, Plus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;  // literal for Number, "X"/"Y"/"Z" for Var
  std::size_t pos;   // byte offset, 0-based
};

[[noreturn]] void fail_at(std::size_t pos, const std::string& msg) {
  throw input_error("parse error at position " + std::to_string(pos + 1) +
                    ": " + msg);
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    const std::size_t at = i_;
    if (i_ >= s_.size()) return {Token::End, "", at};

    // Unicode operators: U+2295 (circled plus), U+2299 (circled dot).
    if (s_.substr(i_, 3) == "\xe2\x8a\x95") {
      i_ += 3;
      return {Token::Plus, "+", at};
    }
    if (s_.substr(i_, 3) == "\xe2\x8a\x99") {
      i_ += 3;
      return {Token::Star, "*", at};
    }

    const char c = s_[i_];
    switch (c) {
      case '+': ++i_; return {Token::Plus, "+", at};
      case '*': ++i_; return {Token::Star, "*", at};
      case '^': ++i_; return {Token::Caret, "^", at};
      case '(': ++i_; return {Token::LParen, "(", at};
      case ')': ++i_; return {Token::RParen, ")", at};
      case 'X':
      case 'Y':
      case 'Z': ++i_; return {Token::Var, std::string(1, c), at};
      default: break;
    }
    if (c == '-') {
      if (s_.substr(i_, 4) == "-inf") {
        i_ += 4;
        return {Token::MinusInf, "-inf", at};
      }
      if (i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))
        return number(at);
      fail_at(at, "stray '-' (write -inf or a negative rational)");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number(at);
    fail_at(at, std::string("unexpected character '") + c + "'");
  }

 private:
  Token number(std::size_t at) {
    std::size_t j = i_;
    if (s_[j] == '-') ++j;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j < s_.size() && s_[j] == '/') {
      ++j;
      if (j >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[j])))
        fail_at(at, "malformed rational (digits expected after '/')");
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    }
    Token t{Token::Number, std::string(s_.substr(i_, j - i_)), at};
    i_ = j;
    return t;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  QuadPoly parse() {
    std::array<std::optional<TropScalar>, 6> acc;
    parse_term(acc);
    while (cur_.kind == Token::Plus) {
      advance();
      parse_term(acc);
    }
    if (cur_.kind != Token::End) fail_at(cur_.pos, "expected '+' or end of input");

    for (Monomial m : {Monomial::XX, Monomial::YY, Monomial::ZZ}) {
      const auto& c = acc[static_cast<int>(m)];
      if (!c || c->is_bottom())
        throw input_error(std::string("the ") + monomial_name(m) +
                          " coefficient must be present and finite");
    }
    QuadPoly p;
    p.xx = acc[0]->value();
    p.yy = acc[1]->value();
    p.zz = acc[2]->value();
    auto mixed = [&](Monomial m) {
      const auto& c = acc[static_cast<int>(m)];
      return c ? *c : TropScalar::bottom();
    };
    p.xy = mixed(Monomial::XY);
    p.yz = mixed(Monomial::YZ);
    p.xz = mixed(Monomial::XZ);
    return p;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void parse_term(std::array<std::optional<TropScalar>, 6>& acc) {
    TropScalar coef(0L);
    if (cur_.kind == Token::Number || cur_.kind == Token::MinusInf ||
        cur_.kind == Token::LParen) {
      coef = parse_coef();
      if (cur_.kind != Token::Star)
        fail_at(cur_.pos, "expected '*' between coefficient and monomial");
      advance();
    }
    Monomial m = parse_mono();
    auto& slot = acc[static_cast<int>(m)];
    slot = slot ? t_add(*slot, coef) : coef;
  }

  TropScalar parse_coef() {
    if (cur_.kind == Token::MinusInf) {
      advance();
      return TropScalar::bottom();
    }
    if (cur_.kind == Token::Number) {
      TropScalar v{parse_rational(cur_.text)};
      advance();
      return v;
    }
    // parenthesized
    advance();
    TropScalar v(0L);
    if (cur_.kind == Token::Number)
      v = TropScalar(parse_rational(cur_.text));
    else if (cur_.kind == Token::MinusInf)
      v = TropScalar::bottom();
    else
      fail_at(cur_.pos, "expected a rational or -inf inside parentheses");
    advance();
    if (cur_.kind != Token::RParen) fail_at(cur_.pos, "expected ')'");
    advance();
    return v;
  }

  Monomial parse_mono() {
    const std::size_t start = cur_.pos;
    std::array<int, 3> deg{0, 0, 0};
    parse_factor(deg);
    while (cur_.kind == Token::Star) {
      advance();
      parse_factor(deg);
    }
    const int total = deg[0] + deg[1] + deg[2];
    if (total != 2)
      fail_at(start, "monomial has degree " + std::to_string(total) +
                         ", expected 2");
    if (deg[0] == 2) return Monomial::XX;
    if (deg[1] == 2) return Monomial::YY;
    if (deg[2] == 2) return Monomial::ZZ;
    if (deg[0] == 1 && deg[1] == 1) return Monomial::XY;
    if (deg[1] == 1 && deg[2] == 1) return Monomial::YZ;
    return Monomial::XZ;
  }

  void parse_factor(std::array<int, 3>& deg) {
    if (cur_.kind != Token::Var) fail_at(cur_.pos, "expected a variable X, Y or Z");
    const int v = cur_.text[0] - 'X';
    advance();
    int e = 1;
    if (cur_.kind == Token::Caret) {
      advance();
      if (cur_.kind != Token::Number || cur_.text.find('/') != std::string::npos ||
          cur_.text[0] == '-' || cur_.text.size() != 1 || cur_.text[0] == '0')
        fail_at(cur_.pos, "expected an exponent of 1 or 2");
      e = cur_.text[0] - '0';
      advance();
    }
    deg[v] += e;
  }

  Lexer lex_;
  Token cur_{Token::End, "", 0};
};

void append_term(std::string& out, bool& first, const Rational& v,
                 const char* name) {
  if (!first) out += " + ";
  first = false;
  if (v != 0) {
    std::string num = format_rational(v);
    out += v < 0 ? "(" + num + ")" : num;
    out += "*";
  }
  out += name;
}

}  // namespace

QuadPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const QuadPoly& p) {
  std::string out;
  bool first = true;
  for (Monomial m : kMonomials) {
    TropScalar c = p.coefficient(m);
    if (c.is_bottom()) continue;
    append_term(out, first, c.value(), monomial_name(m));
  }
  return out;
}

std::string format_linform(const LinForm& f) {
  std::string out;
  bool first = true;
  static constexpr const char* names[3] = {"X", "Y", "Z"};
  for (int i = 1; i <= 3; ++i) {
    const TropScalar& c = f.coefficient(i);
    if (c.is_bottom()) continue;
    append_term(out, first, c.value(), names[i - 1]);
  }
  if (first) out = "-inf";  // the empty form; not produced by factorize
  return out;
}

}  // namespace tropconic
