#include "cstar/expr.hpp"

#include <cctype>
#include <string>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

struct Token {
  enum class Kind { Rational, I, R2, Gen, Plus, Minus, Star, Prime, LParen, RParen, End };
  Kind kind;
  Rational value;  // Rational
  long gen_index;  // Gen (validated against n later, so kept wide)
  int line, col;
};

class Lexer {
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string &what, int line, int col) const {
    throw SyntaxError(what + " at " + std::to_string(line) + ":" +
                      std::to_string(col));
  }

  long read_digits(int line, int col) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected digits", line, col);
    long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000L)
        fail("numeric literal too large", line, col);
      advance();
    }
    return v;
  }

public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
    Token tok;
    tok.line = line_;
    tok.col = col_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::Kind::End;
      return tok;
    }
    const char c = text_[pos_];
    switch (c) {
    case '+': advance(); tok.kind = Token::Kind::Plus; return tok;
    case '-': advance(); tok.kind = Token::Kind::Minus; return tok;
    case '*': advance(); tok.kind = Token::Kind::Star; return tok;
    case '\'': advance(); tok.kind = Token::Kind::Prime; return tok;
    case '(': advance(); tok.kind = Token::Kind::LParen; return tok;
    case ')': advance(); tok.kind = Token::Kind::RParen; return tok;
    default: break;
    }
    if (c == 'i') {
      advance();
      tok.kind = Token::Kind::I;
      return tok;
    }
    if (c == 'r') {
      advance();
      if (pos_ >= text_.size() || text_[pos_] != '2')
        fail("expected 'r2'", tok.line, tok.col);
      advance();
      tok.kind = Token::Kind::R2;
      return tok;
    }
    if (c == 's') {
      advance();
      tok.kind = Token::Kind::Gen;
      tok.gen_index = read_digits(tok.line, tok.col);
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = read_digits(tok.line, tok.col);
      long den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        advance();
        den = read_digits(tok.line, tok.col);
        if (den == 0)
          fail("rational with zero denominator", tok.line, tok.col);
      }
      tok.kind = Token::Kind::Rational;
      tok.value = Rational(num, den);
      return tok;
    }
    fail(std::string("unexpected character '") + c + "'", tok.line, tok.col);
  }
};

class Parser {
  Lexer lexer_;
  Token current_;
  int n_;

  [[noreturn]] void fail(const std::string &what) const {
    throw SyntaxError(what + " at " + std::to_string(current_.line) + ":" +
                      std::to_string(current_.col));
  }

  void bump() { current_ = lexer_.next(); }

  bool accept(Token::Kind k) {
    if (current_.kind != k)
      return false;
    bump();
    return true;
  }

  Expr atom() {
    switch (current_.kind) {
    case Token::Kind::Rational: {
      Expr e;
      e.kind = Expr::Kind::Scalar;
      e.value = ExactScalar(current_.value);
      bump();
      return e;
    }
    case Token::Kind::I: {
      Expr e;
      e.kind = Expr::Kind::Scalar;
      e.value = ExactScalar::i();
      bump();
      return e;
    }
    case Token::Kind::R2: {
      Expr e;
      e.kind = Expr::Kind::Scalar;
      e.value = ExactScalar::sqrt2();
      bump();
      return e;
    }
    case Token::Kind::Gen: {
      if (current_.gen_index < 1 || current_.gen_index > n_)
        throw IndexOutOfRange("generator s" +
                              std::to_string(current_.gen_index) +
                              " outside 1.." + std::to_string(n_));
      Expr e;
      e.kind = Expr::Kind::Generator;
      e.index = static_cast<int>(current_.gen_index);
      bump();
      return e;
    }
    case Token::Kind::LParen: {
      bump();
      Expr e = element();
      if (!accept(Token::Kind::RParen))
        fail("expected ')'");
      return e;
    }
    default:
      fail("expected a scalar, generator or '('");
    }
  }

  Expr factor() {
    Expr e = atom();
    while (accept(Token::Kind::Prime)) {
      Expr adj;
      adj.kind = Expr::Kind::Adjoint;
      adj.children.push_back(std::move(e));
      e = std::move(adj);
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (accept(Token::Kind::Star)) {
      Expr prod;
      prod.kind = Expr::Kind::Product;
      prod.children.push_back(std::move(e));
      prod.children.push_back(factor());
      e = std::move(prod);
    }
    return e;
  }

  Expr element() {
    bool negate = accept(Token::Kind::Minus);
    Expr e = term();
    if (negate) {
      Expr neg;
      neg.kind = Expr::Kind::Negate;
      neg.children.push_back(std::move(e));
      e = std::move(neg);
    }
    while (true) {
      if (accept(Token::Kind::Plus)) {
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        sum.children.push_back(std::move(e));
        sum.children.push_back(term());
        e = std::move(sum);
      } else if (accept(Token::Kind::Minus)) {
        Expr diff;
        diff.kind = Expr::Kind::Difference;
        diff.children.push_back(std::move(e));
        diff.children.push_back(term());
        e = std::move(diff);
      } else {
        return e;
      }
    }
  }

public:
  Parser(std::string_view text, int n) : lexer_(text), n_(n) {
    bump();
  }

  Expr parse_all() {
    Expr e = element();
    if (current_.kind != Token::Kind::End)
      fail("trailing input");
    return e;
  }
};

} // namespace

Expr parse(std::string_view text, int n) {
  if (n < 2)
    throw ConfigError("alphabet size must be at least 2");
  return Parser(text, n).parse_all();
}

CuntzElement evaluate(const Expr &expr, int n) {
  switch (expr.kind) {
  case Expr::Kind::Scalar:
    return CuntzElement::scalar(n, expr.value);
  case Expr::Kind::Generator:
    return CuntzElement::generator(n, expr.index);
  case Expr::Kind::Sum:
    return evaluate(expr.children[0], n) + evaluate(expr.children[1], n);
  case Expr::Kind::Difference:
    return evaluate(expr.children[0], n) - evaluate(expr.children[1], n);
  case Expr::Kind::Product:
    return evaluate(expr.children[0], n) * evaluate(expr.children[1], n);
  case Expr::Kind::Adjoint:
    return evaluate(expr.children[0], n).adjoint();
  case Expr::Kind::Negate:
    return -evaluate(expr.children[0], n);
  }
  throw std::logic_error("unreachable expression kind");
}

CuntzElement parse_element(std::string_view text, int n) {
  return evaluate(parse(text, n), n).normalized();
}

} // namespace cstar
