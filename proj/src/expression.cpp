#include "hetero/expression.hpp"

#include <algorithm>
#include <cctype>

#include "hetero/error.hpp"

namespace hetero {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

class Parser {
 public:
  Parser(std::string_view text, const ExpressionOptions& options)
      : text_(text), options_(options) {
    tokenize();
  }

  KForm parse() {
    KForm value = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, options_.line, options_.column + at.column);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      int col = static_cast<int>(i);
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        tokens_.push_back({Tok::Number, std::string(text_.substr(i, j - i)), col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
          ++j;
        tokens_.push_back({Tok::Ident, std::string(text_.substr(i, j - i)), col});
        i = j;
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '/': kind = Tok::Slash; break;
          case '^': kind = Tok::Caret; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", options_.line,
                             options_.column + col);
        }
        tokens_.push_back({kind, std::string(1, c), col});
        ++i;
      }
    }
    tokens_.push_back({Tok::End, "end of expression", static_cast<int>(text_.size())});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  KForm scalar_form(const Scalar& s) const { return KForm::constant(options_.dim, s); }

  KForm add(const KForm& a, const KForm& b, bool subtract, const Token& at) const {
    if (a.degree() != b.degree())
      fail("cannot add forms of degree " + std::to_string(a.degree()) + " and " +
               std::to_string(b.degree()),
           at);
    return subtract ? a - b : a + b;
  }

  KForm expr() {
    KForm value = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      KForm rhs = term();
      value = add(value, rhs, op.kind == Tok::Minus, op);
    }
    return value;
  }

  KForm term() {
    KForm value = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      KForm rhs = unary();
      if (op.kind == Tok::Star) {
        if (value.degree() == 0) {
          value = value.coefficient(0) * rhs;
        } else if (rhs.degree() == 0) {
          value = rhs.coefficient(0) * value;
        } else {
          fail("use '^' for the wedge product of forms", op);
        }
      } else {
        if (rhs.degree() != 0 || !rhs.coefficient(0).is_constant())
          fail("division is only allowed by a nonzero constant", op);
        Rational d = rhs.coefficient(0).constant_value();
        if (d == 0) fail("division by zero", op);
        value = Scalar(Rational(1 / d)) * value;
      }
    }
    return value;
  }

  KForm unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  KForm power() {
    KForm value = atom();
    while (peek().kind == Tok::Caret) {
      const Token& op = next();
      if (value.degree() == 0 && peek().kind == Tok::Number) {
        const Token& exp = next();
        unsigned long e = std::stoul(exp.text);
        if (e > 64) fail("exponent too large", exp);
        value = scalar_form(value.coefficient(0).pow(static_cast<unsigned>(e)));
      } else {
        KForm rhs = atom();
        if (options_.dim == 0) fail("wedge product outside a form expression", op);
        value = wedge(value, rhs);
      }
    }
    return value;
  }

  KForm atom() {
    const Token& tok = next();
    switch (tok.kind) {
      case Tok::Number:
        return scalar_form(Scalar(Rational(mpz_class(tok.text))));
      case Tok::Ident: {
        if (is_basis_symbol(tok.text)) {
          if (options_.dim == 0) fail("basis form '" + tok.text + "' in a scalar expression", tok);
          std::vector<int> idx;
          for (std::size_t k = 1; k < tok.text.size(); ++k) {
            int i = tok.text[k] - '0';
            if (i < 1 || i > options_.dim)
              fail("frame index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(options_.dim),
                   tok);
            idx.push_back(i);
          }
          return KForm::basis(options_.dim, idx);
        }
        if (options_.declared != nullptr &&
            std::find(options_.declared->begin(), options_.declared->end(), tok.text) ==
                options_.declared->end())
          fail("undeclared parameter '" + tok.text + "'", tok);
        return scalar_form(Scalar::variable(tok.text));
      }
      case Tok::LParen: {
        KForm inside = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek());
        next();
        return inside;
      }
      default:
        fail("unexpected '" + tok.text + "'", tok);
    }
  }

  std::string_view text_;
  const ExpressionOptions& options_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_basis_symbol(std::string_view identifier) {
  if (identifier.size() < 2 || identifier[0] != 'e') return false;
  return std::all_of(identifier.begin() + 1, identifier.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

KForm parse_form_expression(std::string_view text, const ExpressionOptions& options) {
  return Parser(text, options).parse();
}

Scalar parse_scalar(std::string_view text, const ExpressionOptions& options) {
  ExpressionOptions scalar_options = options;
  scalar_options.dim = 0;
  KForm value = Parser(text, scalar_options).parse();
  return value.coefficient(0);
}

Rational parse_rational(std::string_view text) {
  Scalar s = parse_scalar(text);
  if (!s.is_constant()) throw ParseError("expected a rational number", 1, 1);
  return s.constant_value();
}

}  // namespace hetero
