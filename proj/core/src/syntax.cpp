#include "gcs/syntax.hpp"

#include <cctype>
#include <vector>

#include "gcs/errors.hpp"

namespace gcs {

namespace {

// ---------------------------------------------------------------------------
// Printing

enum Prec { kSum = 1, kProduct = 2, kPower = 3, kAtom = 4 };

struct Printer {
  std::string_view depvar;

  static std::string rational(const Rational& q) { return q.get_str(); }

  static std::string exponent(const Rational& e) {
    if (e.get_den() == 1 && sgn(e) > 0) return "^" + e.get_str();
    return "^(" + e.get_str() + ")";
  }

  int precedence(const Expr& e) const {
    switch (e.kind()) {
      case Kind::Number:
        return (sgn(e.value()) >= 0 && e.value().get_den() == 1) ? kAtom : kSum;
      case Kind::Sum:
        return kSum;
      case Kind::Product:
        return kProduct;
      case Kind::Power:
        return sgn(e.exponent()) < 0 ? kProduct : kPower;
      default:
        return kAtom;
    }
  }

  std::string wrap(const Expr& e, int need) const {
    std::string s = print(e);
    return precedence(e) < need ? "(" + s + ")" : s;
  }

  // base^e for e > 0.
  std::string power(const Expr& base, const Rational& e) const {
    if (e == 1) return wrap(base, kProduct + 1);
    return wrap(base, kAtom) + exponent(e);
  }

  std::string product_body(const Rational& c, std::span<const Operand> factors) const {
    std::vector<std::string> num, den;
    for (const auto& f : factors) {
      // 1/(a + b)^2 would reparse with the square expanded.
      const bool keep_negative = f.expr.kind() == Kind::Sum && f.scalar.get_den() == 1 && f.scalar < -1;
      if (sgn(f.scalar) > 0 || keep_negative) {
        num.push_back(power(f.expr, f.scalar));
      } else {
        den.push_back(power(f.expr, -f.scalar));
      }
    }
    std::string s;
    const Rational mag = abs(c);
    if (mag != 1 || num.empty()) s = rational(mag);
    for (const auto& n : num) {
      if (!s.empty()) s += "*";
      s += n;
    }
    for (const auto& d : den) s += "/" + d;
    return sgn(c) < 0 ? "-" + s : s;
  }

  std::string term(const Rational& c, const Expr& t) const {
    if (t.kind() == Kind::Product) return product_body(c * t.coefficient(), t.operands());
    if (t.kind() == Kind::Power) {
      const Operand op{t.base(), t.exponent()};
      return product_body(c, std::span<const Operand>(&op, 1));
    }
    const Operand op{t, Rational(1)};
    return product_body(c, std::span<const Operand>(&op, 1));
  }

  std::string print(const Expr& e) const {
    switch (e.kind()) {
      case Kind::Number:
        return rational(e.value());
      case Kind::Time:
        return "t";
      case Kind::Space:
        return "x";
      case Kind::Jet:
      case Kind::Param:
        return symbol_name(*e.as_symbol(), depvar);
      case Kind::Func:
        return std::string(e.func() == FuncKind::Exp ? "exp(" : "ln(") + print(e.arg()) + ")";
      case Kind::Power:
      case Kind::Product:
        return term(Rational(1), e);
      case Kind::Sum: {
        std::string s;
        bool first = true;
        auto emit = [&](const std::string& piece) {
          if (first) {
            s = piece;
            first = false;
          } else if (!piece.empty() && piece[0] == '-') {
            s += " - " + piece.substr(1);
          } else {
            s += " + " + piece;
          }
        };
        for (const auto& op : e.operands()) emit(term(op.scalar, op.expr));
        if (sgn(e.coefficient()) != 0) emit(rational(e.coefficient()));
        return s;
      }
    }
    return {};
  }
};

// ---------------------------------------------------------------------------
// Parsing

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), opts_(options) {}

  Expr run() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return add(terms);
  }

  Expr term() {
    Expr acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        Expr d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        break;
      }
    }
    return acc;
  }

  Expr factor() {
    if (accept('-')) return -factor();
    const std::size_t at = pos_;
    Expr b = base();
    if (accept('^')) {
      const Rational e = exponent();
      try {
        return pow(b, e);
      } catch (const DomainError& err) {
        throw ParseError(err.what(), at);
      }
    }
    return b;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Rational exponent() {
    if (accept('(')) {
      const bool neg = accept('-');
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator in exponent");
      }
      expect(')');
      Rational q(neg ? mpz_class(-num) : num, den);
      q.canonicalize();
      return q;
    }
    const bool neg = accept('-');
    mpz_class n = integer();
    return Rational(neg ? mpz_class(-n) : n);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr base() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr(Rational(integer()));
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      if (c == '\0') fail("unexpected end of input");
      fail(std::string("unexpected character '") + c + "'");
    }
    const std::string id = identifier();
    if (id == "exp" || id == "ln") {
      expect('(');
      Expr a = expr();
      expect(')');
      return id == "exp" ? exp(a) : ln(a);
    }
    if (id == "t") return Expr::t();
    if (id == "x") return Expr::x();
    if (id == opts_.depvar) {
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected derivative order after '_'");
        }
        const mpz_class k = integer();
        if (!k.fits_sint_p()) fail("derivative order too large");
        return Expr::u(static_cast<int>(k.get_si()));
      }
      return Expr::u(0);
    }
    // A jet-like name of some other variable, e.g. u_1 while depvar is v.
    if (pos_ < text_.size() && text_[pos_] == '_') {
      const std::size_t start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      throw UnknownIdentifierError(id + "_" + std::string(text_.substr(start, pos_ - start)), at);
    }
    if (peek() == '(') throw ParseError("unknown function '" + id + "'", at);
    if (opts_.parameters && !opts_.parameters->contains(id)) throw UnknownIdentifierError(id, at);
    return Expr::param(id);
  }

  std::string_view text_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_reserved_name(std::string_view name) { return name == "t" || name == "x" || name == "exp" || name == "ln"; }

Expr parse(std::string_view text, const ParseOptions& options) {
  if (options.depvar.empty() || is_reserved_name(options.depvar)) {
    throw InvalidArgument("invalid dependent-variable name '" + options.depvar + "'");
  }
  for (char c : options.depvar) {
    if (!std::isalnum(static_cast<unsigned char>(c))) throw InvalidArgument("invalid dependent-variable name");
  }
  return Parser(text, options).run();
}

Expr parse(std::string_view text, std::string_view depvar) {
  ParseOptions opts;
  opts.depvar = std::string(depvar);
  return parse(text, opts);
}

std::string to_string(const Expr& e, std::string_view depvar) { return Printer{depvar}.print(e); }

std::string symbol_name(const Symbol& s, std::string_view depvar) {
  switch (s.type) {
    case Symbol::Type::Time:
      return "t";
    case Symbol::Type::Space:
      return "x";
    case Symbol::Type::Param:
      return s.name;
    case Symbol::Type::Jet:
      if (s.key.t == 0) {
        if (s.key.x == 0) return std::string(depvar);
        return std::string(depvar) + "_" + std::to_string(s.key.x);
      }
      return std::string(depvar) + "_{" + std::to_string(s.key.t) + "," + std::to_string(s.key.x) + "}";
  }
  return {};
}

}  // namespace gcs
