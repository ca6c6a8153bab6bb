#pragma once

// Immutable symbolic expressions over t, x, jet variables u_{a,b} and named
// parameters, with exact rational coefficients and exponents.
//
// Every constructor returns a tree in normal form:
//   * sums and products are flattened and sorted by a fixed total order,
//   * like terms / equal bases are merged (x^a * x^b -> x^(a+b)),
//   * numeric parts are folded into a single rational coefficient,
//   * products containing sums raised to positive integer powers are expanded.
// Nodes never change after construction, so Exprs are cheap to copy and safe
// to share between threads.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gcs {

using Rational = mpq_class;

// Multiindex of a jet variable: t-order and x-order.
struct DerivKey {
  int t = 0;
  int x = 0;

  constexpr int order() const noexcept { return t + x; }
  friend constexpr auto operator<=>(const DerivKey&, const DerivKey&) = default;
};

enum class Kind : std::uint8_t { Number, Time, Space, Jet, Param, Func, Power, Product, Sum };
enum class FuncKind : std::uint8_t { Exp, Ln };

// A differentiation / substitution / evaluation variable.
struct Symbol {
  enum class Type : std::uint8_t { Time, Space, Jet, Param };

  Type type = Type::Time;
  DerivKey key{};
  std::string name;

  static Symbol t() { return {Type::Time, {}, {}}; }
  static Symbol x() { return {Type::Space, {}, {}}; }
  static Symbol jet(DerivKey k) { return {Type::Jet, k, {}}; }
  static Symbol u(int k = 0) { return jet({0, k}); }
  static Symbol param(std::string n) { return {Type::Param, {}, std::move(n)}; }

  bool is_jet() const noexcept { return type == Type::Jet; }
  bool is_param() const noexcept { return type == Type::Param; }

  // Stable identifier independent of the dependent-variable name; used to
  // derive per-variable random streams.
  std::string id() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Node;
class Expr;

// A (expression, rational) pair. In a Sum it is (term, coefficient); in a
// Product or Power it is (base, exponent).
struct Operand;

class Expr {
 public:
  Expr();  // the literal 0
  Expr(int value);
  Expr(long value);
  explicit Expr(const Rational& value);

  static Expr number(const Rational& value);
  static Expr t();
  static Expr x();
  static Expr jet(DerivKey key);
  static Expr u(int k = 0) { return jet({0, k}); }
  static Expr param(const std::string& name);
  static Expr symbol(const Symbol& s);

  Kind kind() const noexcept;
  bool is_number() const noexcept { return kind() == Kind::Number; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Kind-specific accessors (precondition: matching kind).
  const Rational& value() const;            // Number
  DerivKey key() const;                     // Jet
  const std::string& name() const;          // Param
  FuncKind func() const;                    // Func
  const Expr& arg() const;                  // Func
  const Expr& base() const;                 // Power
  const Rational& exponent() const;         // Power
  const Rational& coefficient() const;      // Product coefficient, Sum constant
  std::span<const Operand> operands() const;  // Sum terms, Product factors

  std::optional<Symbol> as_symbol() const;

  std::size_t hash() const noexcept;
  std::uint64_t symbol_mask() const noexcept;
  const Node* node() const noexcept { return node_.get(); }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend struct ExprBuilder;
};

struct Operand {
  Expr expr;
  Rational scalar;
};

// Total structural order used for canonical sorting; 0 iff structurally equal.
int compare(const Expr& a, const Expr& b);

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

Expr add(std::span<const Expr> terms);
Expr mul(std::span<const Expr> factors);
Expr pow(const Expr& base, const Rational& exponent);
Expr exp(const Expr& arg);
Expr ln(const Expr& arg);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr& operator+=(Expr& a, const Expr& b);
Expr& operator-=(Expr& a, const Expr& b);
Expr& operator*=(Expr& a, const Expr& b);

// Rebuilds the tree bottom-up through the normalizing constructors.
Expr normalize(const Expr& e);

// Exact partial derivative; every other symbol is held fixed.
Expr diff(const Expr& e, const Symbol& s);
Expr diff(const Expr& e, const Symbol& s, int times);

using Substitution = std::map<Symbol, Expr>;

// Simultaneous replacement of symbols.
Expr substitute(const Expr& e, const Substitution& bindings);

std::set<Symbol> free_symbols(const Expr& e);
bool depends_on(const Expr& e, const Symbol& s);

// Jet variables occurring in e.
std::set<DerivKey> jet_keys(const Expr& e);

// Largest x-order k of a pure x-derivative u_{0,k} in e, or -1 if none.
int max_x_order(const Expr& e);
bool has_t_derivatives(const Expr& e);

// Number of nodes in the tree (shared subtrees counted once per occurrence).
std::size_t tree_size(const Expr& e);

}  // namespace gcs
