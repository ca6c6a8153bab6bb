#include "gcs/expr.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "gcs/errors.hpp"

namespace gcs {

struct Node {
  Kind kind = Kind::Number;
  FuncKind func = FuncKind::Exp;
  DerivKey key{};
  std::string name;
  Rational value;            // Number value, Product coefficient, Sum constant
  std::vector<Operand> ops;  // Sum terms, Product factors, Power (base, exp), Func (arg, 0)
  std::size_t hash = 0;
  std::uint64_t mask = 0;
};

namespace {

constexpr std::size_t kExpansionLimit = 4096;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t symbol_bit(const Symbol& s) { return std::uint64_t{1} << (fnv1a(s.id()) % 64); }

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& q) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 7);
  h = hash_combine(h, mpz_get_ui(q.get_num_mpz_t()));
  h = hash_combine(h, mpz_sizeinbase(q.get_num_mpz_t(), 2));
  h = hash_combine(h, mpz_get_ui(q.get_den_mpz_t()));
  return h;
}

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_positive_integer(const Rational& q) { return is_integer(q) && sgn(q) > 0; }

Rational qpow(const Rational& base, long n) {
  if (n == 0) return Rational(1);
  if (sgn(base) == 0) {
    if (n < 0) throw DomainError("zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), m);
  Rational r = n > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) throw GcsError("exponent out of range");
  return q.get_num().get_si();
}

std::optional<Rational> exact_root(const Rational& q, unsigned long n) {
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), q.get_num_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), n) == 0) return std::nullopt;
  return Rational(rn, rd);
}

int cmp_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int kind_rank(Kind k) { return static_cast<int>(k); }

}  // namespace

std::string Symbol::id() const {
  switch (type) {
    case Type::Time:
      return "t";
    case Type::Space:
      return "x";
    case Type::Jet:
      return "u[" + std::to_string(key.t) + "," + std::to_string(key.x) + "]";
    case Type::Param:
      return "p:" + name;
  }
  return {};
}

struct ExprBuilder {
  static Expr make(Node&& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
    std::uint64_t mask = 0;
    switch (n.kind) {
      case Kind::Number:
        h = hash_combine(h, hash_rational(n.value));
        break;
      case Kind::Time:
        mask = symbol_bit(Symbol::t());
        break;
      case Kind::Space:
        mask = symbol_bit(Symbol::x());
        break;
      case Kind::Jet:
        h = hash_combine(h, static_cast<std::size_t>(n.key.t) * 131 + static_cast<std::size_t>(n.key.x));
        mask = symbol_bit(Symbol::jet(n.key));
        break;
      case Kind::Param:
        h = hash_combine(h, std::hash<std::string>{}(n.name));
        mask = symbol_bit(Symbol::param(n.name));
        break;
      case Kind::Func:
        h = hash_combine(h, static_cast<std::size_t>(n.func));
        [[fallthrough]];
      case Kind::Power:
      case Kind::Product:
      case Kind::Sum:
        h = hash_combine(h, hash_rational(n.value));
        for (const auto& op : n.ops) {
          h = hash_combine(h, op.expr.hash());
          h = hash_combine(h, hash_rational(op.scalar));
          mask |= op.expr.symbol_mask();
        }
        break;
    }
    n.hash = h;
    n.mask = mask;
    return Expr(std::make_shared<const Node>(std::move(n)));
  }
};

namespace {

Expr make_number(const Rational& q) {
  Node n;
  n.kind = Kind::Number;
  n.value = q;
  return ExprBuilder::make(std::move(n));
}

const Expr& zero_expr() {
  static const Expr z = make_number(Rational(0));
  return z;
}

const Expr& one_expr() {
  static const Expr o = make_number(Rational(1));
  return o;
}

Expr make_raw_power(const Expr& base, const Rational& e) {
  Node n;
  n.kind = Kind::Power;
  n.ops.push_back({base, e});
  return ExprBuilder::make(std::move(n));
}

// Assembles an already merged, sorted factor list without re-normalizing.
Expr make_product_node(const Rational& c, std::vector<Operand> factors) {
  if (sgn(c) == 0) return zero_expr();
  if (factors.empty()) return make_number(c);
  if (c == 1 && factors.size() == 1) {
    if (factors[0].scalar == 1) return factors[0].expr;
    return make_raw_power(factors[0].expr, factors[0].scalar);
  }
  Node n;
  n.kind = Kind::Product;
  n.value = c;
  n.ops = std::move(factors);
  return ExprBuilder::make(std::move(n));
}

Expr strip_coefficient(const Expr& product) {
  auto ops = product.operands();
  return make_product_node(Rational(1), std::vector<Operand>(ops.begin(), ops.end()));
}

struct NumericPower {
  Rational coeff;
  std::optional<Operand> rest;
};

NumericPower numeric_power(const Rational& b, const Rational& e) {
  if (is_integer(e)) return {qpow(b, to_long(e)), std::nullopt};
  if (sgn(b) == 0) {
    if (sgn(e) < 0) throw DomainError("zero raised to a negative power");
    return {Rational(0), std::nullopt};
  }
  if (b == 1) return {Rational(1), std::nullopt};
  if (sgn(b) < 0) return {Rational(1), Operand{make_number(b), e}};
  const Rational fl = floor_of(e);
  const Rational frac = e - fl;
  Rational coeff = qpow(b, to_long(fl));
  const unsigned long q = frac.get_den().get_ui();
  const long p = frac.get_num().get_si();
  if (auto root = exact_root(b, q)) return {coeff * qpow(*root, p), std::nullopt};
  return {coeff, Operand{make_number(b), frac}};
}

void sort_operands(std::vector<Operand>& ops) {
  std::stable_sort(ops.begin(), ops.end(),
                   [](const Operand& a, const Operand& b) { return compare(a.expr, b.expr) < 0; });
}

std::vector<Expr> split_terms(const Expr& e) {
  std::vector<Expr> out;
  if (e.kind() != Kind::Sum) {
    out.push_back(e);
    return out;
  }
  for (const auto& op : e.operands()) out.push_back(op.scalar == 1 ? op.expr : mul(std::vector<Expr>{Expr(op.scalar), op.expr}));
  if (sgn(e.coefficient()) != 0) out.push_back(Expr(e.coefficient()));
  return out;
}

std::size_t term_count(const Expr& sum) {
  return sum.operands().size() + (sgn(sum.coefficient()) != 0 ? 1 : 0);
}

Expr expand_product(const Rational& c, const std::vector<Operand>& factors) {
  std::vector<Operand> rest;
  std::vector<std::pair<Expr, long>> sums;
  for (const auto& f : factors) {
    if (f.expr.kind() == Kind::Sum && is_positive_integer(f.scalar)) {
      sums.emplace_back(f.expr, to_long(f.scalar));
    } else {
      rest.push_back(f);
    }
  }
  std::vector<Expr> acc{make_product_node(c, std::move(rest))};
  for (const auto& [sum, n] : sums) {
    const auto pieces = split_terms(sum);
    for (long k = 0; k < n; ++k) {
      std::vector<Expr> next;
      next.reserve(acc.size() * pieces.size());
      for (const auto& a : acc) {
        for (const auto& p : pieces) next.push_back(mul(std::vector<Expr>{a, p}));
      }
      acc = split_terms(add(next));
    }
  }
  return add(acc);
}

Expr build_product(Rational c, std::vector<Operand> factors) {
  sort_operands(factors);
  std::vector<Operand> merged;
  merged.reserve(factors.size());
  for (auto& f : factors) {
    if (!merged.empty() && merged.back().expr == f.expr) {
      merged.back().scalar += f.scalar;
    } else {
      merged.push_back(std::move(f));
    }
  }

  std::vector<Operand> out;
  out.reserve(merged.size());
  bool needs_restart = false;
  // exp factors collapse into a single exp(sum of arguments).
  std::vector<Expr> exp_args;
  for (auto& m : merged) {
    if (sgn(m.scalar) == 0) continue;
    if (m.expr.is_number()) {
      auto np = numeric_power(m.expr.value(), m.scalar);
      c *= np.coeff;
      if (np.rest) out.push_back(std::move(*np.rest));
      continue;
    }
    // A product base only survives under a non-integer power; once merged
    // exponents become integral it must be distributed again.
    if (m.expr.kind() == Kind::Product && is_integer(m.scalar)) needs_restart = true;
    if (m.expr.kind() == Kind::Func && m.expr.func() == FuncKind::Exp) {
      exp_args.push_back(m.scalar == 1 ? m.expr.arg() : mul(std::vector<Expr>{make_number(m.scalar), m.expr.arg()}));
      if (m.scalar != 1 || exp_args.size() > 1) needs_restart = true;
    }
    out.push_back(std::move(m));
  }
  if (sgn(c) == 0) return zero_expr();

  if (needs_restart) {
    std::vector<Expr> parts{make_number(c)};
    for (const auto& f : out) {
      if (f.expr.kind() == Kind::Func && f.expr.func() == FuncKind::Exp) continue;
      parts.push_back(pow(f.expr, f.scalar));
    }
    if (!exp_args.empty()) parts.push_back(exp(add(exp_args)));
    return mul(parts);
  }

  std::size_t expanded_terms = 1;
  bool expandable = false;
  for (const auto& f : out) {
    if (f.expr.kind() == Kind::Sum && is_positive_integer(f.scalar)) {
      expandable = true;
      const long n = to_long(f.scalar);
      for (long k = 0; k < n && expanded_terms <= kExpansionLimit; ++k) expanded_terms *= term_count(f.expr);
    }
  }
  if (expandable && expanded_terms <= kExpansionLimit) return expand_product(c, out);
  return make_product_node(c, std::move(out));
}

Expr build_sum(const Rational& c, std::vector<Operand> terms) {
  sort_operands(terms);
  std::vector<Operand> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().expr == t.expr) {
      merged.back().scalar += t.scalar;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Operand& op) { return sgn(op.scalar) == 0; });
  if (merged.empty()) return make_number(c);
  if (sgn(c) == 0 && merged.size() == 1) {
    if (merged[0].scalar == 1) return merged[0].expr;
    return mul(std::vector<Expr>{make_number(merged[0].scalar), merged[0].expr});
  }
  Node n;
  n.kind = Kind::Sum;
  n.value = c;
  n.ops = std::move(merged);
  return ExprBuilder::make(std::move(n));
}

int compare_operands(std::span<const Operand> a, std::span<const Operand> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i].expr, b[i].expr); c != 0) return c;
    if (int c = cmp_rational(a[i].scalar, b[i].scalar); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Expr

Expr::Expr() : Expr(zero_expr()) {}
Expr::Expr(int value) : Expr(make_number(Rational(value))) {}
Expr::Expr(long value) : Expr(make_number(Rational(value))) {}
Expr::Expr(const Rational& value) : Expr(make_number(canonical(value))) {}

Expr Expr::number(const Rational& value) { return make_number(canonical(value)); }

Expr Expr::t() {
  static const Expr e = [] {
    Node n;
    n.kind = Kind::Time;
    return ExprBuilder::make(std::move(n));
  }();
  return e;
}

Expr Expr::x() {
  static const Expr e = [] {
    Node n;
    n.kind = Kind::Space;
    return ExprBuilder::make(std::move(n));
  }();
  return e;
}

Expr Expr::jet(DerivKey key) {
  if (key.t < 0 || key.x < 0) throw InvalidArgument("negative derivative order");
  Node n;
  n.kind = Kind::Jet;
  n.key = key;
  return ExprBuilder::make(std::move(n));
}

Expr Expr::param(const std::string& name) {
  if (name.empty()) throw InvalidArgument("empty parameter name");
  Node n;
  n.kind = Kind::Param;
  n.name = name;
  return ExprBuilder::make(std::move(n));
}

Expr Expr::symbol(const Symbol& s) {
  switch (s.type) {
    case Symbol::Type::Time:
      return t();
    case Symbol::Type::Space:
      return x();
    case Symbol::Type::Jet:
      return jet(s.key);
    case Symbol::Type::Param:
      return param(s.name);
  }
  return {};
}

Kind Expr::kind() const noexcept { return node_->kind; }
bool Expr::is_zero() const noexcept { return kind() == Kind::Number && sgn(node_->value) == 0; }
bool Expr::is_one() const noexcept { return kind() == Kind::Number && node_->value == 1; }

const Rational& Expr::value() const {
  assert(kind() == Kind::Number);
  return node_->value;
}
DerivKey Expr::key() const {
  assert(kind() == Kind::Jet);
  return node_->key;
}
const std::string& Expr::name() const {
  assert(kind() == Kind::Param);
  return node_->name;
}
FuncKind Expr::func() const {
  assert(kind() == Kind::Func);
  return node_->func;
}
const Expr& Expr::arg() const {
  assert(kind() == Kind::Func);
  return node_->ops[0].expr;
}
const Expr& Expr::base() const {
  assert(kind() == Kind::Power);
  return node_->ops[0].expr;
}
const Rational& Expr::exponent() const {
  assert(kind() == Kind::Power);
  return node_->ops[0].scalar;
}
const Rational& Expr::coefficient() const { return node_->value; }
std::span<const Operand> Expr::operands() const { return node_->ops; }

std::optional<Symbol> Expr::as_symbol() const {
  switch (kind()) {
    case Kind::Time:
      return Symbol::t();
    case Kind::Space:
      return Symbol::x();
    case Kind::Jet:
      return Symbol::jet(node_->key);
    case Kind::Param:
      return Symbol::param(node_->name);
    default:
      return std::nullopt;
  }
}

std::size_t Expr::hash() const noexcept { return node_->hash; }
std::uint64_t Expr::symbol_mask() const noexcept { return node_->mask; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node() == b.node()) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const Expr& a, const Expr& b) {
  if (a.node() == b.node()) return 0;
  const int ka = kind_rank(a.kind());
  const int kb = kind_rank(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Number:
      return cmp_rational(a.value(), b.value());
    case Kind::Time:
    case Kind::Space:
      return 0;
    case Kind::Jet: {
      const auto ak = a.key(), bk = b.key();
      if (ak == bk) return 0;
      return ak < bk ? -1 : 1;
    }
    case Kind::Param: {
      const int c = a.name().compare(b.name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Func:
      if (a.func() != b.func()) return a.func() < b.func() ? -1 : 1;
      return compare(a.arg(), b.arg());
    case Kind::Power:
      if (int c = compare(a.base(), b.base()); c != 0) return c;
      return cmp_rational(a.exponent(), b.exponent());
    case Kind::Product:
    case Kind::Sum:
      if (int c = compare_operands(a.operands(), b.operands()); c != 0) return c;
      return cmp_rational(a.coefficient(), b.coefficient());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Constructors

Expr add(std::span<const Expr> xs) {
  Rational c = 0;
  std::vector<Operand> terms;
  terms.reserve(xs.size());
  for (const auto& x : xs) {
    switch (x.kind()) {
      case Kind::Number:
        c += x.value();
        break;
      case Kind::Sum:
        c += x.coefficient();
        for (const auto& op : x.operands()) terms.push_back(op);
        break;
      case Kind::Product:
        if (x.coefficient() != 1) {
          terms.push_back({strip_coefficient(x), x.coefficient()});
          break;
        }
        terms.push_back({x, Rational(1)});
        break;
      default:
        terms.push_back({x, Rational(1)});
    }
  }
  return build_sum(c, std::move(terms));
}

Expr mul(std::span<const Expr> fs) {
  Rational c = 1;
  std::vector<Operand> factors;
  factors.reserve(fs.size());
  for (const auto& f : fs) {
    switch (f.kind()) {
      case Kind::Number:
        if (sgn(f.value()) == 0) return zero_expr();
        c *= f.value();
        break;
      case Kind::Product:
        c *= f.coefficient();
        for (const auto& op : f.operands()) factors.push_back(op);
        break;
      case Kind::Power:
        factors.push_back({f.base(), f.exponent()});
        break;
      default:
        factors.push_back({f, Rational(1)});
    }
  }
  return build_product(std::move(c), std::move(factors));
}

Expr pow(const Expr& b, const Rational& exponent) {
  const Rational e = canonical(exponent);
  if (sgn(e) == 0) return one_expr();
  if (e == 1) return b;
  switch (b.kind()) {
    case Kind::Number: {
      auto np = numeric_power(b.value(), e);
      if (!np.rest) return make_number(np.coeff);
      return make_product_node(np.coeff, {*np.rest});
    }
    case Kind::Power:
      return pow(b.base(), b.exponent() * e);
    case Kind::Product: {
      if (is_integer(e)) {
        std::vector<Expr> parts{make_number(qpow(b.coefficient(), to_long(e)))};
        for (const auto& op : b.operands()) parts.push_back(pow(op.expr, op.scalar * e));
        return mul(parts);
      }
      if (sgn(b.coefficient()) > 0 && b.coefficient() != 1) {
        return mul(std::vector<Expr>{pow(make_number(b.coefficient()), e), pow(strip_coefficient(b), e)});
      }
      return make_raw_power(b, e);
    }
    case Kind::Sum:
      if (is_positive_integer(e)) return build_product(Rational(1), {Operand{b, e}});
      return make_raw_power(b, e);
    case Kind::Func:
      if (b.func() == FuncKind::Exp) return exp(mul(std::vector<Expr>{make_number(e), b.arg()}));
      return make_raw_power(b, e);
    default:
      return make_raw_power(b, e);
  }
}

Expr exp(const Expr& a) {
  if (a.is_zero()) return one_expr();
  if (a.kind() == Kind::Func && a.func() == FuncKind::Ln) return a.arg();
  Node n;
  n.kind = Kind::Func;
  n.func = FuncKind::Exp;
  n.ops.push_back({a, Rational(0)});
  return ExprBuilder::make(std::move(n));
}

Expr ln(const Expr& a) {
  if (a.is_one()) return zero_expr();
  if (a.kind() == Kind::Func && a.func() == FuncKind::Exp) return a.arg();
  Node n;
  n.kind = Kind::Func;
  n.func = FuncKind::Ln;
  n.ops.push_back({a, Rational(0)});
  return ExprBuilder::make(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return add(std::vector<Expr>{a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return add(std::vector<Expr>{a, -b}); }
Expr operator-(const Expr& a) { return mul(std::vector<Expr>{make_number(Rational(-1)), a}); }
Expr operator*(const Expr& a, const Expr& b) { return mul(std::vector<Expr>{a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw DomainError("division by literal zero");
  return mul(std::vector<Expr>{a, pow(b, Rational(-1))});
}
Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

// ---------------------------------------------------------------------------
// Traversals

namespace {

using Memo = std::unordered_map<const Node*, Expr>;

template <typename LeafFn>
Expr rebuild(const Expr& e, Memo& memo, std::uint64_t mask, const LeafFn& leaf) {
  if (mask != ~std::uint64_t{0} && (e.symbol_mask() & mask) == 0) return e;
  if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
  Expr out;
  switch (e.kind()) {
    case Kind::Number:
      out = e;
      break;
    case Kind::Time:
    case Kind::Space:
    case Kind::Jet:
    case Kind::Param:
      out = leaf(e);
      break;
    case Kind::Func: {
      Expr a = rebuild(e.arg(), memo, mask, leaf);
      out = e.func() == FuncKind::Exp ? exp(a) : ln(a);
      break;
    }
    case Kind::Power:
      out = pow(rebuild(e.base(), memo, mask, leaf), e.exponent());
      break;
    case Kind::Product: {
      std::vector<Expr> parts{Expr(e.coefficient())};
      for (const auto& op : e.operands()) parts.push_back(pow(rebuild(op.expr, memo, mask, leaf), op.scalar));
      out = mul(parts);
      break;
    }
    case Kind::Sum: {
      std::vector<Expr> parts{Expr(e.coefficient())};
      for (const auto& op : e.operands()) {
        parts.push_back(mul(std::vector<Expr>{Expr(op.scalar), rebuild(op.expr, memo, mask, leaf)}));
      }
      out = add(parts);
      break;
    }
  }
  memo.emplace(e.node(), out);
  return out;
}

Expr diff_impl(const Expr& e, const Symbol& s, std::uint64_t bit, Memo& memo) {
  if ((e.symbol_mask() & bit) == 0) return zero_expr();
  if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
  Expr out;
  switch (e.kind()) {
    case Kind::Number:
      out = zero_expr();
      break;
    case Kind::Time:
    case Kind::Space:
    case Kind::Jet:
    case Kind::Param:
      out = (*e.as_symbol() == s) ? one_expr() : zero_expr();
      break;
    case Kind::Func: {
      Expr da = diff_impl(e.arg(), s, bit, memo);
      if (da.is_zero()) {
        out = zero_expr();
      } else if (e.func() == FuncKind::Exp) {
        out = e * da;
      } else {
        out = da * pow(e.arg(), Rational(-1));
      }
      break;
    }
    case Kind::Power: {
      Expr db = diff_impl(e.base(), s, bit, memo);
      if (db.is_zero()) {
        out = zero_expr();
      } else {
        out = mul(std::vector<Expr>{Expr(e.exponent()), pow(e.base(), e.exponent() - 1), db});
      }
      break;
    }
    case Kind::Product: {
      const auto ops = e.operands();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        Expr d = diff_impl(ops[i].expr, s, bit, memo);
        if (d.is_zero()) continue;
        std::vector<Expr> parts{Expr(e.coefficient() * ops[i].scalar), pow(ops[i].expr, ops[i].scalar - 1), d};
        for (std::size_t j = 0; j < ops.size(); ++j) {
          if (j != i) parts.push_back(pow(ops[j].expr, ops[j].scalar));
        }
        terms.push_back(mul(parts));
      }
      out = add(terms);
      break;
    }
    case Kind::Sum: {
      std::vector<Expr> terms;
      for (const auto& op : e.operands()) {
        Expr d = diff_impl(op.expr, s, bit, memo);
        if (!d.is_zero()) terms.push_back(mul(std::vector<Expr>{Expr(op.scalar), d}));
      }
      out = add(terms);
      break;
    }
  }
  memo.emplace(e.node(), out);
  return out;
}

template <typename Fn>
void visit_unique(const Expr& e, std::unordered_set<const Node*>& seen, const Fn& fn) {
  if (!seen.insert(e.node()).second) return;
  fn(e);
  switch (e.kind()) {
    case Kind::Func:
      visit_unique(e.arg(), seen, fn);
      break;
    case Kind::Power:
      visit_unique(e.base(), seen, fn);
      break;
    case Kind::Product:
    case Kind::Sum:
      for (const auto& op : e.operands()) visit_unique(op.expr, seen, fn);
      break;
    default:
      break;
  }
}

}  // namespace

Expr normalize(const Expr& e) {
  Memo memo;
  return rebuild(e, memo, ~std::uint64_t{0}, [](const Expr& leaf) { return leaf; });
}

Expr diff(const Expr& e, const Symbol& s) {
  Memo memo;
  return diff_impl(e, s, symbol_bit(s), memo);
}

Expr diff(const Expr& e, const Symbol& s, int times) {
  Expr out = e;
  for (int i = 0; i < times && !out.is_zero(); ++i) out = diff(out, s);
  return out;
}

Expr substitute(const Expr& e, const Substitution& bindings) {
  if (bindings.empty()) return e;
  std::uint64_t mask = 0;
  for (const auto& [sym, _] : bindings) mask |= symbol_bit(sym);
  Memo memo;
  return rebuild(e, memo, mask, [&](const Expr& leaf) {
    auto it = bindings.find(*leaf.as_symbol());
    return it == bindings.end() ? leaf : it->second;
  });
}

std::set<Symbol> free_symbols(const Expr& e) {
  std::set<Symbol> out;
  std::unordered_set<const Node*> seen;
  visit_unique(e, seen, [&](const Expr& n) {
    if (auto s = n.as_symbol()) out.insert(*s);
  });
  return out;
}

bool depends_on(const Expr& e, const Symbol& s) {
  if ((e.symbol_mask() & symbol_bit(s)) == 0) return false;
  return free_symbols(e).contains(s);
}

std::set<DerivKey> jet_keys(const Expr& e) {
  std::set<DerivKey> out;
  for (const auto& s : free_symbols(e)) {
    if (s.is_jet()) out.insert(s.key);
  }
  return out;
}

int max_x_order(const Expr& e) {
  int best = -1;
  for (const auto& k : jet_keys(e)) {
    if (k.t == 0) best = std::max(best, k.x);
  }
  return best;
}

bool has_t_derivatives(const Expr& e) {
  for (const auto& k : jet_keys(e)) {
    if (k.t > 0) return true;
  }
  return false;
}

std::size_t tree_size(const Expr& e) {
  std::size_t n = 1;
  switch (e.kind()) {
    case Kind::Func:
      n += tree_size(e.arg());
      break;
    case Kind::Power:
      n += tree_size(e.base());
      break;
    case Kind::Product:
    case Kind::Sum:
      for (const auto& op : e.operands()) n += tree_size(op.expr);
      break;
    default:
      break;
  }
  return n;
}

}  // namespace gcs
