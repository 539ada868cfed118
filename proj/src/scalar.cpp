#include "logcv/scalar.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "logcv/poly.hpp"

namespace logcv {
namespace {

constexpr int kMaxJointConductor = 1024;

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

int conductor_of(const Scalar& x) {
  switch (x.tower()) {
    case Tower::Rational:
      return 0;
    case Tower::Quadratic:
      return sqrt_conductor(x.quadratic().d);
    case Tower::Cyclotomic:
      return x.cyclotomic().s;
  }
  return 0;
}

QPoly to_field(const Scalar& x, int target) {
  const auto& field = real_cyclotomic_field(target);
  switch (x.tower()) {
    case Tower::Rational: {
      QPoly p{x.rational()};
      poly_trim(p);
      return p;
    }
    case Tower::Quadratic: {
      const auto& q = x.quadratic();
      auto root = sqrt_in_field(q.d, target);
      if (!root)
        throw IncompatibleTowers("sqrt(" + std::to_string(q.d) +
                                 ") is not available in conductor " +
                                 std::to_string(target));
      return poly_add(QPoly{q.a}, poly_scale(*root, q.b));
    }
    case Tower::Cyclotomic: {
      const auto& c = x.cyclotomic();
      if (c.s == target) return c.coeffs;
      return field.compose(c.coeffs, field.dickson(target / c.s));
    }
  }
  return {};
}

Scalar quadratic_arith(const Scalar& x, const Scalar& y, ArithOp op) {
  long d = x.tower() == Tower::Quadratic ? x.quadratic().d : y.quadratic().d;
  auto parts = [d](const Scalar& v) -> std::pair<Rational, Rational> {
    if (v.is_rational()) return {v.rational(), Rational(0)};
    if (v.quadratic().d != d)
      throw IncompatibleTowers("cannot mix sqrt(" + std::to_string(d) + ") and sqrt(" +
                               std::to_string(v.quadratic().d) + ")");
    return {v.quadratic().a, v.quadratic().b};
  };
  auto [a1, b1] = parts(x);
  auto [a2, b2] = parts(y);
  switch (op) {
    case ArithOp::Add:
      return Scalar::quadratic(a1 + a2, b1 + b2, d);
    case ArithOp::Sub:
      return Scalar::quadratic(a1 - a2, b1 - b2, d);
    case ArithOp::Mul:
      return Scalar::quadratic(a1 * a2 + d * b1 * b2, a1 * b2 + a2 * b1, d);
    case ArithOp::Div: {
      Rational norm = a2 * a2 - d * b2 * b2;
      return Scalar::quadratic((a1 * a2 - d * b1 * b2) / norm, (b1 * a2 - a1 * b2) / norm,
                               d);
    }
  }
  return {};
}

// Recursive-descent parser for the textual encoding.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*'))
        v = v * unary();
      else if (accept('/'))
        v = v / unary();
      else
        return v;
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  long integer_arg() {
    Scalar v = expr();
    if (!v.is_integer() || !v.rational().get_num().fits_slong_p())
      fail("expected a machine integer");
    return v.rational().get_num().get_si();
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
    std::string name = identifier();
    expect('(');
    if (name == "sqrt") {
      Scalar v = expr();
      expect(')');
      if (!v.is_rational() || sgn(v.rational()) < 0) fail("sqrt needs a rational >= 0");
      const Rational& q = v.rational();
      return Scalar::sqrt(q.get_num() * q.get_den()) / Scalar(Rational(q.get_den()));
    }
    if (name == "cos2pi") {
      long r = integer_arg();
      expect(',');
      long s = integer_arg();
      expect(')');
      return cos2pi(r, s);
    }
    if (name == "poly") {
      skip_ws();
      if (identifier() != "t") fail("expected variable t");
      expect(';');
      QPoly coeffs;
      do {
        Scalar v = expr();
        if (!v.is_rational()) fail("poly coefficients must be rational");
        coeffs.push_back(v.rational());
      } while (accept(','));
      expect(')');
      expect('@');
      skip_ws();
      Scalar s = number();
      if (!s.is_integer()) fail("conductor must be an integer");
      return Scalar::cyclotomic(static_cast<int>(s.rational().get_num().get_si()),
                                std::move(coeffs));
    }
    fail("unknown function '" + name + "'");
  }

  Scalar number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    Integer whole(std::string(text_.substr(start, pos_ - start)));
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (fs == pos_) fail("expected fraction digits");
      std::string digits(text_.substr(fs, pos_ - fs));
      Integer frac(digits);
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits.size());
      return Scalar(Rational(whole * scale + frac, scale));
    }
    return Scalar(Rational(whole));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar::Scalar(Rational x) : v_(canonical(std::move(x))) {}

Scalar Scalar::quadratic(Rational a, Rational b, long d) {
  a.canonicalize();
  b.canonicalize();
  if (d < 0) throw DomainError("quadratic extension needs d >= 0");
  if (sgn(b) == 0 || d == 0) return Scalar(std::move(a));
  Scalar root = Scalar::sqrt(Integer(d));
  if (root.is_rational()) return Scalar(Rational(a + b * root.rational()));
  const auto& r = root.quadratic();
  return Scalar(Repr(QuadraticNumber{std::move(a), b * r.b, r.d}));
}

Scalar Scalar::sqrt(const Integer& n) {
  if (sgn(n) < 0) throw DomainError("sqrt of a negative number");
  if (sgn(n) == 0) return Scalar(0);
  Integer k = 1, m = n;
  for (unsigned long p = 2; p < 1000000 && p * p <= m; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
      m /= p * p;
      k *= p;
    }
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return Scalar(Rational(k * r));
  }
  if (!m.fits_slong_p()) throw DomainError("sqrt radicand too large");
  return Scalar(Repr(QuadraticNumber{Rational(0), Rational(k), m.get_si()}));
}

Scalar Scalar::cyclotomic(int s, QPoly coeffs) {
  if (s < 3) throw DomainError("cyclotomic conductor must be >= 3, got " + std::to_string(s));
  for (auto& c : coeffs) c.canonicalize();
  QPoly p = real_cyclotomic_field(s).reduce(coeffs);
  if (s % 4 == 2) {
    const int h = s / 2;
    const auto& half = real_cyclotomic_field(h);
    // 2cos(pi/h) = -2cos(2pi (h-1)/2 / h) for odd h.
    QPoly t_s = poly_scale(half.dickson((h - 1) / 2), Rational(-1));
    p = half.compose(p, t_s);
    s = h;
  }
  if (p.size() <= 1) return Scalar(p.empty() ? Rational(0) : p[0]);
  if (real_cyclotomic_field(s).degree() == 2) {
    const Rational c0 = p[0], c1 = p[1];
    switch (s) {
      case 5:  // t = (-1 + sqrt 5)/2
        return quadratic(c0 - c1 / 2, c1 / 2, 5);
      case 8:  // t = sqrt 2
        return quadratic(c0, c1, 2);
      case 12:  // t = sqrt 3
        return quadratic(c0, c1, 3);
      default:
        break;
    }
  }
  return Scalar(Repr(CyclotomicReal{s, std::move(p)}));
}

bool Scalar::is_integer() const {
  return is_rational() && rational().get_den() == 1;
}

int Scalar::sign() const {
  switch (tower()) {
    case Tower::Rational:
      return sgn(rational());
    case Tower::Quadratic: {
      const auto& q = quadratic();
      const int sa = sgn(q.a), sb = sgn(q.b);
      if (sa == 0 || sa == sb) return sb;
      // Opposite signs: the larger of a^2 and d*b^2 wins.
      const int cmp = ::cmp(q.a * q.a, q.d * q.b * q.b);
      return cmp > 0 ? sa : sb;
    }
    case Tower::Cyclotomic: {
      const auto& c = cyclotomic();
      return real_cyclotomic_field(c.s).sign(c.coeffs);
    }
  }
  return 0;
}

bool Scalar::is_zero() const { return is_rational() && sgn(rational()) == 0; }

double Scalar::approx() const {
  switch (tower()) {
    case Tower::Rational:
      return rational().get_d();
    case Tower::Quadratic: {
      const auto& q = quadratic();
      return q.a.get_d() + q.b.get_d() * std::sqrt(static_cast<double>(q.d));
    }
    case Tower::Cyclotomic: {
      const auto& c = cyclotomic();
      const double t = 2.0 * std::cos(2.0 * std::numbers::pi / c.s);
      double acc = 0;
      for (std::size_t i = c.coeffs.size(); i-- > 0;) acc = acc * t + c.coeffs[i].get_d();
      return acc;
    }
  }
  return 0;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
  switch (tower()) {
    case Tower::Rational:
      return rational_str(rational());
    case Tower::Quadratic: {
      const auto& q = quadratic();
      std::string out = rational_str(q.a);
      out += sgn(q.b) < 0 ? "-" : "+";
      out += rational_str(abs(q.b));
      out += "*sqrt(" + std::to_string(q.d) + ")";
      return out;
    }
    case Tower::Cyclotomic: {
      const auto& c = cyclotomic();
      std::string out = "poly(t; ";
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (i) out += ",";
        out += rational_str(c.coeffs[i]);
      }
      out += ")@" + std::to_string(c.s);
      return out;
    }
  }
  return {};
}

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

Scalar arith(const Scalar& x, const Scalar& y, ArithOp op) {
  if (op == ArithOp::Div && y.is_zero()) throw DivisionByZero();
  if (x.is_rational() && y.is_rational()) {
    const Rational &a = x.rational(), &b = y.rational();
    switch (op) {
      case ArithOp::Add:
        return Scalar(Rational(a + b));
      case ArithOp::Sub:
        return Scalar(Rational(a - b));
      case ArithOp::Mul:
        return Scalar(Rational(a * b));
      case ArithOp::Div:
        return Scalar(Rational(a / b));
    }
  }
  if (x.tower() != Tower::Cyclotomic && y.tower() != Tower::Cyclotomic)
    return quadratic_arith(x, y, op);

  const int cx = conductor_of(x), cy = conductor_of(y);
  int target = 0;
  if (cy == 0)
    target = cx;
  else if (cx == 0 || cy % cx == 0)
    target = cy;
  else if (cx % cy == 0)
    target = cx;
  else
    throw IncompatibleTowers("conductors " + std::to_string(cx) + " and " +
                             std::to_string(cy) + " do not nest");
  const auto& field = real_cyclotomic_field(target);
  QPoly a = to_field(x, target), b = to_field(y, target);
  QPoly r;
  switch (op) {
    case ArithOp::Add:
      r = poly_add(a, b);
      break;
    case ArithOp::Sub:
      r = poly_sub(a, b);
      break;
    case ArithOp::Mul:
      r = field.mul(a, b);
      break;
    case ArithOp::Div:
      r = field.mul(a, field.inverse(b));
      break;
  }
  return Scalar::cyclotomic(target, std::move(r));
}

Scalar operator+(const Scalar& x, const Scalar& y) { return arith(x, y, ArithOp::Add); }
Scalar operator-(const Scalar& x, const Scalar& y) { return arith(x, y, ArithOp::Sub); }
Scalar operator*(const Scalar& x, const Scalar& y) { return arith(x, y, ArithOp::Mul); }
Scalar operator/(const Scalar& x, const Scalar& y) { return arith(x, y, ArithOp::Div); }
Scalar operator-(const Scalar& x) { return arith(Scalar(0), x, ArithOp::Sub); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.tower() == y.tower()) {
    if (x.tower() != Tower::Cyclotomic || x.cyclotomic().s == y.cyclotomic().s)
      return x.v_ == y.v_;
  } else if (x.is_rational() || y.is_rational()) {
    return false;  // canonical non-rational values are irrational
  }
  try {
    return (x - y).is_zero();
  } catch (const IncompatibleTowers&) {
    return false;
  }
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) {
    const int c = cmp(x.rational(), y.rational());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int s;
  try {
    s = (x - y).sign();
  } catch (const IncompatibleTowers&) {
    // Ordering is still decidable in the compositum when the conductors are small.
    const int cx = conductor_of(x), cy = conductor_of(y);
    const int joint = std::lcm(cx, cy);
    if (joint > kMaxJointConductor) throw;
    const auto& field = real_cyclotomic_field(joint);
    s = field.sign(poly_sub(to_field(x, joint), to_field(y, joint)));
  }
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Scalar cos2pi(long r, long s) {
  if (s < 3) throw DomainError("cos2pi needs s >= 3, got s = " + std::to_string(s));
  if (r < 1 || r >= s)
    throw DomainError("cos2pi needs 1 <= r < s, got r = " + std::to_string(r));
  const auto& field = real_cyclotomic_field(static_cast<int>(s));
  return Scalar::cyclotomic(static_cast<int>(s), field.dickson(r));
}

Scalar pow(const Scalar& x, unsigned e) {
  Scalar result(1), base = x;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace logcv
