#include "gyrolab/qfield.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace gyrolab {

Q2::Q2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Q2 Q2::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("Q2::rational: zero denominator");
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return Q2(q);
}

int Q2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 with 2 b^2. Equality is impossible since
  // sqrt(2) is irrational and both parts are nonzero here.
  const int cmp = ::cmp(a_ * a_, 2 * b_ * b_);
  return sa > 0 ? cmp : -cmp;
}

Q2 Q2::inverse() const {
  if (is_zero()) throw DivisionByZero("Q2::inverse of zero");
  const mpq_class n = norm();
  return Q2(a_ / n, -b_ / n);
}

Q2& Q2::operator+=(const Q2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Q2& Q2::operator-=(const Q2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Q2& Q2::operator*=(const Q2& o) {
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const Q2& x, const Q2& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Q2::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::string Q2::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str();
  if (sgn(b_) != 0) {
    if (sgn(b_) > 0) {
      if (!out.empty()) out += '+';
      out += b_.get_str();
    } else {
      out += '-';
      out += mpq_class(-b_).get_str();
    }
    out += "*sqrt2";
  }
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Q2 Q2::parse(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) sc.fail("empty input");
  mpq_class a = 0, b = 0;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else if (!sc.accept('+') && !first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    mpq_class coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      mpz_class num = sc.integer();
      mpz_class den = 1;
      if (sc.accept('/')) {
        den = sc.integer();
        if (den == 0) sc.fail("zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      has_coeff = true;
    }
    bool radical = false;
    if (has_coeff && sc.accept('*')) {
      if (!sc.accept("sqrt2")) sc.fail("expected 'sqrt2' after '*'");
      radical = true;
    } else if (!has_coeff) {
      if (!sc.accept("sqrt2")) sc.fail("expected a number or 'sqrt2'");
      radical = true;
    }
    (radical ? b : a) += sign * coeff;
  }
  return Q2(a, b);
}

Q2 Q2::from_decimal(std::string_view text) {
  Scanner sc(text);
  int sign = 1;
  if (sc.accept('-')) sign = -1;
  else sc.accept('+');
  mpz_class whole = sc.integer();
  mpz_class frac = 0;
  mpz_class scale = 1;
  if (sc.accept('.')) {
    while (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      frac = frac * 10 + (sc.peek() - '0');
      scale *= 10;
      sc.accept(sc.peek());
    }
  }
  if (!sc.done()) sc.fail("trailing characters in decimal");
  mpq_class q(whole * scale + frac, scale);
  q.canonicalize();
  return Q2(sign * q);
}

std::ostream& operator<<(std::ostream& os, const Q2& x) {
  return os << x.to_string();
}

}  // namespace gyrolab
