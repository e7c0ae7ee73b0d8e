#include "shapelift/rational.hpp"

#include <cctype>
#include <ostream>

#include "shapelift/errors.hpp"

namespace shapelift {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1")
                                                              : body.substr(slash + 1);
  if (!all_digits(num_part)) {
    throw DomainError("malformed rational '" + std::string(text) +
                      "': expected digits at position " + std::to_string(negative ? 1 : 0));
  }
  if (!all_digits(den_part)) {
    throw DomainError("malformed rational '" + std::string(text) +
                      "': expected digits after '/' at position " +
                      std::to_string((negative ? 1 : 0) + slash + 1));
  }
  BigInt num(std::string(num_part), 10);
  BigInt den(std::string(den_part), 10);
  if (den == 0) throw DomainError("malformed rational '" + std::string(text) + "': zero denominator");
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw DomainError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace shapelift
