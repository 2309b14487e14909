#include "knotalg/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace knotalg {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void ModP::set_modulus(std::int64_t p) {
  check(is_prime(p), ErrorKind::ParseError, "modulus " + std::to_string(p) + " is not prime");
  modulus_ = p;
}

ModP ModP::inverse() const {
  check(v_ != 0, ErrorKind::NotInvertible, "inverse of 0 in Z/p");
  // Extended Euclid on (v, p).
  long long a = v_, b = modulus_, x0 = 1, x1 = 0;
  while (b != 0) {
    const long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return ModP(x0);
}

BaseRing BaseRing::prime_field(std::int64_t p) {
  check(is_prime(p), ErrorKind::ParseError, "modulus " + std::to_string(p) + " is not prime");
  return {Tag::PrimeField, p};
}

BaseRing BaseRing::parse(const std::string& s) {
  if (s == "z" || s == "Z") return integers();
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    check(!digits.empty() && digits.size() < 12 &&
              std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }),
          ErrorKind::ParseError, "bad ring '" + s + "'");
    return prime_field(std::stoll(digits));
  }
  fail(ErrorKind::ParseError, "bad ring '" + s + "' (expected z, q or fp:<p>)");
}

std::string BaseRing::name() const {
  switch (tag) {
    case Tag::Integers:
      return "z";
    case Tag::Rationals:
      return "q";
    case Tag::PrimeField:
      return "fp:" + std::to_string(p);
  }
  return "?";
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Integer RingTraits<Integer>::parse(const std::string& s) {
  check(is_integer_literal(s), ErrorKind::ParseError, "bad integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Rational RingTraits<Rational>::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(RingTraits<Integer>::parse(s));
  const Integer num = RingTraits<Integer>::parse(s.substr(0, slash));
  const Integer den = RingTraits<Integer>::parse(s.substr(slash + 1));
  check(den != 0, ErrorKind::ParseError, "zero denominator in '" + s + "'");
  return Rational(num, den);
}

ModP RingTraits<ModP>::parse(const std::string& s) {
  return lift<ModP>(RingTraits<Integer>::parse(s));
}

}  // namespace knotalg
