#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>

#include "knotalg/errors.hpp"

namespace knotalg {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

bool is_prime(std::int64_t p);

// Element of Z/p. The modulus is process-wide and set once up front with
// ModP::set_modulus (or scoped with ModP::Modulus in tests).
class ModP {
public:
  ModP() = default;
  ModP(int v) : v_(v) { reduce(); }
  ModP(long v) : v_(v) { reduce(); }
  ModP(long long v) : v_(v) { reduce(); }

  static void set_modulus(std::int64_t p);
  static std::int64_t modulus() { return modulus_; }

  class Modulus {
  public:
    explicit Modulus(std::int64_t p) : saved_(modulus_) { set_modulus(p); }
    ~Modulus() { modulus_ = saved_; }
    Modulus(const Modulus&) = delete;
    Modulus& operator=(const Modulus&) = delete;

  private:
    std::int64_t saved_;
  };

  std::int64_t value() const { return v_; }

  ModP operator-() const { return ModP(-v_); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  friend ModP operator+(const ModP& a, const ModP& b) { return ModP(a.v_ + b.v_); }
  friend ModP operator-(const ModP& a, const ModP& b) { return ModP(a.v_ - b.v_); }
  friend ModP operator*(const ModP& a, const ModP& b) {
    if (modulus_ == 0) return ModP(a.v_ * b.v_);
    return ModP(static_cast<long long>((static_cast<__int128>(a.v_) * b.v_) % modulus_));
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ModP& a, const ModP& b) { return a.v_ != b.v_; }

  ModP inverse() const;

  friend std::ostream& operator<<(std::ostream& os, const ModP& a) { return os << a.v_; }

private:
  void reduce() {
    if (modulus_ != 0) {
      v_ %= modulus_;
      if (v_ < 0) v_ += modulus_;
    }
  }

  long long v_ = 0;
  inline static std::int64_t modulus_ = 0;
};

// Runtime description of the coefficient ring.
struct BaseRing {
  enum class Tag { Integers, Rationals, PrimeField };
  Tag tag = Tag::Integers;
  std::int64_t p = 0;

  static BaseRing integers() { return {Tag::Integers, 0}; }
  static BaseRing rationals() { return {Tag::Rationals, 0}; }
  static BaseRing prime_field(std::int64_t p);
  static BaseRing parse(const std::string& s);
  std::string name() const;
  bool operator==(const BaseRing&) const = default;
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static constexpr bool is_field = false;
  static constexpr bool ordered = true;
  static Integer conj(const Integer& a) { return a; }
  static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
  static Integer unit_inverse(const Integer& a) { return a; }
  // Multiplier taking a to its canonical associate (positive).
  static Integer normalizer(const Integer& a) { return a < 0 ? Integer(-1) : Integer(1); }
  static Integer size(const Integer& a) { return abs(a); }
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) {
      q -= 1;
      r += b;
    }
    return {q, r};
  }
  static bool divides(const Integer& b, const Integer& a) {
    return b == 0 ? a == 0 : a % b == 0;
  }
  static Integer exact_div(const Integer& a, const Integer& b) { return a / b; }
  static Integer make(long long v) { return Integer(v); }
  static Integer parse(const std::string& s);
  static std::string str(const Integer& a) { return a.str(); }
  static BaseRing ring_of(const Integer&) { return BaseRing::integers(); }
};

template <>
struct RingTraits<Rational> {
  static constexpr bool is_field = true;
  static constexpr bool ordered = true;
  static Rational conj(const Rational& a) { return a; }
  static bool is_unit(const Rational& a) { return a != 0; }
  static Rational unit_inverse(const Rational& a) { return Rational(1) / a; }
  static Rational normalizer(const Rational& a) { return a == 0 ? Rational(1) : Rational(1) / a; }
  static int size(const Rational& a) { return a == 0 ? 0 : 1; }
  static std::pair<Rational, Rational> divmod(const Rational& a, const Rational& b) {
    return {a / b, Rational(0)};
  }
  static bool divides(const Rational& b, const Rational& a) { return b != 0 || a == 0; }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
  static Rational make(long long v) { return Rational(v); }
  static Rational parse(const std::string& s);
  static std::string str(const Rational& a) { return a.str(); }
  static BaseRing ring_of(const Rational&) { return BaseRing::rationals(); }
};

template <>
struct RingTraits<ModP> {
  static constexpr bool is_field = true;
  static constexpr bool ordered = false;
  static ModP conj(const ModP& a) { return a; }
  static bool is_unit(const ModP& a) { return a != 0; }
  static ModP unit_inverse(const ModP& a) { return a.inverse(); }
  static ModP normalizer(const ModP& a) { return a == 0 ? ModP(1) : a.inverse(); }
  static int size(const ModP& a) { return a == 0 ? 0 : 1; }
  static std::pair<ModP, ModP> divmod(const ModP& a, const ModP& b) { return {a / b, ModP(0)}; }
  static bool divides(const ModP& b, const ModP& a) { return b != 0 || a == 0; }
  static ModP exact_div(const ModP& a, const ModP& b) { return a / b; }
  static ModP make(long long v) { return ModP(v); }
  static ModP parse(const std::string& s);
  static std::string str(const ModP& a) { return std::to_string(a.value()); }
  static BaseRing ring_of(const ModP&) { return BaseRing::prime_field(ModP::modulus()); }
};

template <class R>
R lift(const Integer& c) {
  if constexpr (std::is_same_v<R, Integer>) {
    return c;
  } else if constexpr (std::is_same_v<R, Rational>) {
    return Rational(c);
  } else {
    Integer m = c % Integer(ModP::modulus());
    return ModP(m.convert_to<long long>());
  }
}

template <class R>
inline bool is_zero(const R& a) {
  return a == R(0);
}

}  // namespace knotalg

namespace Eigen {
template <>
struct NumTraits<knotalg::ModP> : GenericNumTraits<knotalg::ModP> {
  typedef knotalg::ModP Real;
  typedef knotalg::ModP NonInteger;
  typedef knotalg::ModP Nested;
  typedef knotalg::ModP Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
