#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hmkit {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);

  /// Parses "p", "-p" or "p/q". Throws Error on malformed input or q = 0.
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws DivisionByZero

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rat(mpq_class v);
  mpq_class value_;
};

Rat abs(const Rat& x);
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Division that reports a zero divisor as an empty result instead of throwing.
std::optional<Rat> checked_div(const Rat& x, const Rat& y);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace hmkit
