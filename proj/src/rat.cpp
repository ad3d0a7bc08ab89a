#include "hmkit/rat.hpp"

#include <ostream>
#include <utility>

#include "hmkit/error.hpp"

namespace hmkit {

Rat::Rat(std::int64_t n) : value_(static_cast<long>(n)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rat::Rat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error("malformed rational: '" + s + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw DivisionByZero();
  return Rat(mpq_class(n, d));
}

std::string Rat::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

std::optional<Rat> checked_div(const Rat& x, const Rat& y) {
  if (y.is_zero()) return std::nullopt;
  return x / y;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace hmkit
