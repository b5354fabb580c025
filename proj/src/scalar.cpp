#include "etensor/scalar.hpp"

#include <cctype>

#include "etensor/errors.hpp"

namespace etensor {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num, true)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Scalar(mpz_class(num_str));

  const auto den = text.substr(slash + 1);
  if (!valid_integer(den, false)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  mpz_class d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar value(mpz_class(num_str), d);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

void axpy(Vector& v, const Scalar& factor, const Vector& w) {
  if (is_zero(factor)) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(w[i])) v[i] += factor * w[i];
  }
}

}  // namespace etensor
