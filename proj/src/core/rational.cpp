#include "core/rational.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cctype>

namespace aoforge {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0) throw InvalidArgument("rational '" + std::string(text) + "' has zero denominator");
    value = Rational(Integer(std::string(num), 10), d);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
    value = Rational(Integer(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

Rational ratio(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace aoforge
