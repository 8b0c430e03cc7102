#include "poslab/rational.hpp"

#include <cctype>

#include "poslab/error.hpp"

namespace poslab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

// Exact integer r-th root of a nonnegative value, if one exists.
bool exact_root(const Integer& value, unsigned long r, Integer& out) {
  if (value < 0) return false;
  return mpz_root(out.get_mpz_t(), value.get_mpz_t(), r) != 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string round_half_away(const Rational& value, int places) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Rational magnitude = abs(value) * scale + Rational(1, 2);
  Integer digits = magnitude.get_num() / magnitude.get_den();

  std::string body = digits.get_str(10);
  if (places > 0) {
    if (static_cast<int>(body.size()) <= places)
      body.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(body.size())), '0');
    body.insert(body.size() - static_cast<std::size_t>(places), ".");
  }
  if (value < 0 && digits != 0) body.insert(0, "-");
  return body;
}

Rational pow_int(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

bool rational_power(const Rational& base, const Rational& exponent, Rational& out) {
  if (exponent == 0) {
    out = 1;
    return true;
  }
  if (base == 0) {
    if (exponent < 0) return false;
    out = 0;
    return true;
  }
  if (!exponent.get_den().fits_ulong_p() || !Integer(abs(exponent.get_num())).fits_ulong_p())
    return false;
  const unsigned long q = exponent.get_den().get_ui();
  const unsigned long p = Integer(abs(exponent.get_num())).get_ui();

  Integer num_root, den_root;
  if (base < 0) {
    if (q % 2 == 0) return false;
    if (!exact_root(Integer(-base.get_num()), q, num_root)) return false;
    num_root = -num_root;
  } else if (!exact_root(base.get_num(), q, num_root)) {
    return false;
  }
  if (!exact_root(base.get_den(), q, den_root)) return false;

  Rational root(num_root, den_root);
  root.canonicalize();
  out = pow_int(root, static_cast<unsigned>(p));
  if (exponent < 0) out = 1 / out;
  return true;
}

}  // namespace poslab
