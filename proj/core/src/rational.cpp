#include "foxh/rational.hpp"

#include <cctype>
#include <cmath>

#include "foxh/errors.hpp"

namespace foxh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int reads a leading 0 as an octal prefix
BigInt digits_to_int(std::string_view s) {
  auto nz = s.find_first_not_of('0');
  return nz == std::string_view::npos ? BigInt(0) : BigInt{std::string(s.substr(nz))};
}

BigInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
  return neg ? BigInt(-digits_to_int(s)) : digits_to_int(s);
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  // decimal with optional exponent
  std::string_view mant = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    BigInt ex = parse_int(text.substr(e + 1));
    if (ex > 400 || ex < -400) throw Error(ErrorKind::ParseError, "exponent out of range");
    exponent = ex.convert_to<long>();
  }
  bool neg = false;
  if (!mant.empty() && (mant.front() == '+' || mant.front() == '-')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw Error(ErrorKind::ParseError, "malformed decimal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw Error(ErrorKind::ParseError, "malformed number '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  BigInt num = digits_to_int(digits);
  if (neg) num = -num;
  long scale = exponent - frac_digits;
  if (scale >= 0) return Rational(num * pow10(scale));
  return Rational(num, pow10(-scale));
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

BigInt floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::optional<Rational> recover_rational(double x, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued-fraction convergents of |x|
  double ax = std::fabs(x);
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rem = ax;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(rem);
    if (a > 9e15) break;
    long long ai = static_cast<long long>(a);
    long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (static_cast<double>(h1) / static_cast<double>(k1) == ax) {
      Rational r(h1, k1);
      return x < 0 ? Rational(-r) : r;
    }
    double frac = rem - a;
    if (frac <= 0) break;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace foxh
