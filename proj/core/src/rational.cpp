#include "tilink/rational.hpp"

#include <cctype>

namespace tilink {
namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

long long parse_digits(const std::string& s, const std::string& whole) {
  if (!all_digits(s) || s.size() > 18)
    throw ParseError("rational \"" + whole + "\": expected digits");
  long long v = 0;
  for (char ch : s) v = v * 10 + (ch - '0');
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw ParseError("rational \"" + text + "\": empty");

  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    long long num = parse_digits(s.substr(0, slash), text);
    long long den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("rational \"" + text + "\": zero denominator");
    r = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty())
      throw ParseError("rational \"" + text + "\": trailing decimal point");
    if (ip.size() + fp.size() > 18)
      throw ParseError("rational \"" + text + "\": too many digits");
    long long scale = 1;
    for (size_t k = 0; k < fp.size(); ++k) scale *= 10;
    long long num = parse_digits(ip, text) * scale + parse_digits(fp, text);
    r = Rational(num, scale);
  } else {
    r = Rational(parse_digits(s, text));
  }
  return negative ? -r : r;
}

long long checked_lcm(long long a, long long b) {
  if (a <= 0 || b <= 0) throw DomainError("lcm: arguments must be positive");
  __int128 l = (__int128)(a / std::gcd(a, b)) * b;
  if (l > INT64_MAX) throw NumericalError("lcm: 64-bit overflow");
  return static_cast<long long>(l);
}

}  // namespace tilink
