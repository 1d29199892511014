#include "sg/rational.hpp"

#include "sg/errors.hpp"

namespace sg {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError(0, 0, "empty rational");
  std::string body = text.substr(first, last - first + 1);
  auto slash = body.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError(0, 0, "malformed rational '" + text + "'");
  }
  BigInt d(den);
  if (d == 0) throw ParseError(0, 0, "zero denominator in '" + text + "'");
  Rational r{BigInt(num), d};
  r.canonicalize();
  return r;
}

BigInt common_denominator(std::span<const Rational> values) {
  BigInt l = 1;
  for (const Rational& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  }
  return l;
}

}  // namespace sg
