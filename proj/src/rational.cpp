#include "groupwalk/rational.hpp"

#include <cctype>
#include <ostream>

namespace groupwalk {

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_s = text.substr(0, slash);
  if (!is_integer_token(num_s)) {
    throw ParseError(0, "invalid rational '" + text + "'");
  }
  mpz_class num(num_s, 10);
  if (slash == std::string::npos) return Rational(num, mpz_class(1));
  const std::string den_s = text.substr(slash + 1);
  if (!is_integer_token(den_s) || den_s[0] == '-' || den_s[0] == '+') {
    throw ParseError(0, "invalid rational '" + text + "'");
  }
  mpz_class den(den_s, 10);
  if (den == 0) throw ParseError(0, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

Rational Rational::from_double(double x) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& a) {
  return os << a.v_.get_str();
}

}  // namespace groupwalk
