#include "pqdist/rational.hpp"

#include "pqdist/errors.hpp"

namespace pqdist {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational: " + s);
  if (r.get_den() == 0) throw DomainError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer power_of_two_at_least(const Rational& value) {
  Rational a = abs(value);
  Integer p = 1;
  while (Rational(p) < a) p *= 2;
  return p;
}

}  // namespace pqdist
