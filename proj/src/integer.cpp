#include "glocsur/integer.hpp"

#include <cctype>

namespace glocsur {

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed integer literal '" + s + "'");
  for (std::size_t k = start; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw InputError("malformed integer literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Rational frac(const Rational& q) {
  Int fl = floor_div(q.get_num(), q.get_den());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InvariantViolation("vector size mismatch in +");
  IntVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InvariantViolation("vector size mismatch in -");
  IntVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

IntVector operator*(const Int& k, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

}  // namespace glocsur
