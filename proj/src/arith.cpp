#include "tropical/arith.hpp"

#include <sstream>

#include "tropical/error.hpp"

namespace tropical {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotInSupport: return "NotInSupport";
    case ErrorKind::MonomialInput: return "MonomialInput";
    case ErrorKind::NotATerm: return "NotATerm";
    case ErrorKind::NotACommonCell: return "NotACommonCell";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::IncompatibleFans: return "IncompatibleFans";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

IntegerVector make_integer_vector(std::initializer_list<long> coords) {
  IntegerVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

RationalVector make_rational_vector(std::initializer_list<long> coords) {
  RationalVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c);
  return out;
}

Rational dot(const IntegerVector& a, const RationalVector& x) {
  if (a.size() != x.size()) throw TropicalError(ErrorKind::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw TropicalError(ErrorKind::DimensionMismatch, "dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw TropicalError(ErrorKind::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw TropicalError(ErrorKind::DimensionMismatch, "vector sum");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw TropicalError(ErrorKind::DimensionMismatch, "vector difference");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator*(const Rational& s, const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RationalVector canonical(RationalVector v) {
  for (auto& c : v) c.canonicalize();
  return v;
}

bool is_zero(const IntegerVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

bool is_zero(const RationalVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Integer content(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

IntegerVector clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, Integer(c.get_den()));
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  Integer g = content(out);
  if (g > 1)
    for (auto& c : out) c /= g;
  return out;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  auto ok = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!ok(num) || !ok(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const IntegerVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace tropical
