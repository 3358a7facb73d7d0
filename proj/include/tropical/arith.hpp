#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropical {

using Integer = mpz_class;
using Rational = mpq_class;

// Lattice points and directions in N = Z^n.
using IntegerVector = std::vector<Integer>;
// Points of N_Q; every entry is kept canonical by mpq.
using RationalVector = std::vector<Rational>;

IntegerVector make_integer_vector(std::initializer_list<long> coords);
RationalVector make_rational_vector(std::initializer_list<long> coords);
RationalVector to_rational(const IntegerVector& v);

Rational dot(const IntegerVector& a, const RationalVector& x);
Integer dot(const IntegerVector& a, const IntegerVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& a);

// mpq_class(num, den) does not reduce; arithmetic assumes reduced operands.
Rational make_rational(const Integer& num, const Integer& den);
RationalVector canonical(RationalVector v);

bool is_zero(const IntegerVector& v);
bool is_zero(const RationalVector& v);

// gcd of the absolute values; 0 for the zero vector.
Integer content(const IntegerVector& v);

// Smallest positive integer multiple of a rational vector that is integral
// and primitive in direction. Returns the zero vector for zero input.
IntegerVector clear_denominators(const RationalVector& v);

// Parses "p", "-p" or "p/q" exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);
std::string to_string(const IntegerVector& v);

}  // namespace tropical
