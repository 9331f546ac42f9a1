#pragma once

#include <gmpxx.h>

#include <string>

namespace mgraph {

// Exact integers and fractions are GMP-backed. mpq_class keeps num/den in
// lowest terms with a positive denominator after every arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms. The two-argument mpq_class constructor does not
// canonicalize, and GMP arithmetic requires canonical operands.
inline Rational ratio(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

inline std::string to_string(const Rational& x) { return x.get_str(10); }

// Number of decimal digits of |x|; 1 for zero.
std::size_t decimal_digits(const BigInt& x);

}  // namespace mgraph
