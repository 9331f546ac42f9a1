#pragma once

#include "mgraph/bigfloat.hpp"
#include "mgraph/bignum.hpp"
#include "mgraph/quad_ext.hpp"

#include <cstdint>
#include <vector>

namespace mgraph {

// s(t) has about 0.57 * 2^{t+1} decimal digits; beyond this level counts are
// reported through the logarithm sum instead of being materialized.
inline constexpr unsigned kDefaultMaterializeLimit = 22;

// s(0..t) by s(t) = 4 s(t-1)^2 - 2 s(t-1) s(t-2)^2, s(0) = 1, s(1) = 4.
std::vector<BigInt> s_sequence(unsigned t, unsigned limit = kDefaultMaterializeLimit);

BigInt s_recurrence(unsigned t, unsigned limit = kDefaultMaterializeLimit);

// s(t) mod p by the same recurrence carried out in Z/pZ; no size limit.
std::uint64_t s_recurrence_mod(unsigned t, std::uint64_t p);

// Number of spanning 2-forests of M(t) separating its hub pair:
// g(0) = 1, g(t) = s(t) - s(t-1)^2.
BigInt g_value(unsigned t, unsigned limit = kDefaultMaterializeLimit);

// q(t) = s(t) / s(t-1)^2 via q(1) = 4, q(t) = 4 - 2 / q(t-1). Requires t >= 1.
Rational q_recurrence(unsigned t);

// q(t) = 2 - sqrt2 + 2 sqrt2 / (1 - (3 - 2 sqrt2)^t) evaluated in Q(sqrt2).
QuadExt q_closed_form_field(unsigned t);

// Rational part of q_closed_form_field(t). Throws InconsistencyError if the
// sqrt2 component is not exactly zero.
Rational q_closed_form(unsigned t);

// prod_{i=1}^{t} q(i)^{2^{t-i}} with q from the closed form. Throws
// InconsistencyError if the product is not an integer.
BigInt s_theorem1(unsigned t, unsigned limit = kDefaultMaterializeLimit);

struct EntropyEstimate {
    unsigned t = 0;
    unsigned precision = 0;  // decimal digits
    BigFloat h_t;            // ln s(t) / 2^{t+1}
    BigFloat ln_s;           // ln s(t)
    BigInt digits;           // floor(log10 s(t)) + 1
};

// h_t = sum_{i=1}^{t} 2^{-i-1} ln q(i) from the exact q(i), with relative
// error below 10^{-precision}. Requires t >= 1 and precision >= 10.
EntropyEstimate entropy(unsigned t, unsigned precision = 30);

// Rigorous gap h - h_t <= ln(4) 2^{-t-1}, since every q(i) <= 4.
double entropy_tail_bound(unsigned t);

}  // namespace mgraph
