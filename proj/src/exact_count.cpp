#include "mgraph/exact_count.hpp"

#include "mgraph/error.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mgraph {

namespace {

void check_materialize(unsigned t, unsigned limit) {
    if (t > limit) {
        throw ResourceLimitError("s(" + std::to_string(t) + ") exceeds the materialization limit t <= " +
                                 std::to_string(limit));
    }
}

void require_level(unsigned t, const char* what) {
    if (t < 1) throw std::invalid_argument(std::string(what) + " requires t >= 1");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

std::vector<BigInt> s_sequence(unsigned t, unsigned limit) {
    check_materialize(t, limit);
    std::vector<BigInt> s;
    s.reserve(t + 1);
    s.emplace_back(1);
    if (t >= 1) s.emplace_back(4);
    for (unsigned k = 2; k <= t; ++k) {
        const BigInt& prev = s[k - 1];
        const BigInt& prev2 = s[k - 2];
        BigInt next = 4 * prev * prev - 2 * prev * prev2 * prev2;
        s.push_back(std::move(next));
    }
    return s;
}

BigInt s_recurrence(unsigned t, unsigned limit) {
    check_materialize(t, limit);
    if (t == 0) return 1;
    BigInt prev2 = 1;
    BigInt prev = 4;
    for (unsigned k = 2; k <= t; ++k) {
        BigInt next = prev * (4 * prev - 2 * prev2 * prev2);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

std::uint64_t s_recurrence_mod(unsigned t, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
    std::uint64_t prev2 = 1 % p;
    if (t == 0) return prev2;
    std::uint64_t prev = 4 % p;
    for (unsigned k = 2; k <= t; ++k) {
        const std::uint64_t sq = mulmod(prev, prev, p);
        const std::uint64_t cross = mulmod(mulmod(prev, prev2, p), prev2, p);
        const std::uint64_t next = (mulmod(4 % p, sq, p) + p - mulmod(2 % p, cross, p)) % p;
        prev2 = prev;
        prev = next;
    }
    return prev;
}

BigInt g_value(unsigned t, unsigned limit) {
    check_materialize(t, limit);
    if (t == 0) return 1;
    const BigInt prev = s_recurrence(t - 1, limit);
    return s_recurrence(t, limit) - prev * prev;
}

Rational q_recurrence(unsigned t) {
    require_level(t, "q_recurrence");
    Rational q = 4;
    for (unsigned k = 2; k <= t; ++k) q = 4 - 2 / q;
    return q;
}

QuadExt q_closed_form_field(unsigned t) {
    require_level(t, "q_closed_form");
    const QuadExt root2 = QuadExt::sqrt_radicand();
    const QuadExt contraction = QuadExt(3) - QuadExt(2) * root2;
    return QuadExt(2) - root2 + (QuadExt(2) * root2) / (QuadExt(1) - contraction.pow(t));
}

Rational q_closed_form(unsigned t) {
    const QuadExt q = q_closed_form_field(t);
    if (!q.is_rational()) {
        throw InconsistencyError("closed form for q(" + std::to_string(t) +
                                 ") has nonzero sqrt2 component " + to_string(q.radical_part()));
    }
    return q.rational_part();
}

BigInt s_theorem1(unsigned t, unsigned limit) {
    require_level(t, "s_theorem1");
    check_materialize(t, limit);
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 1; i <= t; ++i) {
        const Rational q = q_closed_form(i);
        const unsigned long exponent = 1UL << (t - i);
        BigInt pn;
        BigInt pd;
        mpz_pow_ui(pn.get_mpz_t(), q.get_num_mpz_t(), exponent);
        mpz_pow_ui(pd.get_mpz_t(), q.get_den_mpz_t(), exponent);
        num *= pn;
        den *= pd;
    }
    const Rational product = ratio(num, den);
    if (product.get_den() != 1) {
        throw InconsistencyError("product formula for s(" + std::to_string(t) + ") is not an integer");
    }
    return product.get_num();
}

EntropyEstimate entropy(unsigned t, unsigned precision) {
    require_level(t, "entropy");
    if (precision < 10) throw std::invalid_argument("entropy precision must be at least 10 digits");

    // Enough bits for `precision` decimals of h_t, plus t bits so that
    // ln s(t) = 2^{t+1} h_t keeps its integer part, plus guard bits for the
    // 2t+1 correctly rounded operations in the sum.
    const auto bits = static_cast<mpfr_prec_t>(std::ceil(precision * 3.3219280948873623) + t + 64);

    EntropyEstimate est{t, precision, BigFloat(bits), BigFloat(bits), 0};
    BigFloat term(bits);
    Rational q = 4;
    for (unsigned i = 1; i <= t; ++i) {
        if (i > 1) q = 4 - 2 / q;
        mpfr_set_q(term.get(), q.get_mpq_t(), MPFR_RNDN);
        mpfr_log(term.get(), term.get(), MPFR_RNDN);
        mpfr_div_2ui(term.get(), term.get(), i + 1, MPFR_RNDN);
        mpfr_add(est.h_t.get(), est.h_t.get(), term.get(), MPFR_RNDN);
    }
    mpfr_mul_2ui(est.ln_s.get(), est.h_t.get(), t + 1, MPFR_RNDN);

    BigFloat log10s(bits);
    BigFloat ln10(bits);
    mpfr_set_ui(ln10.get(), 10, MPFR_RNDN);
    mpfr_log(ln10.get(), ln10.get(), MPFR_RNDN);
    mpfr_div(log10s.get(), est.ln_s.get(), ln10.get(), MPFR_RNDN);
    mpfr_floor(log10s.get(), log10s.get());
    mpfr_get_z(est.digits.get_mpz_t(), log10s.get(), MPFR_RNDN);
    est.digits += 1;
    return est;
}

double entropy_tail_bound(unsigned t) { return std::log(4.0) * std::ldexp(1.0, -static_cast<int>(t) - 1); }

}  // namespace mgraph
