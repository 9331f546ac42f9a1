#include "mgraph/bignum.hpp"

namespace mgraph {

std::size_t decimal_digits(const BigInt& x) {
    if (sgn(x) == 0) return 1;
    // mpz_sizeinbase is exact or one too large for base 10.
    std::size_t d = mpz_sizeinbase(x.get_mpz_t(), 10);
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, d - 1);
    return abs(x) < bound ? d - 1 : d;
}

}  // namespace mgraph
