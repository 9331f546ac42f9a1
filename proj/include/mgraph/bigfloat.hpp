#pragma once

#include <mpfr.h>

#include <string>

namespace mgraph {

// Owning MPFR value with value semantics.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    // Fixed-point decimal with `decimals` digits after the point, round-to-nearest.
    std::string to_fixed(unsigned decimals) const;

    friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.value_, y.value_); }
    friend bool operator<=(const BigFloat& x, const BigFloat& y) { return mpfr_lessequal_p(x.value_, y.value_); }
    friend bool operator==(const BigFloat& x, const BigFloat& y) { return mpfr_equal_p(x.value_, y.value_); }

private:
    void release();

    mpfr_t value_;
    bool live_ = false;
};

}  // namespace mgraph
