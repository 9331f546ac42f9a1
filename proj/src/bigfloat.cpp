#include "mgraph/bigfloat.hpp"

#include <memory>

namespace mgraph {

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
    live_ = true;
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
    live_ = true;
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Steal the limbs; leave `other` destructible but empty.
    *value_ = *other.value_;
    live_ = other.live_;
    other.live_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        if (!live_) {
            mpfr_init2(value_, other.precision());
            live_ = true;
        } else {
            mpfr_set_prec(value_, other.precision());
        }
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) {
        release();
        *value_ = *other.value_;
        live_ = other.live_;
        other.live_ = false;
    }
    return *this;
}

BigFloat::~BigFloat() { release(); }

void BigFloat::release() {
    if (live_) {
        mpfr_clear(value_);
        live_ = false;
    }
}

std::string BigFloat::to_fixed(unsigned decimals) const {
    char* raw = nullptr;
    const int len = mpfr_asprintf(&raw, "%.*RNf", static_cast<int>(decimals), value_);
    if (len < 0) return {};
    std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
    return std::string(raw, static_cast<std::size_t>(len));
}

}  // namespace mgraph
