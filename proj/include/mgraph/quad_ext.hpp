#pragma once

#include "mgraph/bignum.hpp"
#include "mgraph/error.hpp"

#include <cstdint>
#include <ostream>

namespace mgraph {

// Element a + b*sqrt(D) of the quadratic field Q(sqrt(D)), D a positive
// non-square integer. All operations are exact.
template <long D>
class QuadraticField {
    static_assert(D > 1, "radicand must be a positive non-square");

public:
    QuadraticField() = default;
    QuadraticField(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }
    QuadraticField(long a, long b = 0) : a_(a), b_(b) {}

    static QuadraticField sqrt_radicand() { return QuadraticField(0, 1); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    // a^2 - D b^2; vanishes only at zero because sqrt(D) is irrational.
    Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }
    QuadraticField conjugate() const { return QuadraticField(a_, -b_); }

    QuadraticField reciprocal() const {
        Rational n = norm();
        if (sgn(n) == 0) {
            throw DegenerateInputError("reciprocal of zero in Q(sqrt(D))");
        }
        return QuadraticField(a_ / n, -b_ / n);
    }

    QuadraticField pow(std::uint64_t e) const {
        QuadraticField result(1);
        QuadraticField base = *this;
        while (e != 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e != 0) base *= base;
        }
        return result;
    }

    QuadraticField& operator+=(const QuadraticField& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadraticField& operator-=(const QuadraticField& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadraticField& operator*=(const QuadraticField& o) {
        Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadraticField& operator/=(const QuadraticField& o) { return *this *= o.reciprocal(); }

    friend QuadraticField operator+(QuadraticField x, const QuadraticField& y) { return x += y; }
    friend QuadraticField operator-(QuadraticField x, const QuadraticField& y) { return x -= y; }
    friend QuadraticField operator*(QuadraticField x, const QuadraticField& y) { return x *= y; }
    friend QuadraticField operator/(QuadraticField x, const QuadraticField& y) { return x /= y; }
    friend QuadraticField operator-(const QuadraticField& x) { return QuadraticField(-x.a_, -x.b_); }

    friend bool operator==(const QuadraticField& x, const QuadraticField& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticField& x) {
        return os << x.a_ << " + " << x.b_ << "*sqrt(" << D << ")";
    }

private:
    Rational a_{0};
    Rational b_{0};
};

using QuadExt = QuadraticField<2>;

}  // namespace mgraph
