#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "bfre/errors.hpp"

namespace bfre {

// Exact rational confined to the unit interval. All comparisons and
// arithmetic are exact; there is no epsilon anywhere in the library.
class Scalar {
public:
    Scalar() : v_(0) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(mpq_class(1)); }

    // Accepts a decimal string ("0", "1", "0.3", "0.25") or a fraction
    // string ("3/4"). Throws ParseError on malformed text or a value
    // outside [0, 1].
    static Scalar parse(std::string_view text);

    // num/den with 0 <= num/den <= 1, den > 0.
    static Scalar ratio(long num, long den);

    // Decimal string when the expansion terminates, "p/q" in lowest
    // terms otherwise.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return cmp(v_, 1) == 0; }

    Scalar half() const { return Scalar(v_ / 2); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) >= 0; }

    friend Scalar tnorm(const Scalar& x, const Scalar& y);
    friend Scalar residuum(const Scalar& z, const Scalar& x);

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

// product t-norm
Scalar tnorm(const Scalar& x, const Scalar& y);

// product negation: 1 at zero, 0 on the open-to-closed rest of the interval
Scalar negation(const Scalar& x);

// residuated implication of the product t-norm: min(1, z/x), with
// residuum(z, 0) = 1 so that the adjoint property
//   tnorm(x, y) <= z  iff  y <= residuum(z, x)
// holds on the whole interval, including x = 0.
Scalar residuum(const Scalar& z, const Scalar& x);

} // namespace bfre
