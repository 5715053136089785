#include "bfre/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace bfre {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad_number(std::string_view text) {
    throw ParseError("malformed number \"" + std::string(text) + "\"");
}

} // namespace

Scalar Scalar::parse(std::string_view text) {
    mpq_class v;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        mpz_class d(std::string(den), 10);
        if (sgn(d) == 0) bad_number(text);
        v = mpq_class(mpz_class(std::string(num), 10), d);
        v.canonicalize();
    } else {
        std::string_view whole = text;
        std::string_view frac;
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            whole = text.substr(0, dot);
            frac = text.substr(dot + 1);
            if (!all_digits(frac)) bad_number(text);
        }
        if (!all_digits(whole)) bad_number(text);
        mpz_class scaled(std::string(whole) + std::string(frac), 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        v = mpq_class(scaled, den);
        v.canonicalize();
    }
    if (sgn(v) < 0 || cmp(v, 1) > 0)
        throw ParseError("value \"" + std::string(text) + "\" outside [0,1]");
    return Scalar(std::move(v));
}

Scalar Scalar::ratio(long num, long den) {
    if (den <= 0) throw ContractError("ratio denominator must be positive");
    if (num < 0 || num > den) throw ContractError("ratio outside [0,1]");
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar(std::move(v));
}

std::string Scalar::str() const {
    const mpz_class& num = v_.get_num();
    const mpz_class& den = v_.get_den();
    if (den == 1) return num.get_str();

    mpz_class rest = den;
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
        rest /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.get_str() + "/" + den.get_str();

    unsigned places = std::max(twos, fives);
    mpz_class scale(1);
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    mpz_class digits = num * (scale / den);
    std::string text = digits.get_str();
    if (text.size() < places) text.insert(0, places - text.size(), '0');
    while (text.back() == '0') text.pop_back();
    return "0." + text;
}

Scalar tnorm(const Scalar& x, const Scalar& y) {
    return Scalar(mpq_class(x.v_ * y.v_));
}

Scalar negation(const Scalar& x) {
    return x.is_zero() ? Scalar::one() : Scalar::zero();
}

Scalar residuum(const Scalar& z, const Scalar& x) {
    if (x.is_zero()) return Scalar::one();
    mpq_class q(z.v_ / x.v_);
    if (cmp(q, 1) > 0) return Scalar::one();
    return Scalar(std::move(q));
}

} // namespace bfre
