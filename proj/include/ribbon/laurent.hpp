#pragma once

// Exact Laurent polynomial arithmetic over the integers.
//
// Coefficients are 128-bit integers with checked arithmetic: any overflow
// throws ArithmeticOverflow instead of wrapping silently. Exponents are
// plain ints; the pipelines here never push them anywhere near the limits.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ribbon {

using coeff_t = __int128;

class ArithmeticOverflow : public std::overflow_error {
public:
    ArithmeticOverflow() : std::overflow_error("coefficient overflow in exact arithmetic") {}
};

inline coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

inline coeff_t checked_sub(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

inline std::string coeff_to_string(coeff_t v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // careful with the most negative value: negate digit by digit
    std::string digits;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        v /= 10;
        digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

inline coeff_t coeff_gcd(coeff_t a, coeff_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        coeff_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Exact rational value, kept reduced with positive denominator.
struct Rational {
    coeff_t num = 0;
    coeff_t den = 1;

    Rational() = default;
    Rational(coeff_t n, coeff_t d) : num(n), den(d) { reduce(); }
    Rational(coeff_t n) : num(n), den(1) {}

    void reduce() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        coeff_t g = coeff_gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string to_string() const {
        if (den == 1) return coeff_to_string(num);
        return coeff_to_string(num) + "/" + coeff_to_string(den);
    }
};

/// Integer-coefficient Laurent polynomial in one variable t.
///
/// Stored as a map exponent -> coefficient holding only nonzero
/// coefficients; the empty map is the zero polynomial. All operations are
/// exact and leave the representation canonical, so equality is map
/// equality.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(coeff_t c) { return term(c, 0); }

    /// c * t^exp
    static LaurentPoly term(coeff_t c, int exp) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }

    static LaurentPoly one() { return constant(1); }
    static LaurentPoly variable() { return term(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<int, coeff_t>& coeffs() const { return coeffs_; }

    coeff_t coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? 0 : it->second;
    }

    int min_exp() const {
        if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }

    int max_exp() const {
        if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.coeffs_) r.add_term(c, e);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.coeffs_) r.add_term(checked_sub(0, c), e);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = checked_sub(0, c);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_)
                r.add_term(checked_mul(c1, c2), e1 + e2);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    /// Substitution t -> 1/t: the exponent-k term becomes the exponent -k term.
    LaurentPoly reverse() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    /// Multiply by t^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    /// Exact evaluation at a nonzero integer. Negative exponents make the
    /// result a rational; it is an integer whenever all exponents are >= 0
    /// or x is 1 or -1.
    Rational eval(coeff_t x) const {
        if (x == 0) throw std::invalid_argument("evaluation at zero is undefined for Laurent polynomials");
        if (is_zero()) return Rational(0);
        int shift = min_exp() < 0 ? -min_exp() : 0;
        coeff_t num = 0;
        for (const auto& [e, c] : coeffs_) num = checked_add(num, checked_mul(c, int_pow(x, e + shift)));
        return Rational(num, int_pow(x, shift));
    }

    /// Canonical text form: terms ascending by exponent, explicit +/-
    /// separators, coefficient magnitude always written, bare coefficient at
    /// exponent 0 and `c*t` at exponent 1. Zero prints as "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            coeff_t a = c < 0 ? checked_sub(0, c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            out += coeff_to_string(a);
            if (e == 1) out += "*t";
            else if (e != 0) out += "*t^" + std::to_string(e);
        }
        return out;
    }

private:
    static coeff_t int_pow(coeff_t x, int e) {
        coeff_t r = 1;
        for (int i = 0; i < e; ++i) r = checked_mul(r, x);
        return r;
    }

    void add_term(coeff_t c, int e) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::map<int, coeff_t> coeffs_;
};

struct UnitRelation {
    int sign = 1;   // +1 or -1
    int shift = 0;  // power of t
};

/// Finds (sign, shift) with a == sign * t^shift * b, if such a relation
/// exists.
inline std::optional<UnitRelation> unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return UnitRelation{1, 0};
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    int k = a.min_exp() - b.min_exp();
    LaurentPoly shifted = b.shifted(k);
    if (a == shifted) return UnitRelation{1, k};
    if (a == -shifted) return UnitRelation{-1, k};
    return std::nullopt;
}

}  // namespace ribbon
