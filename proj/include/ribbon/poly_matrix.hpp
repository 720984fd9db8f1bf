#pragma once

// Square matrices of Laurent polynomials and exact determinants.
//
// Two independent determinant routes are kept on purpose: fraction-free
// Bareiss elimination (the default) and plain cofactor expansion. Tests
// cross-check one against the other.

#include <stdexcept>
#include <vector>

#include "ribbon/laurent.hpp"

namespace ribbon {

class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int n) : n_(n), cells_(static_cast<size_t>(n) * n) {
        if (n < 0) throw std::invalid_argument("matrix size must be nonnegative");
    }

    int size() const { return n_; }

    LaurentPoly& at(int i, int j) { return cells_[index(i, j)]; }
    const LaurentPoly& at(int i, int j) const { return cells_[index(i, j)]; }

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("matrix index");
        return static_cast<size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<LaurentPoly> cells_;
};

/// Exact quotient p / q in the Laurent ring. Throws std::domain_error when
/// q does not divide p (or q is zero).
inline LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return LaurentPoly::zero();

    // Reduce to ordinary polynomials by factoring out t^min from both sides.
    int pmin = p.min_exp(), qmin = q.min_exp();
    int dp = p.max_exp() - pmin, dq = q.max_exp() - qmin;
    if (dp < dq) throw std::domain_error("inexact polynomial division");

    std::vector<coeff_t> rem(static_cast<size_t>(dp) + 1, 0);
    for (const auto& [e, c] : p.coeffs()) rem[static_cast<size_t>(e - pmin)] = c;
    std::vector<coeff_t> div(static_cast<size_t>(dq) + 1, 0);
    for (const auto& [e, c] : q.coeffs()) div[static_cast<size_t>(e - qmin)] = c;

    std::vector<coeff_t> quot(static_cast<size_t>(dp - dq) + 1, 0);
    for (int d = dp - dq; d >= 0; --d) {
        coeff_t lead = rem[static_cast<size_t>(d + dq)];
        if (lead == 0) continue;
        if (lead % div[static_cast<size_t>(dq)] != 0) throw std::domain_error("inexact polynomial division");
        coeff_t f = lead / div[static_cast<size_t>(dq)];
        quot[static_cast<size_t>(d)] = f;
        for (int k = 0; k <= dq; ++k)
            rem[static_cast<size_t>(d + k)] =
                checked_sub(rem[static_cast<size_t>(d + k)], checked_mul(f, div[static_cast<size_t>(k)]));
    }
    for (coeff_t c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");

    LaurentPoly out;
    for (int d = 0; d <= dp - dq; ++d)
        out += LaurentPoly::term(quot[static_cast<size_t>(d)], d + pmin - qmin);
    return out;
}

/// Determinant by fraction-free Bareiss elimination. The 0x0 determinant
/// is 1.
inline LaurentPoly det(const PolyMatrix& m) {
    int n = m.size();
    if (n == 0) return LaurentPoly::one();

    std::vector<std::vector<LaurentPoly>> w(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);

    int sign = 1;
    LaurentPoly prev = LaurentPoly::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (w[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!w[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) { pivot = r; break; }
            if (pivot < 0) return LaurentPoly::zero();
            std::swap(w[static_cast<size_t>(k)], w[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = w[static_cast<size_t>(i)][static_cast<size_t>(j)] * w[static_cast<size_t>(k)][static_cast<size_t>(k)]
                                - w[static_cast<size_t>(i)][static_cast<size_t>(k)] * w[static_cast<size_t>(k)][static_cast<size_t>(j)];
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] = divide_exact(num, prev);
            }
            w[static_cast<size_t>(i)][static_cast<size_t>(k)] = LaurentPoly::zero();
        }
        prev = w[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    LaurentPoly result = w[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
    return sign < 0 ? -result : result;
}

/// Determinant by cofactor expansion along the first row; independent of
/// the Bareiss route.
inline LaurentPoly det_cofactor(const PolyMatrix& m) {
    int n = m.size();
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return m.at(0, 0);
    LaurentPoly result;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        LaurentPoly term = m.at(0, j) * det_cofactor(minor);
        result = (j % 2 == 0) ? result + term : result - term;
    }
    return result;
}

}  // namespace ribbon
