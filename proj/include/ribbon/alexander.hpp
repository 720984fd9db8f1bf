#pragma once

// From the ribbon matrix to the half Alexander polynomial R(t) and the
// Conway-normalized Alexander polynomial Delta(t) = R(t) R(1/t).
//
// R(t) has three equivalent determinant expressions; half_alexander
// evaluates all of them and insists they agree, since a disagreement (or a
// failed division by 2^g) can only mean an implementation bug.

#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/laurent.hpp"
#include "ribbon/poly_matrix.hpp"

namespace ribbon {

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix zero_int_matrix(int n) {
    return IntMatrix(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
}

class DivisibilityViolation : public std::logic_error {
public:
    explicit DivisibilityViolation(const std::string& what) : std::logic_error(what) {}
};

/// The integral pair P = R - I/2, Q = R^T + I/2; always satisfies
/// Q = P^T + I.
struct PQPair {
    IntMatrix p;
    IntMatrix q;
};

namespace detail {

inline void require_ribbon_shape(const RibbonMatrix& r) {
    int n = r.genus;
    if (static_cast<int>(r.doubled.size()) != n) throw std::invalid_argument("doubled matrix has wrong row count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(r.doubled[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("doubled matrix is not square");
        for (int j = 0; j < n; ++j) {
            int v = r.doubled[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (i == j && v != 1 && v != -1)
                throw std::invalid_argument("doubled matrix diagonal entry is odd where +-1 is required");
            if (i != j && v % 2 != 0)
                throw std::invalid_argument("doubled matrix off-diagonal entry is odd where even is required");
        }
    }
}

}  // namespace detail

inline PQPair pq_from_ribbon(const RibbonMatrix& r) {
    detail::require_ribbon_shape(r);
    int n = r.genus;
    PQPair out{zero_int_matrix(n), zero_int_matrix(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = i == j ? 1 : 0;
            out.p[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (r.doubled[static_cast<size_t>(i)][static_cast<size_t>(j)] - d) / 2;
            out.q[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (r.doubled[static_cast<size_t>(j)][static_cast<size_t>(i)] + d) / 2;
        }
    return out;
}

/// R(t), computed as det((t-1)(2R) - (t+1)I) / 2^g and cross-checked
/// against det(tP - Q^T) and det((t-1)P - I).
inline LaurentPoly half_alexander(const RibbonMatrix& r) {
    detail::require_ribbon_shape(r);
    int n = r.genus;
    LaurentPoly tm1 = LaurentPoly::term(1, 1) - LaurentPoly::one();   // t - 1
    LaurentPoly tp1 = LaurentPoly::term(1, 1) + LaurentPoly::one();   // t + 1

    PolyMatrix scaled(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            scaled.at(i, j) = tm1 * LaurentPoly::constant(r.doubled[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (i == j) scaled.at(i, j) -= tp1;
        }
    LaurentPoly scaled_det = det(scaled);

    LaurentPoly half;
    coeff_t two_g = 1;
    for (int i = 0; i < n; ++i) two_g = checked_mul(two_g, 2);
    for (const auto& [e, c] : scaled_det.coeffs()) {
        if (c % two_g != 0)
            throw DivisibilityViolation("det((t-1)(2R)-(t+1)I) is not divisible by 2^" + std::to_string(n));
        half += LaurentPoly::term(c / two_g, e);
    }

    PQPair pq = pq_from_ribbon(r);
    PolyMatrix direct(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            direct.at(i, j) = LaurentPoly::term(pq.p[static_cast<size_t>(i)][static_cast<size_t>(j)], 1) -
                              LaurentPoly::constant(pq.q[static_cast<size_t>(j)][static_cast<size_t>(i)]);
    if (det_cofactor(direct) != half)
        throw std::logic_error("half Alexander routes disagree: det(tP-Q^T) vs scaled determinant");

    PolyMatrix third(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            third.at(i, j) = tm1 * LaurentPoly::constant(pq.p[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (i == j) third.at(i, j) -= LaurentPoly::one();
        }
    if (det(third) != half) throw std::logic_error("half Alexander routes disagree: det((t-1)P-I) vs scaled determinant");

    return half;
}

inline LaurentPoly conway_alexander(const LaurentPoly& half) { return half * half.reverse(); }

struct InvariantChecks {
    coeff_t delta_at_one = 0;
    coeff_t half_at_one = 0;
    coeff_t delta_at_minus_one = 0;
    bool symmetric = false;
};

struct AlexanderResult {
    int genus = 0;
    LaurentPoly half;
    LaurentPoly delta;
    InvariantChecks checks;
};

namespace detail {

inline coeff_t isqrt(coeff_t v) {
    if (v < 0) return -1;
    coeff_t lo = 0, hi = v < 2 ? v : v / 2 + 1;
    while (lo < hi) {
        coeff_t mid = lo + (hi - lo + 1) / 2;
        if (mid <= v / mid) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

}  // namespace detail

inline AlexanderResult analyze(const RibbonMatrix& r) {
    AlexanderResult out;
    out.genus = r.genus;
    out.half = half_alexander(r);
    out.delta = conway_alexander(out.half);
    out.checks.delta_at_one = out.delta.eval(1).num;
    out.checks.half_at_one = out.half.eval(1).num;
    out.checks.delta_at_minus_one = out.delta.eval(-1).num;
    out.checks.symmetric = out.delta == out.delta.reverse();
    return out;
}

struct InvariantReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Asserts the identities every ribbon-knot Delta must satisfy:
/// Delta(1) = 1, R(1) = (-1)^g, Delta(t) = Delta(1/t), and
/// Delta(-1) = R(-1)^2 a perfect square.
inline InvariantReport check_invariants(const AlexanderResult& res) {
    InvariantReport rep;
    auto fail = [&rep](const std::string& why) {
        rep.ok = false;
        rep.violations.push_back(why);
    };
    if (res.checks.delta_at_one != 1)
        fail("delta(1) = " + coeff_to_string(res.checks.delta_at_one) + ", expected 1");
    coeff_t want = res.genus % 2 == 0 ? 1 : -1;
    if (res.checks.half_at_one != want)
        fail("half(1) = " + coeff_to_string(res.checks.half_at_one) + ", expected (-1)^genus = " + coeff_to_string(want));
    if (!res.checks.symmetric) fail("delta(t) != delta(1/t)");
    coeff_t dm1 = res.checks.delta_at_minus_one;
    coeff_t rm1 = res.half.eval(-1).num;
    if (dm1 != checked_mul(rm1, rm1))
        fail("delta(-1) = " + coeff_to_string(dm1) + " is not half(-1)^2 = " + coeff_to_string(checked_mul(rm1, rm1)));
    if (dm1 < 0 || detail::isqrt(dm1) * detail::isqrt(dm1) != dm1)
        fail("delta(-1) = " + coeff_to_string(dm1) + " is not a perfect square");
    return rep;
}

/// Key-value report lines in the canonical polynomial text form.
inline std::string format_report(const AlexanderResult& res) {
    coeff_t dm1 = res.checks.delta_at_minus_one;
    coeff_t mag = dm1 < 0 ? -dm1 : dm1;
    std::string out;
    out += "half = " + res.half.to_string() + "\n";
    out += "delta = " + res.delta.to_string() + "\n";
    out += "delta(1) = " + coeff_to_string(res.checks.delta_at_one) + "\n";
    out += "det = " + coeff_to_string(mag) + "\n";
    out += "det_sqrt = " + coeff_to_string(detail::isqrt(mag)) + "\n";
    return out;
}

}  // namespace ribbon
