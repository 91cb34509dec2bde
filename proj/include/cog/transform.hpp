#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cog/cyclo.hpp"
#include "cog/errors.hpp"
#include "cog/lincode.hpp"
#include "cog/matrix.hpp"
#include "cog/prime_field.hpp"
#include "cog/tensor.hpp"

// Fourier transforms over finite vector alphabets: kernel matrices, function
// transforms, the kernel identity suite, and the Poisson summation check.

namespace cog {

// transform of a function A -> Q(w) given as a unary tensor
inline FactorTensor<CycloRational> transform_function(const FactorTensor<CycloRational>& f,
                                                      Flavor flavor = Flavor::forward) {
    require(f.axes.size() == 1, errc::arity_mismatch, "transform_function expects a unary factor");
    return fourier_axis(f, 0, flavor, CycloRational(f.axes[0].p));
}

// inverse of the forward transform: conjugate kernel divided by |A|
inline FactorTensor<CycloRational> inverse_transform_function(const FactorTensor<CycloRational>& f) {
    auto g = transform_function(f, Flavor::conjugate);
    Rational inv(1);
    inv /= (long)f.axes[0].size();
    for (auto& v : g.table) v *= inv;
    return g;
}

// 0/1 indicator of a subspace B of (Z_p)^m given as a length-m code
inline FactorTensor<CycloRational> indicator_tensor(const LinearCode& B) {
    Alphabet a(B.p(), (std::uint32_t)B.n());
    auto t = make_tensor(std::vector<Alphabet>{a}, CycloRational(B.p()));
    CycloRational one(B.p(), 1);
    B.enumerate([&](const std::vector<residue>& w) { t.table[(std::size_t)vec_index(a, w)] = one; });
    return t;
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::optional<Rational> witness; // alpha in lhs == alpha * rhs
};

struct IdentitySuiteReport {
    Alphabet alphabet;
    std::vector<IdentityCheck> checks;
    bool pass = true;
};

namespace detail {

inline std::optional<Rational> cyclo_matrix_scale_equal(const Matrix<CycloRational>& f,
                                                        const Matrix<CycloRational>& g,
                                                        std::uint32_t p) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) return std::nullopt;
    std::optional<Rational> alpha;
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const auto& fv = f.at(i, j);
            const auto& gv = g.at(i, j);
            if (fv.is_zero() && gv.is_zero()) continue;
            if (fv.is_zero() || gv.is_zero()) return std::nullopt;
            std::optional<Rational> a;
            for (std::size_t s = 0; s < (std::size_t)(p - 1); ++s)
                if (gv.coeff(s) != 0) {
                    a = fv.coeff(s) / gv.coeff(s);
                    break;
                }
            if (!a || *a <= 0) return std::nullopt;
            CycloRational scaled = gv;
            scaled *= *a;
            if (!(scaled == fv)) return std::nullopt;
            if (alpha && *alpha != *a) return std::nullopt;
            alpha = a;
        }
    return alpha ? alpha : std::optional<Rational>(Rational(1));
}

} // namespace detail

// F* F = |A| I;  F^2 = |A| * sign inverter;  F^3 = |A| F*;  F^4 = |A|^2 I.
inline IdentitySuiteReport verify_identity_suite(const Alphabet& a) {
    std::uint32_t p = a.p;
    CycloRational zero(p), one(p, 1);
    std::size_t n = (std::size_t)a.size();
    auto F = fourier_matrix(a, Flavor::forward);
    auto Fc = fourier_matrix(a, Flavor::conjugate);
    Matrix<CycloRational> I(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = one;
    Matrix<CycloRational> P(n, n, zero); // sign inverter as a matrix
    {
        auto t = sign_inverter_tensor(a, zero, one);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) P.at(i, j) = t.table[i + n * j];
    }

    auto F2 = mat_mul(F, F, zero);
    auto F3 = mat_mul(F2, F, zero);
    auto F4 = mat_mul(F3, F, zero);

    IdentitySuiteReport rep{a, {}, true};
    auto add = [&](const std::string& name, const Matrix<CycloRational>& lhs,
                   const Matrix<CycloRational>& rhs) {
        auto w = detail::cyclo_matrix_scale_equal(lhs, rhs, p);
        rep.checks.push_back({name, w.has_value(), w});
        rep.pass = rep.pass && w.has_value();
    };
    add("conj(F)*F = |A| I", mat_mul(Fc, F, zero), I);
    add("F^2 = |A| sign_inverter", F2, P);
    add("F^3 = |A| conj(F)", F3, Fc);
    add("F^4 = |A|^2 I", F4, I);
    return rep;
}

struct PoissonReport {
    CycloRational lhs;       // sum over B-perp of the forward transform of f
    CycloRational rhs_sum;   // sum over B of f
    Rational witness;        // |B-perp|
    bool pass = false;
    std::string convention = "sum_{bhat in Bperp} F(bhat) == |Bperp| * sum_{b in B} f(b), F forward";
};

// Exact Poisson summation for f: A -> Q(w) and a subspace B <= A.
inline PoissonReport poisson_check(const FactorTensor<CycloRational>& f, const LinearCode& B) {
    require(f.axes.size() == 1, errc::arity_mismatch, "poisson_check expects a unary factor");
    const Alphabet& a = f.axes[0];
    require(B.p() == a.p && B.n() == a.dim, errc::alphabet_mismatch,
            "subspace does not live in the factor's alphabet");
    std::uint32_t p = a.p;

    CycloRational rhs(p);
    B.enumerate([&](const std::vector<residue>& w) {
        rhs += f.table[(std::size_t)vec_index(a, w)];
    });

    auto F = transform_function(f, Flavor::forward);
    CycloRational lhs(p);
    B.dual().enumerate([&](const std::vector<residue>& w) {
        lhs += F.table[(std::size_t)vec_index(a, w)];
    });

    Rational witness((long)B.dual().size());
    CycloRational scaled = rhs;
    scaled *= witness;
    return PoissonReport{lhs, rhs, witness, lhs == scaled};
}

} // namespace cog
