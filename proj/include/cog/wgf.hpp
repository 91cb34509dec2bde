#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cog/errors.hpp"
#include "cog/lincode.hpp"
#include "cog/matrix.hpp"
#include "cog/polynomial.hpp"
#include "cog/tensor.hpp"

// Weight generating functions, weight adjacency matrices, and the MacWilliams
// transforms that carry them to the dual code.  Canonical indeterminates:
//   exact     x[k][a]   (position k, symbol label a)
//   complete  x[c]      (scalar value c)
//   hamming   x         (with homogenizing partner y)
// Duals use the uppercase prefix (X[k][a], X[c], X, Y).

namespace cog {

enum class WgfKind { exact, complete, hamming };

inline const char* wgf_kind_name(WgfKind k) {
    switch (k) {
        case WgfKind::exact:    return "exact";
        case WgfKind::complete: return "complete";
        case WgfKind::hamming:  return "hamming";
    }
    return "?";
}

inline std::string exact_var(std::size_t k, const Alphabet& a, const Vec& v, bool dual = false) {
    return std::string(dual ? "X[" : "x[") + std::to_string(k) + "][" + vec_label(a, v) + "]";
}
inline std::string complete_var(residue c, bool dual = false) {
    return std::string(dual ? "X[" : "x[") + std::to_string(c) + "]";
}

// monomial of a single codeword
inline Polynomial word_monomial(std::uint32_t p, const std::vector<std::uint32_t>& profile,
                                const std::vector<residue>& w, WgfKind kind,
                                LinearCode::WeightGranularity gran) {
    Monomial m;
    std::size_t off = 0;
    for (std::size_t k = 0; k < profile.size(); ++k) {
        std::uint32_t d = profile[k];
        if (kind == WgfKind::exact) {
            if (d > 0) {
                Alphabet a(p, d);
                Vec v(w.begin() + off, w.begin() + off + d);
                m[exact_var(k, a, v)] += 1;
            }
        } else if (kind == WgfKind::complete) {
            for (std::size_t i = 0; i < d; ++i) m[complete_var(w[off + i])] += 1;
        } else {
            if (gran == LinearCode::WeightGranularity::scalar) {
                for (std::size_t i = 0; i < d; ++i)
                    if (w[off + i] != 0) m["x"] += 1;
            } else {
                bool nz = false;
                for (std::size_t i = 0; i < d; ++i) nz |= w[off + i] != 0;
                if (nz) m["x"] += 1;
            }
        }
        off += d;
    }
    Polynomial f(p);
    f.add_term(m, CycloRational(p, 1));
    return f;
}

inline Polynomial wgf(const LinearCode& C, WgfKind kind,
                      LinearCode::WeightGranularity gran = LinearCode::WeightGranularity::scalar,
                      std::uint64_t cap = kDefaultEnumCap) {
    Polynomial g(C.p());
    C.enumerate(
        [&](const std::vector<residue>& w) {
            g += word_monomial(C.p(), C.profile(), w, kind, gran);
        },
        cap);
    return g;
}

inline Polynomial hwgf_from_distribution(std::uint32_t p, const std::vector<std::uint64_t>& counts) {
    Polynomial g(p);
    for (std::size_t w = 0; w < counts.size(); ++w) {
        if (!counts[w]) continue;
        Monomial m;
        if (w) m["x"] = (std::uint32_t)w;
        g.add_term(m, CycloRational(p, Rational((unsigned long)counts[w])));
    }
    return g;
}

// ---------------------------------------------------------------------------
// MacWilliams transform of a weight generating function.

struct MacwilliamsWgf {
    Polynomial result;  // normalized: equals the dual code's WGF for genuine inputs
    Rational witness;   // raw transform == witness * result  (witness = g(1) = |C|)
};

namespace detail {

inline std::map<std::string, Polynomial> exact_substitution(std::uint32_t p,
                                                            const std::vector<std::uint32_t>& profile) {
    std::map<std::string, Polynomial> sub;
    for (std::size_t k = 0; k < profile.size(); ++k) {
        if (profile[k] == 0) continue;
        Alphabet a(p, profile[k]);
        PrimeField f(p);
        for (std::uint64_t ai = 0; ai < a.size(); ++ai) {
            Vec av = index_vec(a, ai);
            Polynomial rhs(p);
            for (std::uint64_t bi = 0; bi < a.size(); ++bi) {
                Vec bv = index_vec(a, bi);
                rhs += Polynomial::variable(p, exact_var(k, a, bv, true)) *
                       CycloRational::omega_pow(p, -(std::int64_t)inner(f, bv, av));
            }
            sub.emplace(exact_var(k, a, av), std::move(rhs));
        }
    }
    return sub;
}

inline std::map<std::string, Polynomial> complete_substitution(std::uint32_t p) {
    std::map<std::string, Polynomial> sub;
    for (residue c = 0; c < p; ++c) {
        Polynomial rhs(p);
        for (residue ch = 0; ch < p; ++ch)
            rhs += Polynomial::variable(p, complete_var(ch, true)) *
                   CycloRational::omega_pow(p, -(std::int64_t)((std::uint64_t)c * ch % p));
        sub.emplace(complete_var(c), std::move(rhs));
    }
    return sub;
}

// homogenize a polynomial in x (and possibly y) to total degree n with y
inline Polynomial homogenize_xy(const Polynomial& g, std::uint64_t n) {
    Polynomial out(g.p());
    for (const auto& [m, c] : g.terms()) {
        std::uint64_t d = 0;
        Monomial nm;
        for (const auto& [name, e] : m) {
            require(name == "x" || name == "y", errc::invalid_argument,
                    "hamming polynomial may only involve x and y");
            d += e;
            nm[name] += e;
        }
        require(d <= n, errc::invalid_argument, "hamming polynomial degree exceeds length");
        if (d < n) nm["y"] += (std::uint32_t)(n - d);
        out.add_term(nm, c);
    }
    return out;
}

// x -> Y - X, y -> Y + (q-1) X
inline std::map<std::string, Polynomial> hamming_substitution(std::uint32_t p, std::uint64_t q) {
    Polynomial X = Polynomial::variable(p, "X"), Y = Polynomial::variable(p, "Y");
    std::map<std::string, Polynomial> sub;
    sub.emplace("x", Y - X);
    sub.emplace("y", Y + X * Rational((long)q - 1));
    return sub;
}

inline Rational positive_rational_witness(const CycloRational& v) {
    if (v.is_rational() && v.rational_value() > 0) return v.rational_value();
    return Rational(1);
}

} // namespace detail

// The substitution x <- conj(F) X per coordinate (exact/complete) or the
// homogeneous Hamming substitution, normalized by the all-ones evaluation so
// that genuine code enumerators map exactly onto the dual code's enumerator.
inline MacwilliamsWgf macwilliams_wgf(const Polynomial& g, WgfKind kind,
                                      const std::vector<std::uint32_t>& profile,
                                      std::uint32_t q_override = 0) {
    std::uint32_t p = g.p();
    Polynomial raw(p);
    if (kind == WgfKind::exact) {
        raw = g.substituted(detail::exact_substitution(p, profile));
    } else if (kind == WgfKind::complete) {
        raw = g.substituted(detail::complete_substitution(p));
    } else {
        std::uint64_t n = 0;
        for (auto d : profile) n += d;
        std::uint64_t q = q_override ? q_override : p;
        Polynomial hom = detail::homogenize_xy(g, n);
        Polynomial t = hom.substituted(detail::hamming_substitution(p, q));
        raw = t.substituted({{"Y", Polynomial(p, 1L)}});
    }
    Rational witness = detail::positive_rational_witness(g.at_all_ones());
    Polynomial result = raw;
    Rational inv = 1 / witness;
    result *= inv;
    return {std::move(result), witness};
}

// ---------------------------------------------------------------------------
// Weight adjacency matrices.

struct WeightAdjacencyMatrix {
    WgfKind kind = WgfKind::hamming;
    std::uint32_t p = 2;
    Alphabet row_state, col_state, symbol;
    std::vector<Vec> row_labels, col_labels; // state order of rows/cols
    Matrix<Polynomial> m;

    bool operator==(const WeightAdjacencyMatrix&) const = default;
};

inline std::vector<Vec> lex_state_order(const Alphabet& s) {
    std::vector<Vec> v;
    for (std::uint64_t i = 0; i < s.size(); ++i) v.push_back(index_vec(s, i));
    return v;
}

inline void check_state_order(const Alphabet& s, const std::vector<Vec>& order) {
    require(order.size() == s.size(), errc::invalid_argument, "state order has wrong size");
    std::vector<bool> seen(order.size(), false);
    for (const auto& v : order) {
        std::uint64_t i = vec_index(s, v);
        require(!seen[(std::size_t)i], errc::invalid_argument, "state order repeats a state");
        seen[(std::size_t)i] = true;
    }
}

inline Rational wam_all_ones_total(const WeightAdjacencyMatrix& w) {
    CycloRational s(w.p);
    for (std::size_t i = 0; i < w.m.rows(); ++i)
        for (std::size_t j = 0; j < w.m.cols(); ++j) s += w.m.at(i, j).at_all_ones();
    return detail::positive_rational_witness(s);
}

struct MacwilliamsWam {
    WeightAdjacencyMatrix result;
    Rational witness;
};

// Sandwich conj(F_S) * Lambda(x <- conj(F) X) * F_S', normalized by the
// all-ones total (= |constraint code| for genuine WAMs).  The column-side
// forward kernel absorbs the sign inverter convention, so the result is the
// WAM of the dual trellis section.
inline MacwilliamsWam macwilliams_wam(const WeightAdjacencyMatrix& w) {
    std::uint32_t p = w.p;
    Polynomial zero(p);

    Matrix<Polynomial> inner_m(w.m.rows(), w.m.cols(), zero);
    if (w.kind == WgfKind::exact) {
        auto sub = detail::exact_substitution(p, {w.symbol.dim});
        for (std::size_t i = 0; i < w.m.rows(); ++i)
            for (std::size_t j = 0; j < w.m.cols(); ++j)
                inner_m.at(i, j) = w.m.at(i, j).substituted(sub);
    } else if (w.kind == WgfKind::complete) {
        auto sub = detail::complete_substitution(p);
        for (std::size_t i = 0; i < w.m.rows(); ++i)
            for (std::size_t j = 0; j < w.m.cols(); ++j)
                inner_m.at(i, j) = w.m.at(i, j).substituted(sub);
    } else {
        auto sub = detail::hamming_substitution(p, p);
        std::map<std::string, Polynomial> dehom{{"Y", Polynomial(p, 1L)}};
        for (std::size_t i = 0; i < w.m.rows(); ++i)
            for (std::size_t j = 0; j < w.m.cols(); ++j) {
                Polynomial hom = detail::homogenize_xy(w.m.at(i, j), w.symbol.dim);
                inner_m.at(i, j) = hom.substituted(sub).substituted(dehom);
            }
    }

    PrimeField f(p);
    auto kernel = [&](const std::vector<Vec>& labels, bool conj) {
        Matrix<CycloRational> k(labels.size(), labels.size(), CycloRational(p));
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j) {
                std::int64_t e = inner(f, labels[i], labels[j]);
                k.at(i, j) = CycloRational::omega_pow(p, conj ? -e : e);
            }
        return k;
    };
    auto Krow = kernel(w.row_labels, true);   // conj(F_S)
    auto Kcol = kernel(w.col_labels, false);  // F_S'

    Matrix<Polynomial> left(w.m.rows(), w.m.cols(), zero);
    for (std::size_t i = 0; i < w.m.rows(); ++i)
        for (std::size_t k = 0; k < w.m.rows(); ++k) {
            if (Krow.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < w.m.cols(); ++j)
                left.at(i, j) += inner_m.at(k, j) * Krow.at(i, k);
        }
    Matrix<Polynomial> out(w.m.rows(), w.m.cols(), zero);
    for (std::size_t i = 0; i < w.m.rows(); ++i)
        for (std::size_t k = 0; k < w.m.cols(); ++k)
            for (std::size_t j = 0; j < w.m.cols(); ++j) {
                if (Kcol.at(k, j).is_zero()) continue;
                out.at(i, j) += left.at(i, k) * Kcol.at(k, j);
            }

    Rational witness = wam_all_ones_total(w);
    Rational inv = 1 / witness;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) *= inv;

    WeightAdjacencyMatrix res{w.kind, p, w.row_state, w.col_state, w.symbol,
                              w.row_labels, w.col_labels, std::move(out)};
    return {std::move(res), witness};
}

// map dual-prefixed names back: X... -> x..., Y -> y
inline std::string dual_to_primal_name(const std::string& name) {
    if (!name.empty() && name[0] == 'X') return "x" + name.substr(1);
    if (name == "Y") return "y";
    return name;
}

inline Polynomial rename_dual_to_primal(const Polynomial& g) {
    return g.renamed(dual_to_primal_name);
}

inline WeightAdjacencyMatrix rename_dual_to_primal(WeightAdjacencyMatrix w) {
    for (std::size_t i = 0; i < w.m.rows(); ++i)
        for (std::size_t j = 0; j < w.m.cols(); ++j)
            w.m.at(i, j) = rename_dual_to_primal(w.m.at(i, j));
    return w;
}

} // namespace cog
