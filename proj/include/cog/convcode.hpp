#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cog/errors.hpp"
#include "cog/lincode.hpp"
#include "cog/matrix.hpp"
#include "cog/polynomial.hpp"
#include "cog/wgf.hpp"

// Trellis sections of (time-invariant) convolutional codes: the constraint
// code lives on (S, A, S') with profile {state_dim, symbol_dim, state_dim}.
// Terminations produce block codes; weight adjacency matrices produce
// generating functions and distance spectra.

namespace cog {

struct TrellisSection {
    LinearCode code; // profile = {in_dim, symbol_dim, out_dim}

    std::uint32_t p() const { return code.p(); }
    Alphabet state_in() const { return code.symbol_alphabet(0); }
    Alphabet symbol() const { return code.symbol_alphabet(1); }
    Alphabet state_out() const { return code.symbol_alphabet(2); }

    static TrellisSection from_code(LinearCode c) {
        require(c.profile().size() == 3, errc::invalid_argument,
                "trellis section needs profile (state, symbol, state)");
        return {std::move(c)};
    }
    bool operator==(const TrellisSection&) const = default;
};

// Shift-register (controller canonical) realization of a polynomial encoder.
// responses[j] = impulse response of input j: symbols b_0..b_nu; the state
// allocates input j's registers consecutively, ages 1..nu_j.
inline TrellisSection section_from_generators(std::uint32_t p,
                                              std::vector<std::vector<Vec>> responses) {
    require(!responses.empty(), errc::invalid_argument, "encoder needs at least one input");
    std::size_t n = 0;
    for (auto& resp : responses) {
        require(!resp.empty(), errc::invalid_argument, "empty impulse response");
        if (n == 0) n = resp[0].size();
        for (auto& sym : resp) {
            require(sym.size() == n && n > 0, errc::invalid_argument,
                    "impulse response symbols must share one nonzero width");
            for (auto& c : sym) c %= p;
        }
        while (resp.size() > 1 && vec_is_zero(resp.back())) resp.pop_back();
        require(!(resp.size() == 1 && vec_is_zero(resp[0])), errc::invalid_argument,
                "impulse response is identically zero");
    }

    std::size_t sigma = 0;
    for (const auto& resp : responses) sigma += resp.size() - 1;

    std::vector<std::vector<residue>> rows;
    std::size_t offset = 0;
    for (const auto& resp : responses) {
        std::size_t nu = resp.size() - 1;
        for (std::size_t t = 0; t <= nu; ++t) {
            std::vector<residue> row(sigma + n + sigma, 0);
            if (t >= 1) row[offset + t - 1] = 1;                    // state entering age t
            for (std::size_t i = 0; i < n; ++i) row[sigma + i] = resp[t][i];
            if (t + 1 <= nu) row[sigma + n + offset + t] = 1;        // state entering age t+1
            rows.push_back(std::move(row));
        }
        offset += nu;
    }
    return TrellisSection::from_code(LinearCode::from_generators(
        p, {(std::uint32_t)sigma, (std::uint32_t)n, (std::uint32_t)sigma}, std::move(rows)));
}

// Dual trellis section: the dual constraint code with the departing-state
// coordinates negated (the mid-edge sign inverter absorbed into S').
// Orthogonal code of the constraint code, partitioned the same way.  Its
// generators are (s-hat, a-hat, -s'-hat) transitions: the out-state block
// carries the negative of the next dual state, so chaining dual sections
// needs the sign inverters absorbed first (negate_out_state); over F_2 the
// inverters vanish.
inline TrellisSection dual_section(const TrellisSection& s) {
    return TrellisSection::from_code(s.code.dual());
}

// Fold a mid-edge sign inverter into the section by negating the out-state
// block, so that plain state sharing composes the section correctly.
inline TrellisSection negate_out_state(const TrellisSection& s) {
    PrimeField f(s.p());
    std::size_t in_dim = s.state_in().dim, n = s.symbol().dim;
    std::vector<std::vector<residue>> rows = s.code.basis();
    for (auto& row : rows)
        for (std::size_t i = in_dim + n; i < row.size(); ++i) row[i] = f.neg(row[i]);
    return TrellisSection::from_code(
        LinearCode::from_generators(s.p(), s.code.profile(), std::move(rows)));
}

inline TrellisSection time_reverse(const TrellisSection& s) {
    std::size_t in = s.state_in().dim, n = s.symbol().dim, out = s.state_out().dim;
    std::vector<std::vector<residue>> rows;
    for (const auto& b : s.code.basis()) {
        std::vector<residue> row;
        row.insert(row.end(), b.begin() + (long)(in + n), b.end());
        row.insert(row.end(), b.begin() + (long)in, b.begin() + (long)(in + n));
        row.insert(row.end(), b.begin(), b.begin() + (long)in);
        rows.push_back(std::move(row));
    }
    return TrellisSection::from_code(LinearCode::from_generators(
        s.p(), {(std::uint32_t)out, (std::uint32_t)n, (std::uint32_t)in}, std::move(rows)));
}

// Weight adjacency matrix: entry (s, s') = WGF of the symbols on transitions
// s -> s'.  Default state order is the enumeration order; other orders can
// be supplied explicitly.
inline WeightAdjacencyMatrix wam(const TrellisSection& sec, WgfKind kind,
                                 std::optional<std::vector<Vec>> row_order = std::nullopt,
                                 std::optional<std::vector<Vec>> col_order = std::nullopt,
                                 std::uint64_t cap = kDefaultEnumCap) {
    Alphabet si = sec.state_in(), a = sec.symbol(), so = sec.state_out();
    std::vector<Vec> rows = row_order ? *row_order : lex_state_order(si);
    std::vector<Vec> cols = col_order ? *col_order : lex_state_order(so);
    check_state_order(si, rows);
    check_state_order(so, cols);

    std::vector<std::size_t> rpos((std::size_t)si.size()), cpos((std::size_t)so.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rpos[(std::size_t)vec_index(si, rows[i])] = i;
    for (std::size_t j = 0; j < cols.size(); ++j) cpos[(std::size_t)vec_index(so, cols[j])] = j;

    std::uint32_t p = sec.p();
    WeightAdjacencyMatrix w{kind, p, si, so, a, rows, cols,
                            Matrix<Polynomial>(rows.size(), cols.size(), Polynomial(p))};
    std::size_t in = si.dim, n = a.dim;
    sec.code.enumerate(
        [&](const std::vector<residue>& word) {
            Vec s(word.begin(), word.begin() + (long)in);
            std::vector<residue> sym(word.begin() + (long)in, word.begin() + (long)(in + n));
            Vec t(word.begin() + (long)(in + n), word.end());
            w.m.at(rpos[(std::size_t)vec_index(si, s)], cpos[(std::size_t)vec_index(so, t)]) +=
                word_monomial(p, {(std::uint32_t)n}, sym, kind,
                              LinearCode::WeightGranularity::scalar);
        },
        cap);
    return w;
}

inline WeightAdjacencyMatrix wam_power(const WeightAdjacencyMatrix& w, std::size_t N,
                                       std::optional<std::uint64_t> dmax = std::nullopt) {
    require(w.row_state == w.col_state && w.row_labels == w.col_labels, errc::invalid_argument,
            "powers need matching row/column state orders");
    Polynomial zero(w.p);
    auto mul = [&](const Polynomial& a, const Polynomial& b) {
        return Polynomial::multiply_truncated(a, b, dmax);
    };
    Matrix<Polynomial> acc(w.m.rows(), w.m.rows(), zero);
    for (std::size_t i = 0; i < acc.rows(); ++i) acc.at(i, i) = Polynomial(w.p, 1L);
    for (std::size_t i = 0; i < N; ++i) acc = mat_mul(acc, w.m, zero, mul);
    WeightAdjacencyMatrix out = w;
    out.m = std::move(acc);
    return out;
}

enum class Termination { subcode, projection, truncated, reverse_truncated, tailbiting };

inline const char* termination_name(Termination t) {
    switch (t) {
        case Termination::subcode:           return "subcode";
        case Termination::projection:        return "projection";
        case Termination::truncated:         return "truncated";
        case Termination::reverse_truncated: return "reverse_truncated";
        case Termination::tailbiting:        return "tailbiting";
    }
    return "?";
}

// Block code over N sections: solve the chained constraint system on
// (s_0, a_0, s_1, ..., a_{N-1}, s_N) with the mode's boundary conditions and
// project the behavior onto the symbol coordinates.
inline LinearCode chain_code(std::span<const TrellisSection> sections, Termination mode,
                             std::size_t max_coords = 4096) {
    require(!sections.empty(), errc::invalid_argument, "termination needs N >= 1 sections");
    std::uint32_t p = sections[0].p();
    std::size_t N = sections.size();
    for (std::size_t t = 0; t + 1 < N; ++t)
        require(sections[t].state_out() == sections[t + 1].state_in(), errc::alphabet_mismatch,
                "adjacent sections disagree on the state alphabet");
    if (mode == Termination::tailbiting)
        require(sections[0].state_in() == sections[N - 1].state_out(), errc::alphabet_mismatch,
                "tail-biting needs matching end state alphabets");

    // coordinate offsets: s_0 | a_0 | s_1 | ... | a_{N-1} | s_N
    std::vector<std::size_t> s_off(N + 1), a_off(N);
    std::size_t L = 0;
    for (std::size_t t = 0; t < N; ++t) {
        s_off[t] = L;
        L += sections[t].state_in().dim;
        a_off[t] = L;
        L += sections[t].symbol().dim;
    }
    s_off[N] = L;
    L += sections[N - 1].state_out().dim;
    require(L <= max_coords, errc::cap_exceeded,
            "termination system has " + std::to_string(L) + " coordinates (cap " +
                std::to_string(max_coords) + ")");

    PrimeField f(p);
    std::vector<std::vector<residue>> constraints;
    for (std::size_t t = 0; t < N; ++t) {
        LinearCode H = sections[t].code.dual();
        std::size_t in = sections[t].state_in().dim, n = sections[t].symbol().dim,
                    out = sections[t].state_out().dim;
        for (const auto& h : H.basis()) {
            std::vector<residue> row(L, 0);
            for (std::size_t i = 0; i < in; ++i) row[s_off[t] + i] = h[i];
            for (std::size_t i = 0; i < n; ++i) row[a_off[t] + i] = h[in + i];
            for (std::size_t i = 0; i < out; ++i) row[s_off[t + 1] + i] = h[in + n + i];
            constraints.push_back(std::move(row));
        }
    }
    auto pin_zero = [&](std::size_t off, std::size_t dim) {
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<residue> row(L, 0);
            row[off + i] = 1;
            constraints.push_back(std::move(row));
        }
    };
    std::size_t dim0 = sections[0].state_in().dim, dimN = sections[N - 1].state_out().dim;
    switch (mode) {
        case Termination::subcode:
            pin_zero(s_off[0], dim0);
            pin_zero(s_off[N], dimN);
            break;
        case Termination::truncated:
            pin_zero(s_off[0], dim0);
            break;
        case Termination::reverse_truncated:
            pin_zero(s_off[N], dimN);
            break;
        case Termination::tailbiting:
            for (std::size_t i = 0; i < dim0; ++i) {
                std::vector<residue> row(L, 0);
                row[s_off[0] + i] = 1;
                row[s_off[N] + i] = f.neg(1);
                constraints.push_back(std::move(row));
            }
            break;
        case Termination::projection:
            break;
    }

    LinearCode behavior =
        LinearCode::from_generators(p, {(std::uint32_t)L}, std::move(constraints)).dual();

    std::vector<std::uint32_t> profile;
    for (std::size_t t = 0; t < N; ++t) profile.push_back(sections[t].symbol().dim);
    std::vector<std::vector<residue>> gens;
    for (const auto& b : behavior.basis()) {
        std::vector<residue> g;
        for (std::size_t t = 0; t < N; ++t)
            g.insert(g.end(), b.begin() + (long)a_off[t],
                     b.begin() + (long)(a_off[t] + sections[t].symbol().dim));
        gens.push_back(std::move(g));
    }
    return LinearCode::from_generators(p, std::move(profile), std::move(gens));
}

inline LinearCode terminate(const TrellisSection& s, std::size_t N, Termination mode,
                            std::size_t max_coords = 4096) {
    require(s.state_in() == s.state_out(), errc::invalid_argument,
            "time-invariant termination needs matching state alphabets");
    std::vector<TrellisSection> copies(N, s);
    return chain_code(copies, mode, max_coords);
}

// Extract the mode's Hamming WGF from a powered WAM.
inline Polynomial terminated_hwgf(const WeightAdjacencyMatrix& lambdaN, Termination mode) {
    require(lambdaN.kind == WgfKind::hamming, errc::invalid_argument,
            "terminated_hwgf expects a Hamming WAM");
    Polynomial zero(lambdaN.p);
    auto find_zero = [&](const std::vector<Vec>& labels, const Alphabet& a) {
        Vec z(a.dim, 0);
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == z) return i;
        fail(errc::invalid_argument, "zero state missing from state order");
    };
    std::size_t r0 = find_zero(lambdaN.row_labels, lambdaN.row_state);
    std::size_t c0 = find_zero(lambdaN.col_labels, lambdaN.col_state);
    Polynomial acc = zero;
    switch (mode) {
        case Termination::subcode:
            return lambdaN.m.at(r0, c0);
        case Termination::projection:
            for (std::size_t i = 0; i < lambdaN.m.rows(); ++i)
                for (std::size_t j = 0; j < lambdaN.m.cols(); ++j) acc += lambdaN.m.at(i, j);
            return acc;
        case Termination::truncated:
            for (std::size_t j = 0; j < lambdaN.m.cols(); ++j) acc += lambdaN.m.at(r0, j);
            return acc;
        case Termination::reverse_truncated:
            for (std::size_t i = 0; i < lambdaN.m.rows(); ++i) acc += lambdaN.m.at(i, c0);
            return acc;
        case Termination::tailbiting:
            require(lambdaN.row_labels == lambdaN.col_labels, errc::invalid_argument,
                    "tail-biting trace needs matching state orders");
            return mat_trace(lambdaN.m, zero);
    }
    fail(errc::invalid_argument, "unknown termination mode");
}

// The all-zero symbol sequence must ride only the all-zero state sequence:
// the zero-symbol transition graph, minus the 0->0 self-loop, must be acyclic.
inline bool zero_state_unique(const TrellisSection& s, std::uint64_t cap = kDefaultEnumCap) {
    require(s.state_in() == s.state_out(), errc::invalid_argument,
            "zero-state check needs matching state alphabets");
    Alphabet st = s.state_in();
    std::size_t M = (std::size_t)st.size();
    std::vector<std::vector<std::size_t>> adj(M);
    std::size_t in = st.dim, n = s.symbol().dim;
    s.code.enumerate(
        [&](const std::vector<residue>& w) {
            for (std::size_t i = 0; i < n; ++i)
                if (w[in + i] != 0) return;
            Vec a(w.begin(), w.begin() + (long)in);
            Vec b(w.begin() + (long)(in + n), w.end());
            std::size_t ia = (std::size_t)vec_index(st, a), ib = (std::size_t)vec_index(st, b);
            if (ia == 0 && ib == 0) return; // the all-zero transition
            adj[ia].push_back(ib);
        },
        cap);
    // cycle detection by coloring
    std::vector<int> color(M, 0);
    std::vector<std::size_t> stack;
    for (std::size_t s0 = 0; s0 < M; ++s0) {
        if (color[s0]) continue;
        stack.push_back(s0);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            if (color[v] == 0) {
                color[v] = 1;
                for (auto u : adj[v]) {
                    if (color[u] == 1) return false;
                    if (color[u] == 0) stack.push_back(u);
                }
            } else {
                if (color[v] == 1) color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

struct Spectrum {
    std::map<std::uint64_t, Rational> counts; // weight -> count, zeros omitted
    bool operator==(const Spectrum&) const = default;
};

inline std::optional<std::uint64_t> d_free(const Spectrum& s) {
    for (const auto& [w, c] : s.counts)
        if (w > 0 && c != 0) return w;
    return std::nullopt;
}

namespace detail {

inline Spectrum spectrum_from_poly(const Polynomial& g, bool drop_zero_weight) {
    Spectrum s;
    for (const auto& [m, c] : g.terms()) {
        std::uint64_t w = monomial_degree(m);
        if (drop_zero_weight && w == 0) continue;
        require(c.is_rational(), errc::invalid_argument, "spectrum coefficients must be rational");
        if (c.rational_value() != 0) s.counts[w] = c.rational_value();
    }
    return s;
}

} // namespace detail

// First-return series at the zero state through the transfer-function method,
// computed in the ring truncated past x^dmax.
inline Spectrum free_distance_spectrum(const TrellisSection& s, std::uint64_t dmax,
                                       std::uint64_t cap = kDefaultEnumCap) {
    require(zero_state_unique(s, cap), errc::precondition_failed,
            "zero state sequence is not unique; transfer method does not converge");
    auto w = wam(s, WgfKind::hamming, std::nullopt, std::nullopt, cap);
    std::size_t M = w.m.rows();
    Polynomial zero(w.p), one(w.p, 1L);
    auto trunc = [&](const Polynomial& f) { return f.truncated(dmax); };

    Polynomial total = trunc(w.m.at(0, 0)) - one; // direct nonzero returns
    if (M > 1) {
        std::vector<Polynomial> v; // column below the zero state
        for (std::size_t i = 1; i < M; ++i) v.push_back(trunc(w.m.at(i, 0)));
        std::vector<Polynomial> r; // row right of the zero state
        for (std::size_t j = 1; j < M; ++j) r.push_back(trunc(w.m.at(0, j)));

        std::uint64_t guard = (dmax + 2) * M + 4;
        for (std::uint64_t it = 0;; ++it) {
            bool all_zero = true;
            for (const auto& f : v) all_zero = all_zero && f.is_zero();
            if (all_zero) break;
            require(it < guard, errc::precondition_failed, "first-return series did not stabilize");
            for (std::size_t j = 0; j < r.size(); ++j)
                total += Polynomial::multiply_truncated(r[j], v[j], dmax);
            std::vector<Polynomial> nv(v.size(), zero);
            for (std::size_t i = 1; i < M; ++i)
                for (std::size_t k = 1; k < M; ++k)
                    nv[i - 1] += Polynomial::multiply_truncated(w.m.at(i, k), v[k - 1], dmax);
            v = std::move(nv);
        }
    }
    return detail::spectrum_from_poly(total, true);
}

// trace(Lambda^N) mod x^(dmax+1), constant term dropped, divided by N
inline Spectrum normalized_tailbiting_spectrum(const TrellisSection& s, std::size_t N,
                                               std::uint64_t dmax,
                                               std::uint64_t cap = kDefaultEnumCap) {
    require(N >= 1, errc::invalid_argument, "need N >= 1");
    auto w = wam(s, WgfKind::hamming, std::nullopt, std::nullopt, cap);
    auto wn = wam_power(w, N, dmax);
    Polynomial tr = mat_trace(wn.m, Polynomial(w.p));
    Spectrum sp = detail::spectrum_from_poly(tr, true);
    Rational inv(1, (unsigned long)N);
    for (auto& [_, c] : sp.counts) c *= inv;
    return sp;
}

} // namespace cog
