#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cog/convcode.hpp"
#include "cog/lincode.hpp"
#include "cog/nfg.hpp"
#include "cog/polynomial.hpp"

namespace cogtest {

using namespace cog;

// rate-1/2 binary encoder g = (1+D^2, 1+D+D^2), four states
inline TrellisSection example3_section() {
    return section_from_generators(2, {{{1, 1}, {0, 1}, {1, 1}}});
}

// rate-2/3 ternary encoder g1 = (1+D^2, 2+D, 0), g2 = (1, 0, 2)
inline TrellisSection example4_section() {
    return section_from_generators(3, {{{1, 2, 0}, {0, 1, 0}, {1, 0, 0}}, {{1, 0, 2}}});
}

// Shearer-McEliece rate-1/3 pair
inline TrellisSection sm1_section() {
    return section_from_generators(2, {{{1, 1, 0}, {0, 1, 1}}});
}
inline TrellisSection sm2_section() {
    return section_from_generators(2, {{{0, 0, 1}, {1, 1, 1}}});
}

// four-section trellis of the (8,4) first-order Reed-Muller code
inline std::vector<TrellisSection> rm_sections() {
    auto first = TrellisSection::from_code(
        LinearCode::from_generators(2, {0, 2, 2}, {{1, 1, 1, 0}, {0, 1, 0, 1}}));
    auto mid = TrellisSection::from_code(LinearCode::from_generators(
        2, {2, 2, 2}, {{1, 0, 1, 1, 0, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 1, 0}}));
    auto last = TrellisSection::from_code(
        LinearCode::from_generators(2, {2, 2, 0}, {{1, 0, 1, 1}, {0, 1, 0, 1}}));
    return {first, mid, mid, last};
}

// univariate polynomial from coefficient list: coeffs[d] * x^d
inline Polynomial upoly(std::uint32_t p, const std::string& var, std::vector<long> coeffs) {
    Polynomial f(p);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (!coeffs[d]) continue;
        Monomial m;
        if (d) m[var] = (std::uint32_t)d;
        f.add_term(m, CycloRational(p, coeffs[d]));
    }
    return f;
}

inline Polynomial xpoly(std::uint32_t p, std::vector<long> coeffs) {
    return upoly(p, "x", std::move(coeffs));
}

inline LinearCode random_code(std::mt19937& rng, std::uint32_t p, std::uint32_t n,
                              std::uint32_t k) {
    std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
    std::vector<std::vector<residue>> rows(k, std::vector<residue>(n));
    for (auto& r : rows)
        for (auto& x : r) x = coin(rng);
    return LinearCode::from_generators(p, std::vector<std::uint32_t>(n, 1), std::move(rows));
}

// random section with small state/symbol widths; behavior contains the zero word
inline TrellisSection random_section(std::mt19937& rng, std::uint32_t p, std::uint32_t sdim,
                                     std::uint32_t adim, std::uint32_t k) {
    std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
    std::uint32_t len = 2 * sdim + adim;
    std::vector<std::vector<residue>> rows(k, std::vector<residue>(len));
    for (auto& r : rows)
        for (auto& x : r) x = coin(rng);
    return TrellisSection::from_code(
        LinearCode::from_generators(p, {sdim, adim, sdim}, std::move(rows)));
}

inline FactorTensor<Polynomial> random_tensor(std::mt19937& rng, std::uint32_t p,
                                              const std::vector<Alphabet>& axes) {
    std::uniform_int_distribution<int> coin(-2, 3);
    auto t = make_tensor<Polynomial>(axes, Polynomial(p));
    for (auto& v : t.table) v = Polynomial(p, (long)coin(rng));
    return t;
}

// random graph: <= max_factors factors, <= max_internal internal edges (self-loops
// allowed), every variable lands on the right number of slots
inline NormalFactorGraph random_nfg(std::mt19937& rng, std::uint32_t p, std::size_t max_factors,
                                    std::size_t max_internal) {
    std::uniform_int_distribution<std::size_t> nf(1, max_factors), ni(0, max_internal);
    std::uniform_int_distribution<std::uint32_t> dd(1, 2);
    std::size_t F = nf(rng), I = ni(rng);

    Realization r;
    r.p = p;
    std::vector<std::vector<std::string>> slots(F); // variable ids per factor, in slot order

    for (std::size_t j = 0; j < I; ++j) {
        std::string id = "s" + std::to_string(j);
        r.internals.push_back({id, Alphabet(p, dd(rng))});
        std::uniform_int_distribution<std::size_t> pick(0, F - 1);
        slots[pick(rng)].push_back(id); // both endpoints, possibly the same factor
        slots[pick(rng)].push_back(id);
    }
    std::uniform_int_distribution<int> extra(0, 1);
    std::size_t e = 0;
    for (std::size_t i = 0; i < F; ++i)
        for (int t = extra(rng); t >= 0; --t) {
            std::string id = "a" + std::to_string(e++);
            r.externals.push_back({id, Alphabet(p, dd(rng))});
            slots[i].push_back(id);
        }

    std::map<std::string, Alphabet> alph;
    for (const auto& v : r.externals) alph.emplace(v.id, v.alphabet);
    for (const auto& v : r.internals) alph.emplace(v.id, v.alphabet);
    for (std::size_t i = 0; i < F; ++i) {
        std::vector<Alphabet> axes;
        for (const auto& id : slots[i]) axes.push_back(alph.at(id));
        r.factors.push_back({"f" + std::to_string(i), slots[i], random_tensor(rng, p, axes)});
    }
    return NormalFactorGraph::validated(std::move(r));
}

} // namespace cogtest
