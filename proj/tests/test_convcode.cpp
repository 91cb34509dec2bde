#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cog/convcode.hpp"

#include "helpers.hpp"

using namespace cog;
using cogtest::example3_section;
using cogtest::example4_section;
using cogtest::sm1_section;
using cogtest::sm2_section;
using cogtest::xpoly;

namespace {

std::uint64_t min_nonzero_weight(const LinearCode& c) {
    auto w = c.weight_distribution();
    for (std::size_t d = 1; d < w.size(); ++d)
        if (w[d]) return d;
    return 0;
}

Matrix<Polynomial> hwam_matrix(std::uint32_t p, std::vector<std::vector<std::vector<long>>> rows) {
    Matrix<Polynomial> m(rows.size(), rows[0].size(), Polynomial(p));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = xpoly(p, rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("sections from polynomial encoders match the reference tables", "[convcode]") {
    auto s3 = example3_section();
    CHECK(s3.code.profile() == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(span_equal(s3.code,
                     LinearCode::from_generators(2, {2, 2, 2},
                                                 {{0, 0, 1, 1, 1, 0},
                                                  {1, 0, 0, 1, 0, 1},
                                                  {0, 1, 1, 1, 0, 0}})));

    auto s4 = example4_section();
    CHECK(s4.code.profile() == std::vector<std::uint32_t>{2, 3, 2});
    CHECK(span_equal(s4.code,
                     LinearCode::from_generators(3, {2, 3, 2},
                                                 {{0, 0, 1, 2, 0, 1, 0},
                                                  {1, 0, 0, 1, 0, 0, 1},
                                                  {0, 1, 1, 0, 0, 0, 0},
                                                  {0, 0, 1, 0, 2, 0, 0}})));
    CHECK(s4.code.k() == 4);

    auto s1 = sm1_section();
    CHECK(span_equal(s1.code, LinearCode::from_generators(
                                  2, {1, 3, 1}, {{0, 1, 1, 0, 1}, {1, 0, 1, 1, 0}})));
    auto s2 = sm2_section();
    CHECK(span_equal(s2.code, LinearCode::from_generators(
                                  2, {1, 3, 1}, {{0, 0, 0, 1, 1}, {1, 1, 1, 1, 0}})));

    // trailing zero symbols do not add state
    auto padded = section_from_generators(2, {{{1, 1}, {0, 1}, {1, 1}, {0, 0}}});
    CHECK(padded.code == s3.code);

    CHECK_THROWS_AS(section_from_generators(2, {{{0, 0}, {0, 0}}}), error);
    CHECK_THROWS_AS(section_from_generators(2, {{{1, 1}, {0, 1, 1}}}), error);
    CHECK_THROWS_AS(section_from_generators(2, {}), error);
}

TEST_CASE("wam powers match the printed tables", "[convcode]") {
    auto w = wam(example3_section(), WgfKind::hamming);
    CHECK(w.m == hwam_matrix(2, {{{1}, {0, 0, 1}, {}, {}},
                                 {{}, {}, {0, 1}, {0, 1}},
                                 {{0, 0, 1}, {1}, {}, {}},
                                 {{}, {}, {0, 1}, {0, 1}}}));

    auto w0 = wam_power(w, 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(w0.m.at(i, j) == Polynomial(2, i == j ? 1L : 0L));
    CHECK(wam_power(w, 1).m == w.m);

    CHECK(wam_power(w, 2).m == hwam_matrix(2, {{{1}, {0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}},
                                               {{0, 0, 0, 1}, {0, 1}, {0, 0, 1}, {0, 0, 1}},
                                               {{0, 0, 1}, {0, 0, 0, 0, 1}, {0, 1}, {0, 1}},
                                               {{0, 0, 0, 1}, {0, 1}, {0, 0, 1}, {0, 0, 1}}}));

    auto w4 = wam_power(w, 4);
    CHECK(w4.m ==
          hwam_matrix(2, {{{1, 0, 0, 0, 0, 2, 1}, {0, 0, 1, 1, 1, 0, 0, 1},
                           {0, 0, 0, 1, 2, 1}, {0, 0, 0, 1, 2, 1}},
                          {{0, 0, 0, 1, 2, 1}, {0, 0, 1, 1, 0, 1, 1},
                           {0, 0, 0, 2, 1, 0, 1}, {0, 0, 0, 2, 1, 0, 1}},
                          {{0, 0, 1, 1, 1, 0, 0, 1}, {0, 0, 1, 0, 1, 2},
                           {0, 0, 1, 1, 0, 1, 1}, {0, 0, 1, 1, 0, 1, 1}},
                          {{0, 0, 0, 1, 2, 1}, {0, 0, 1, 1, 0, 1, 1},
                           {0, 0, 0, 2, 1, 0, 1}, {0, 0, 0, 2, 1, 0, 1}}}));
    CHECK(mat_trace(w4.m, Polynomial(2)) == xpoly(2, {1, 0, 2, 4, 1, 4, 4}));

    // N = 16 truncated past degree 7
    auto w16 = wam_power(w, 16, 7);
    auto r = [&](std::vector<long> c) { return xpoly(2, std::move(c)); };
    auto a = r({0, 0, 1, 1, 2, 4, 8, 29});
    auto b = r({0, 0, 0, 1, 2, 4, 8, 16});
    auto c5 = r({0, 0, 0, 0, 0, 1, 3, 8});
    auto c6 = r({0, 0, 0, 0, 0, 0, 1, 4});
    CHECK(w16.m.at(0, 0) == r({1, 0, 0, 0, 0, 14, 25, 44}));
    CHECK(w16.m.at(0, 1) == a);
    CHECK(w16.m.at(0, 2) == b);
    CHECK(w16.m.at(0, 3) == b);
    CHECK(w16.m.at(1, 0) == b);
    CHECK(w16.m.at(1, 1) == c5);
    CHECK(w16.m.at(1, 2) == c6);
    CHECK(w16.m.at(1, 3) == c6);
    CHECK(w16.m.at(2, 0) == a);
    CHECK(w16.m.at(2, 1) == r({0, 0, 0, 0, 1, 2, 5, 12}));
    CHECK(w16.m.at(2, 2) == c5);
    CHECK(w16.m.at(2, 3) == c5);
    CHECK(w16.m.at(3, 0) == b);
    CHECK(w16.m.at(3, 1) == c5);
    CHECK(w16.m.at(3, 2) == c6);
    CHECK(w16.m.at(3, 3) == c6);
    CHECK(mat_trace(w16.m, Polynomial(2)) == r({1, 0, 0, 0, 0, 16, 32, 64}));

    auto mism = wam(example4_section(), WgfKind::hamming);
    mism.col_labels[0].swap(mism.col_labels[1]);
    CHECK_THROWS_AS(wam_power(mism, 2), error);
}

TEST_CASE("terminations reproduce the printed block codes", "[convcode]") {
    auto s = example3_section();
    auto d = dual_section(s);

    auto sub = terminate(s, 4, Termination::subcode);
    CHECK(span_equal(sub, LinearCode::from_generators(
                              2, {2, 2, 2, 2},
                              {{1, 1, 0, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 1, 1, 1}})));
    CHECK(min_nonzero_weight(sub) == 5); // the free distance survives

    auto proj_dual = terminate(d, 4, Termination::projection);
    CHECK(span_equal(proj_dual, LinearCode::from_generators(2, {2, 2, 2, 2},
                                                            {{1, 1, 0, 0, 0, 0, 0, 0},
                                                             {1, 0, 1, 1, 0, 0, 0, 0},
                                                             {1, 1, 1, 0, 1, 1, 0, 0},
                                                             {0, 0, 1, 1, 1, 0, 1, 1},
                                                             {0, 0, 0, 0, 1, 1, 1, 0},
                                                             {0, 0, 0, 0, 0, 0, 1, 1}})));
    CHECK(min_nonzero_weight(proj_dual) == 2);
    CHECK(span_equal(sub.dual(), proj_dual));

    auto trunc = terminate(s, 4, Termination::truncated);
    CHECK(span_equal(trunc, LinearCode::from_generators(2, {2, 2, 2, 2},
                                                        {{1, 1, 0, 1, 1, 1, 0, 0},
                                                         {0, 0, 1, 1, 0, 1, 1, 1},
                                                         {0, 0, 0, 0, 1, 1, 0, 1},
                                                         {0, 0, 0, 0, 0, 0, 1, 1}})));
    auto rtrunc_dual = terminate(d, 4, Termination::reverse_truncated);
    CHECK(span_equal(rtrunc_dual, LinearCode::from_generators(2, {2, 2, 2, 2},
                                                              {{1, 1, 0, 0, 0, 0, 0, 0},
                                                               {1, 0, 1, 1, 0, 0, 0, 0},
                                                               {1, 1, 1, 0, 1, 1, 0, 0},
                                                               {0, 0, 1, 1, 1, 0, 1, 1}})));
    CHECK(span_equal(trunc.dual(), rtrunc_dual));

    auto tb = terminate(s, 4, Termination::tailbiting);
    CHECK(span_equal(tb, LinearCode::from_generators(2, {2, 2, 2, 2},
                                                     {{1, 1, 0, 1, 1, 1, 0, 0},
                                                      {0, 0, 1, 1, 0, 1, 1, 1},
                                                      {1, 1, 0, 0, 1, 1, 0, 1},
                                                      {0, 1, 1, 1, 0, 0, 1, 1}})));
    auto tb_dual = terminate(d, 4, Termination::tailbiting);
    CHECK(span_equal(tb_dual, LinearCode::from_generators(2, {2, 2, 2, 2},
                                                          {{1, 1, 1, 0, 1, 1, 0, 0},
                                                           {0, 0, 1, 1, 1, 0, 1, 1},
                                                           {1, 1, 0, 0, 1, 1, 1, 0},
                                                           {1, 0, 1, 1, 0, 0, 1, 1}})));
    CHECK(span_equal(tb.dual(), tb_dual));
    CHECK(min_nonzero_weight(tb) == 2);
    CHECK(min_nonzero_weight(tb_dual) == 2);
}

TEST_CASE("terminated HWGF extraction equals direct enumeration", "[convcode]") {
    const Termination modes[]{Termination::subcode, Termination::projection,
                              Termination::truncated, Termination::reverse_truncated,
                              Termination::tailbiting};

    auto s = example3_section();
    auto w = wam(s, WgfKind::hamming);
    for (std::size_t N : {1, 2, 3}) {
        auto wn = wam_power(w, N);
        for (auto mode : modes) {
            auto ext = terminated_hwgf(wn, mode);
            auto ref = wgf(terminate(s, N, mode), WgfKind::hamming);
            // the extraction counts state paths; once the window determines
            // the path from the word the two agree, and below that the
            // free-boundary sum covers each word a constant number of times
            auto scale = poly_scale_equal(ext, ref);
            REQUIRE(scale.has_value());
            bool merged = N == 1 && mode == Termination::projection;
            CHECK(*scale == Rational(merged ? 2 : 1));
        }
    }
    CHECK(terminated_hwgf(wam_power(w, 4), Termination::tailbiting) ==
          xpoly(2, {1, 0, 2, 4, 1, 4, 4})); // printed trace

    auto s2 = sm2_section();
    auto w2 = wam(s2, WgfKind::hamming);
    for (auto mode : modes)
        CHECK(terminated_hwgf(wam_power(w2, 4), mode) ==
              wgf(terminate(s2, 4, mode), WgfKind::hamming));

    auto s4 = example4_section();
    auto w4 = wam(s4, WgfKind::hamming);
    for (auto mode : {Termination::subcode, Termination::projection, Termination::tailbiting})
        CHECK(terminated_hwgf(wam_power(w4, 2), mode) ==
              wgf(terminate(s4, 2, mode), WgfKind::hamming));

    // time-varying chain: product of two different WAMs
    auto s1 = sm1_section();
    auto w1 = wam(s1, WgfKind::hamming);
    WeightAdjacencyMatrix prod = w1;
    prod.m = mat_mul(w1.m, w2.m, Polynomial(2));
    prod.col_state = w2.col_state;
    prod.col_labels = w2.col_labels;
    std::vector<TrellisSection> chain{s1, s2};
    for (auto mode : modes)
        CHECK(terminated_hwgf(prod, mode) == wgf(chain_code(chain, mode), WgfKind::hamming));

    CHECK_THROWS_AS(terminated_hwgf(wam(s, WgfKind::exact), Termination::subcode), error);
}

TEST_CASE("termination dualities hold for random sections", "[convcode]") {
    std::mt19937 rng(271);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t p = trial % 2 ? 3 : 2;
        std::uint32_t sdim = 1 + (std::uint32_t)(rng() % 2);
        std::uint32_t adim = 1 + (std::uint32_t)(rng() % 2);
        std::uint32_t k = 1 + (std::uint32_t)(rng() % (2 * sdim + adim));
        auto sec = cogtest::random_section(rng, p, sdim, adim, k);
        // chaining the dual needs the mid-edge sign inverters absorbed
        auto dsec = negate_out_state(dual_section(sec));
        std::size_t N = 1 + rng() % 4;
        CHECK(span_equal(terminate(sec, N, Termination::subcode).dual(),
                         terminate(dsec, N, Termination::projection)));
        CHECK(span_equal(terminate(sec, N, Termination::truncated).dual(),
                         terminate(dsec, N, Termination::reverse_truncated)));
        CHECK(span_equal(terminate(sec, N, Termination::tailbiting).dual(),
                         terminate(dsec, N, Termination::tailbiting)));
    }
}

TEST_CASE("dual sections match the printed orthogonal codes", "[convcode]") {
    auto s = example3_section();
    auto d = dual_section(s);
    CHECK(span_equal(d.code, LinearCode::from_generators(2, {2, 2, 2},
                                                         {{0, 0, 1, 1, 0, 1},
                                                          {0, 1, 1, 0, 1, 0},
                                                          {1, 0, 1, 1, 0, 0}})));
    CHECK(dual_section(d).code == s.code);

    auto s4 = example4_section();
    auto d4 = dual_section(s4);
    CHECK(span_equal(d4.code, LinearCode::from_generators(3, {2, 3, 2},
                                                          {{0, 0, 0, 1, 0, 1, 2},
                                                           {2, 1, 2, 0, 2, 1, 1},
                                                           {2, 2, 1, 1, 1, 0, 0}})));
    CHECK(dual_section(d4).code == s4.code);

    // |C_k| |C_k-perp| = |S x A x S'|
    CHECK(s4.code.size() * d4.code.size() == 3u * 3 * 3 * 3 * 3 * 3 * 3);

    // absorbing the sign inverters twice is the identity
    CHECK(negate_out_state(negate_out_state(d4)) == d4);
    CHECK(negate_out_state(dual_section(example3_section())).code ==
          dual_section(example3_section()).code); // no-op over F_2
}

TEST_CASE("time reversal swaps the state spaces", "[convcode]") {
    auto s = example3_section();
    CHECK(time_reverse(time_reverse(s)).code == s.code);
    auto s4 = example4_section();
    CHECK(time_reverse(time_reverse(s4)).code == s4.code);

    // reversing the dual of Example 3 regenerates the same convolutional code
    auto d = dual_section(s);
    auto rd = time_reverse(d);
    for (std::size_t N : {3, 4})
        CHECK(span_equal(terminate(rd, N, Termination::subcode),
                         terminate(d, N, Termination::subcode)));

    // Example 4: the time-reversed dual is the code with generator
    // (1 + 2D, 1 + D^2, 1 + 2D)
    auto printed = section_from_generators(3, {{{1, 1, 1}, {2, 0, 2}, {0, 1, 0}}});
    auto rd4 = time_reverse(negate_out_state(dual_section(s4)));
    for (std::size_t N : {3, 4}) {
        CHECK(span_equal(terminate(rd4, N, Termination::subcode),
                         terminate(printed, N, Termination::subcode)));
        CHECK(span_equal(terminate(rd4, N, Termination::projection),
                         terminate(printed, N, Termination::projection)));
    }
}

TEST_CASE("free distance spectra from the transfer method", "[convcode]") {
    auto s = example3_section();
    CHECK(zero_state_unique(s));
    auto sp = free_distance_spectrum(s, 10);
    Spectrum expect;
    expect.counts = {{5, 1}, {6, 2}, {7, 4}, {8, 8}, {9, 16}, {10, 32}};
    CHECK(sp == expect);
    CHECK(d_free(sp) == 5);

    // below the free distance the spectrum is empty
    CHECK(d_free(free_distance_spectrum(s, 4)) == std::nullopt);

    // a zero-weight self-loop on a nonzero state breaks the precondition
    auto bad = TrellisSection::from_code(
        LinearCode::from_generators(2, {1, 1, 1}, {{1, 0, 1}}));
    CHECK_FALSE(zero_state_unique(bad));
    CHECK_THROWS_AS(free_distance_spectrum(bad, 4), error);

    // Shearer-McEliece: equal primal spectra, different dual spectra
    auto s1 = sm1_section(), s2 = sm2_section();
    auto f1 = free_distance_spectrum(s1, 8), f2 = free_distance_spectrum(s2, 8);
    CHECK(f1 == f2);
    CHECK(d_free(f1) == 4);
    auto g1 = free_distance_spectrum(dual_section(s1), 6);
    auto g2 = free_distance_spectrum(dual_section(s2), 6);
    CHECK(g1 != g2);

    // ternary: the spectrum's least weight equals the subcode minimum distance
    auto s4 = example4_section();
    auto f4 = free_distance_spectrum(s4, 6);
    REQUIRE(d_free(f4).has_value());
    CHECK(*d_free(f4) == min_nonzero_weight(terminate(s4, 6, Termination::subcode)));
}

TEST_CASE("normalized tail-biting spectra converge to the free spectrum", "[convcode]") {
    auto s = example3_section();
    auto norm = normalized_tailbiting_spectrum(s, 16, 7);
    Spectrum expect;
    expect.counts = {{5, 1}, {6, 2}, {7, 4}};
    CHECK(norm == expect);

    // small N still counts the wrap-around words
    auto n4 = normalized_tailbiting_spectrum(s, 4, 6);
    CHECK(n4.counts.at(2) == Rational(1, 2));

    CHECK_THROWS_AS(normalized_tailbiting_spectrum(s, 0, 4), error);
}

TEST_CASE("tail-biting distance reaches the free distance at N = 10", "[convcode]") {
    auto s = example3_section();
    auto d = dual_section(s);
    CHECK(min_nonzero_weight(terminate(s, 4, Termination::tailbiting)) == 2);
    CHECK(min_nonzero_weight(terminate(s, 10, Termination::tailbiting)) == 5);
    CHECK(min_nonzero_weight(terminate(d, 10, Termination::tailbiting)) == 5);
}

TEST_CASE("the Shearer-McEliece pair separates the termination methods", "[convcode]") {
    auto s1 = sm1_section(), s2 = sm2_section();
    auto w1 = wam(s1, WgfKind::hamming), w2 = wam(s2, WgfKind::hamming);
    CHECK(w1.m == hwam_matrix(2, {{{1}, {0, 0, 1}}, {{0, 0, 1}, {0, 0, 1}}}));
    CHECK(w2.m == hwam_matrix(2, {{{1}, {0, 1}}, {{0, 0, 0, 1}, {0, 0, 1}}}));

    for (std::size_t N = 1; N <= 5; ++N) {
        auto p1 = wam_power(w1, N), p2 = wam_power(w2, N);
        CHECK(terminated_hwgf(p1, Termination::subcode) ==
              terminated_hwgf(p2, Termination::subcode));
        CHECK(terminated_hwgf(p1, Termination::tailbiting) ==
              terminated_hwgf(p2, Termination::tailbiting));
    }

    // projections differ already at N = 1
    CHECK(terminated_hwgf(w1, Termination::projection) == xpoly(2, {1, 0, 3}));
    CHECK(terminated_hwgf(w2, Termination::projection) == xpoly(2, {1, 1, 1, 1}));

    // so the dual tail-biting weight distributions agree for all N as well
    auto d1 = wam(dual_section(s1), WgfKind::hamming);
    auto d2 = wam(dual_section(s2), WgfKind::hamming);
    for (std::size_t N = 1; N <= 5; ++N)
        CHECK(terminated_hwgf(wam_power(d1, N), Termination::tailbiting) ==
              terminated_hwgf(wam_power(d2, N), Termination::tailbiting));
}
