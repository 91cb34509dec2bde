#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cog/transform.hpp"

#include "helpers.hpp"

using namespace cog;

namespace {

FactorTensor<CycloRational> random_cyclo_fn(std::mt19937& rng, const Alphabet& a) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<std::int64_t> pw(0, a.p - 1);
    auto t = make_tensor(std::vector<Alphabet>{a}, CycloRational(a.p));
    for (auto& v : t.table) {
        v = CycloRational(a.p, num(rng));
        v += CycloRational::omega_pow(a.p, pw(rng)) * CycloRational(a.p, num(rng));
    }
    return t;
}

LinearCode even_weight_3() {
    return LinearCode::from_generators(2, {1, 1, 1}, {{1, 1, 0}, {0, 1, 1}});
}

} // namespace

TEST_CASE("fourier kernels match the character tables", "[transform]") {
    CycloRational one(2, 1L), minus(2, -1L);
    auto F2 = fourier_matrix(Alphabet(2, 1));
    CHECK(F2.at(0, 0) == one);
    CHECK(F2.at(0, 1) == one);
    CHECK(F2.at(1, 0) == one);
    CHECK(F2.at(1, 1) == minus);

    // (Z_2)^2 in the order 00, 10, 01, 11
    auto F4 = fourier_matrix(Alphabet(2, 2));
    int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(F4.at(i, j) == (sign[i][j] > 0 ? one : minus));

    auto F3 = fourier_matrix(Alphabet(3, 1));
    auto w = [](std::int64_t k) { return CycloRational::omega_pow(3, k); };
    CHECK(F3.at(1, 1) == w(1));
    CHECK(F3.at(1, 2) == w(2));
    CHECK(F3.at(2, 2) == w(4)); // = w
    CHECK(F3.at(2, 2) == w(1));
    for (int j = 0; j < 3; ++j) CHECK(F3.at(0, j) == CycloRational(3, 1L));

    // conjugate flavor inverts the exponent
    auto F3c = fourier_matrix(Alphabet(3, 1), Flavor::conjugate);
    CHECK(F3c.at(1, 1) == w(-1));
    CHECK(F3c.at(1, 2) == w(-2));
}

TEST_CASE("kernel identity suite holds with the expected witnesses", "[transform]") {
    auto rep = verify_identity_suite(Alphabet(2, 1));
    REQUIRE(rep.checks.size() == 4);
    CHECK(rep.pass);
    std::vector<long> expect{2, 2, 2, 4};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rep.checks[i].pass);
        REQUIRE(rep.checks[i].witness.has_value());
        CHECK(*rep.checks[i].witness == Rational(expect[i]));
    }

    auto rep9 = verify_identity_suite(Alphabet(3, 2));
    CHECK(rep9.pass);
    CHECK(*rep9.checks[0].witness == Rational(9));
    CHECK(*rep9.checks[3].witness == Rational(81));

    for (auto [p, d] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 1u}, {5u, 1u}, {7u, 1u}})
        CHECK(verify_identity_suite(Alphabet(p, d)).pass);
}

TEST_CASE("sign inverter pairs each element with its negative", "[transform]") {
    CycloRational z2(2), o2(2, 1L);
    auto p2 = sign_inverter_tensor(Alphabet(2, 1), z2, o2);
    CHECK(p2.table == std::vector<CycloRational>{o2, z2, z2, o2}); // identity over F_2

    CycloRational z3(3), o3(3, 1L);
    auto p3 = sign_inverter_tensor(Alphabet(3, 1), z3, o3);
    // 0 <-> 0, 1 <-> 2
    CHECK(p3.table[0 + 3 * 0] == o3);
    CHECK(p3.table[1 + 3 * 2] == o3);
    CHECK(p3.table[2 + 3 * 1] == o3);
    CHECK(p3.table[1 + 3 * 1] == z3);

    // involution: P as a matrix squares to the identity
    Matrix<CycloRational> P(3, 3, z3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) P.at(i, j) = p3.table[i + 3 * j];
    auto PP = mat_mul(P, P, z3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(PP.at(i, j) == (i == j ? o3 : z3));
}

TEST_CASE("transform of a subspace indicator is |B| times the dual indicator", "[transform]") {
    auto B = even_weight_3();
    auto f = indicator_tensor(B);
    auto F = transform_function(f);
    auto dual_ind = indicator_tensor(B.dual());
    CycloRational four(2, 4L);
    for (std::size_t i = 0; i < F.table.size(); ++i)
        CHECK(F.table[i] == dual_ind.table[i] * four);

    auto T = LinearCode::from_generators(3, {1, 1}, {{1, 1}});
    auto g = transform_function(indicator_tensor(T));
    auto td = indicator_tensor(T.dual()); // span{(1,2)}
    CycloRational three(3, 3L);
    for (std::size_t i = 0; i < g.table.size(); ++i)
        CHECK(g.table[i] == td.table[i] * three);
}

TEST_CASE("delta and all-ones are a transform pair", "[transform]") {
    Alphabet a(3, 2);
    auto delta = make_tensor(std::vector<Alphabet>{a}, CycloRational(3));
    delta.table[0] = CycloRational(3, 1L);
    auto F = transform_function(delta);
    for (const auto& v : F.table) CHECK(v == CycloRational(3, 1L));

    auto G = transform_function(F);
    CHECK(G.table[0] == CycloRational(3, 9L));
    for (std::size_t i = 1; i < G.table.size(); ++i) CHECK(G.table[i].is_zero());
}

TEST_CASE("inverse transform undoes the forward transform", "[transform]") {
    std::mt19937 rng(11);
    for (const Alphabet& a : {Alphabet(2, 3), Alphabet(3, 2), Alphabet(5, 1)}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_cyclo_fn(rng, a);
            CHECK(inverse_transform_function(transform_function(f)) == f);
        }
    }
    auto bad = make_tensor(std::vector<Alphabet>{Alphabet(2, 1), Alphabet(2, 1)},
                           CycloRational(2));
    CHECK_THROWS_AS(transform_function(bad), error);
}

TEST_CASE("poisson summation holds exactly", "[transform]") {
    // all-ones function: lhs = |A| at the zero dual word only
    Alphabet a(2, 3);
    auto ones = make_tensor(std::vector<Alphabet>{a}, CycloRational(2, 1L));
    auto B = even_weight_3();
    auto rep = poisson_check(ones, B);
    CHECK(rep.pass);
    CHECK(rep.lhs == CycloRational(2, 8L));
    CHECK(rep.rhs_sum == CycloRational(2, 4L));
    CHECK(rep.witness == Rational(2));

    // zero code and universe code boundaries
    CHECK(poisson_check(ones, LinearCode::zero_code(2, {1, 1, 1})).pass);
    auto uni = LinearCode::from_generators(2, {1, 1, 1}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(poisson_check(ones, uni).pass);

    // indicator of B itself
    auto repB = poisson_check(indicator_tensor(B), B);
    CHECK(repB.pass);
    CHECK(repB.rhs_sum == CycloRational(2, 4L));
    CHECK(repB.lhs == CycloRational(2, 8L));

    // arbitrary functions, binary and ternary
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = random_cyclo_fn(rng, a);
        CHECK(poisson_check(f, B).pass);
    }
    Alphabet t(3, 2);
    auto T = LinearCode::from_generators(3, {1, 1}, {{1, 1}});
    for (int trial = 0; trial < 8; ++trial) {
        auto f = random_cyclo_fn(rng, t);
        auto r = poisson_check(f, T);
        CHECK(r.pass);
        CHECK(r.witness == Rational(3));
    }

    CHECK_THROWS_AS(poisson_check(ones, T), error);
}
