#include "wreath/series.hpp"
#include "wreath/wreath_core.hpp"

#include <doctest.h>

#include <random>

using namespace wreath;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int cap, bool unit_constant) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    TruncatedSeries f(cap);
    f.set_coeff(0, unit_constant ? Rational(1) : Rational(num(rng), den(rng)));
    for (int k = 1; k <= cap; ++k) f.set_coeff(k, Rational(num(rng), den(rng)));
    return f;
}

}  // namespace

TEST_CASE("exp and log basics") {
    TruncatedSeries u(6);
    u.set_coeff(1, 1);
    auto e = exp(u);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == 1);
    CHECK(e.coeff(2) == Rational(1, 2));
    CHECK(e.coeff(3) == Rational(1, 6));
    CHECK(e.coeff(6) == Rational(1, 720));

    // log(1/(1-u)) = sum u^k / k
    TruncatedSeries one_minus_u = TruncatedSeries::constant(1, 6);
    one_minus_u.set_coeff(1, -1);
    auto l = log(reciprocal(one_minus_u));
    for (int k = 1; k <= 6; ++k) CHECK(l.coeff(k) == Rational(1, k));
}

TEST_CASE("precondition errors report the constant term") {
    TruncatedSeries f(4);
    f.set_coeff(0, 3);
    CHECK_THROWS_WITH_AS(exp(f), doctest::Contains("3"), std::invalid_argument);
    CHECK_THROWS_AS(log(f), std::invalid_argument);
    TruncatedSeries zero(4);
    CHECK_THROWS_AS(reciprocal(zero), std::invalid_argument);
    CHECK_THROWS_AS(pow_rational(zero, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("pow_rational: (1-u^2)^{1/2}/(1-u) squared equals (1+u)/(1-u)") {
    const int cap = 16;
    TruncatedSeries one_minus_u2 = TruncatedSeries::constant(1, cap);
    one_minus_u2.set_coeff(2, -1);
    TruncatedSeries one_minus_u = TruncatedSeries::constant(1, cap);
    one_minus_u.set_coeff(1, -1);
    TruncatedSeries one_plus_u = TruncatedSeries::constant(1, cap);
    one_plus_u.set_coeff(1, 1);

    auto f = mul(pow_rational(one_minus_u2, Rational(1, 2)), reciprocal(one_minus_u));
    // cross-multiply: f^2 * (1-u) == (1+u)
    CHECK(mul(mul(f, f), one_minus_u) == one_plus_u);
    // and f equals ((1+u)/(1-u))^{1/2} coefficientwise
    CHECK(f == pow_rational(mul(one_plus_u, reciprocal(one_minus_u)), Rational(1, 2)));
}

TEST_CASE("mul is commutative and associative; exp(log f) = f") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_series(rng, 20, false);
        auto b = random_series(rng, 20, false);
        auto c = random_series(rng, 20, false);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        auto f = random_series(rng, 20, true);
        CHECK(exp(log(f)) == f);
    }
}

TEST_CASE("operations truncate to the smaller cap") {
    TruncatedSeries a(8), b(5);
    a.set_coeff(0, 1);
    b.set_coeff(0, 1);
    CHECK(mul(a, b).cap() == 5);
    CHECK(add(a, b).cap() == 5);
}

TEST_CASE("psi: multisection of exp(alpha u^j / j)") {
    // r=2, j=1, alpha=1: cosh(u)
    auto c = psi(1, 1, 2, 8);
    CHECK(c.coeff(0) == 1);
    CHECK(c.coeff(1) == 0);
    CHECK(c.coeff(2) == Rational(1, 2));
    CHECK(c.coeff(3) == 0);
    CHECK(c.coeff(4) == Rational(1, 24));

    // alpha = 0 gives the constant series 1
    auto z = psi(3, 0, 3, 10);
    CHECK(z.coeff(0) == 1);
    for (int k = 1; k <= 10; ++k) CHECK(z.coeff(k) == 0);

    // j=2, alpha=1/2, r=2: matches cosh((1/2) u^2 / 2) built from exp
    TruncatedSeries x(12);
    x.set_coeff(2, Rational(1, 4));
    TruncatedSeries minus_x(12);
    minus_x.set_coeff(2, Rational(-1, 4));
    auto cosh_ref = add(exp(x), exp(minus_x));
    TruncatedSeries half = TruncatedSeries::constant(Rational(1, 2), 12);
    cosh_ref = mul(half, cosh_ref);
    CHECK(psi(2, Rational(1, 2), 2, 12) == cosh_ref);
}

TEST_CASE("genfun_partitions / genfun_p_r / genfun_p_r_prime match direct counting") {
    const int cap = 12;
    auto p = genfun_partitions(cap);
    auto p2 = genfun_p_r(2, cap);
    auto p2p = genfun_p_r_prime(2, cap);
    auto p3 = genfun_p_r(3, cap);
    auto p3p = genfun_p_r_prime(3, cap);
    for (int n = 0; n <= cap; ++n) {
        CHECK(p.coeff(n) == Rational(count_p(n)));
        CHECK(p2.coeff(n) == Rational(count_p_r(n, 2)));
        CHECK(p2p.coeff(n) == Rational(count_p_r_prime(n, 2)));
        CHECK(p3.coeff(n) == Rational(count_p_r(n, 3)));
        CHECK(p3p.coeff(n) == Rational(count_p_r_prime(n, 3)));
    }
    // Table 1 values
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(3) == 3);
    CHECK(p2.coeff(1) == 0);
    CHECK(p2.coeff(2) == 1);
    CHECK(p2.coeff(3) == 0);
    CHECK(p2p.coeff(1) == 1);
    CHECK(p2p.coeff(2) == 1);
    CHECK(p2p.coeff(3) == 2);
}

TEST_CASE("genfun_p_r is genfun_partitions with u -> u^r") {
    for (unsigned r : {2u, 3u, 5u}) CHECK(genfun_p_r(r, 15) == genfun_partitions(15).inflate(static_cast<int>(r)));
}

TEST_CASE("genfun_cc and genfun_cc_r") {
    auto cc3 = genfun_cc(3, 6);
    CHECK(cc3.coeff(3) == 22);
    for (int n = 0; n <= 6; ++n) CHECK(cc3.coeff(n) == Rational(count_classes(3, n)));

    ClassStructure s3(catalog_group(CatalogKind::Symmetric, 3));
    ClassStructure c3(catalog_group(CatalogKind::Cyclic, 3));
    auto ccr_s3 = genfun_cc_r(s3, 2, 6);
    auto ccr_c3 = genfun_cc_r(c3, 2, 6);
    CHECK(ccr_s3.coeff(3) == 8);
    CHECK(ccr_c3.coeff(3) == 13);
    for (int n = 0; n <= 6; ++n) {
        CHECK(ccr_s3.coeff(n) == Rational(count_power_classes_formula(s3, n, 2)));
        CHECK(ccr_c3.coeff(n) == Rational(count_power_classes_formula(c3, n, 2)));
    }
}

TEST_CASE("genfun_prob_wreath coefficients equal enumeration, degree <= 6") {
    struct Case {
        CatalogKind kind;
        int m;
        unsigned r;
    };
    for (auto [kind, m, r] : {Case{CatalogKind::Cyclic, 3, 2}, Case{CatalogKind::Cyclic, 2, 3},
                              Case{CatalogKind::Symmetric, 3, 2}, Case{CatalogKind::Trivial, 1, 2}}) {
        ClassStructure cs(catalog_group(kind, m));
        auto f = genfun_prob_wreath(cs, r, 6);
        CHECK(f.coeff(0) == 1);
        for (int n = 1; n <= 6; ++n) CHECK(f.coeff(n) == prob_r_wreath(cs, n, r));
    }
}

TEST_CASE("genfun_prob_wreath stated coefficients") {
    ClassStructure c3(catalog_group(CatalogKind::Cyclic, 3));
    CHECK(genfun_prob_wreath(c3, 2, 4).coeff(3) == Rational(1, 2));
    ClassStructure s3(catalog_group(CatalogKind::Symmetric, 3));
    CHECK(genfun_prob_wreath(s3, 2, 4).coeff(3) == Rational(1, 4));
    // trivial G: coefficients are P_2(S_n), i.e. ((1+u)/(1-u))^{1/2} * prod cosh(u^{2k}/2k)
    ClassStructure triv(catalog_group(CatalogKind::Trivial, 1));
    auto f = genfun_prob_wreath(triv, 2, 8);
    for (int n = 1; n <= 8; ++n) CHECK(f.coeff(n) == prob_r_sn(n, 2));
}

TEST_CASE("cycle index product form at t=1 sums to 1/(1-u)") {
    // prod over classes/lengths of exp(alpha_i u^j / j) with all markers 1
    for (auto [kind, m] : {std::pair{CatalogKind::Cyclic, 3}, {CatalogKind::Symmetric, 3}}) {
        ClassStructure cs(catalog_group(kind, m));
        const int cap = 10;
        TruncatedSeries f = TruncatedSeries::constant(1, cap);
        for (int c = 0; c < cs.num_classes(); ++c) {
            Rational alpha(cs.size(c), cs.group().order());
            for (int j = 1; j <= cap; ++j) {
                TruncatedSeries arg(cap);
                arg.set_coeff(j, alpha / j);
                f = mul(f, exp(arg));
            }
        }
        for (int n = 0; n <= cap; ++n) CHECK(f.coeff(n) == 1);
    }
}

TEST_CASE("check_plateau_series") {
    ClassStructure c3(catalog_group(CatalogKind::Cyclic, 3));
    CHECK(check_plateau_series(genfun_prob_wreath(c3, 2, 8), 2).pass());
    // constant coefficient sequence passes for every r
    TruncatedSeries ones(5);
    for (int k = 0; k <= 5; ++k) ones.set_coeff(k, 1);
    CHECK(check_plateau_series(ones, 2).pass());
    CHECK(check_plateau_series(ones, 3).pass());
    // 1 + u + 2u^2: k=0 has c1=c0=1, k=1 is exempt (mod 2) -> pass; then k=2 fails
    TruncatedSeries f(3);
    f.set_coeff(0, 1);
    f.set_coeff(1, 1);
    f.set_coeff(2, 2);
    f.set_coeff(3, 3);
    CHECK(check_plateau_series(f, 2).failing_k == std::vector<int>{2});
}

TEST_CASE("series text output") {
    TruncatedSeries f(2);
    f.set_coeff(0, 1);
    f.set_coeff(1, Rational(1, 2));
    f.set_coeff(2, 22);
    CHECK(format_series(f) == "0\t1\n1\t1/2\n2\t22\n");
}
