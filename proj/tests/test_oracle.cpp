#include "wreath/oracle.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace wreath;

TEST_CASE("wreath_multiply: identity, inverses, associativity") {
    auto g = catalog_group(CatalogKind::Cyclic, 2);
    const int n = 2;
    auto id = wreath_identity(n);
    std::vector<WreathElement> all;
    for_each_element(g, n, [&](const WreathElement& e) { all.push_back(e); });
    REQUIRE(all.size() == 8);
    for (const auto& a : all) {
        CHECK(wreath_multiply(a, id, g) == a);
        CHECK(wreath_multiply(id, a, g) == a);
        CHECK(wreath_multiply(a, wreath_inverse(a, g), g) == id);
        CHECK(wreath_multiply(wreath_inverse(a, g), a, g) == id);
    }

    // associativity on random triples in S3 wr S2
    auto s3 = catalog_group(CatalogKind::Symmetric, 3);
    std::vector<WreathElement> elems;
    for_each_element(s3, 2, [&](const WreathElement& e) { elems.push_back(e); });
    REQUIRE(elems.size() == 72);
    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto &a = elems[pick(rng)], &b = elems[pick(rng)], &c = elems[pick(rng)];
        CHECK(wreath_multiply(wreath_multiply(a, b, s3), c, s3) ==
              wreath_multiply(a, wreath_multiply(b, c, s3), s3));
    }
}

TEST_CASE("wreath_power: closed form for the r-th power") {
    auto g = catalog_group(CatalogKind::Cyclic, 2);
    // (f,pi)^r = (f f_pi ... f_{pi^{r-1}}, pi^r), checked against iterated multiplication
    for (unsigned r : {2u, 3u}) {
        for_each_element(g, 2, [&](const WreathElement& a) {
            CHECK(wreath_power(a, 1, g) == a);
            auto iterated = wreath_power(a, r, g);
            WreathElement closed;
            const int n = a.n();
            std::vector<int> pi_pow(a.pi);
            // h(i) = f(i) f(pi^{-1} i) ... f(pi^{-(r-1)} i); pi^r by iteration
            std::vector<int> inv(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) inv[static_cast<size_t>(a.pi[static_cast<size_t>(i)])] = i;
            closed.f.resize(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                int prod = 0, pos = i;
                for (unsigned k = 0; k < r; ++k) {
                    prod = g.multiply(prod, a.f[static_cast<size_t>(pos)]);
                    pos = inv[static_cast<size_t>(pos)];
                }
                closed.f[static_cast<size_t>(i)] = prod;
            }
            closed.pi.resize(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                int pos = i;
                for (unsigned k = 0; k < r; ++k) pos = a.pi[static_cast<size_t>(pos)];
                closed.pi[static_cast<size_t>(i)] = pos;
            }
            CHECK(iterated == closed);
        });
    }
}

TEST_CASE("element order divides the group order") {
    auto g = catalog_group(CatalogKind::Symmetric, 3);
    const int n = 2;
    auto id = wreath_identity(n);
    for_each_element(g, n, [&](const WreathElement& a) { CHECK(wreath_power(a, 72, g) == id); });
}

TEST_CASE("element_type: identity and class-size tallies") {
    auto c2 = catalog_group(CatalogKind::Cyclic, 2);
    ClassStructure cs(c2);
    auto id = wreath_identity(3);
    auto t = element_type(id, cs);
    CHECK(t == parse_type_matrix("3,0,0;0,0,0"));

    // tally over all 8 elements of C2 wr S2 reproduces sizes 1,1,2,2,2
    std::map<TypeMatrix, long long> tally;
    for_each_element(c2, 2, [&](const WreathElement& e) { tally[element_type(e, cs)] += 1; });
    REQUIRE(tally.size() == 5);
    CHECK(tally.at(parse_type_matrix("2,0;0,0")) == 1);
    CHECK(tally.at(parse_type_matrix("0,0;2,0")) == 1);
    CHECK(tally.at(parse_type_matrix("1,0;1,0")) == 2);
    CHECK(tally.at(parse_type_matrix("0,1;0,0")) == 2);
    CHECK(tally.at(parse_type_matrix("0,0;0,1")) == 2);
}

TEST_CASE("element_type tally for S3 wr S2 matches the cycle polynomial") {
    auto s3 = catalog_group(CatalogKind::Symmetric, 3);
    ClassStructure cs(s3);
    std::map<TypeMatrix, long long> tally;
    for_each_element(s3, 2, [&](const WreathElement& e) { tally[element_type(e, cs)] += 1; });
    REQUIRE(tally.size() == 9);
    std::multiset<long long> sizes;
    long long total = 0;
    for (auto& [t, count] : tally) {
        sizes.insert(count);
        total += count;
        CHECK(class_info(t, cs).class_size == count);
    }
    CHECK(total == 72);
    CHECK(sizes == std::multiset<long long>{1, 9, 4, 6, 12, 4, 6, 18, 12});
}

TEST_CASE("power_image_count on known values") {
    CHECK(power_image_count(catalog_group(CatalogKind::Cyclic, 3), 3, 2) == 81);
    CHECK(power_image_count(catalog_group(CatalogKind::Cyclic, 2), 3, 2) == 12);
    // composite exponents are allowed here: P_6(S_4) = 1/6
    CHECK(power_image_count(catalog_group(CatalogKind::Trivial, 1), 4, 6) == 4);
}

TEST_CASE("power_image_count guard") {
    CHECK_THROWS_AS(power_image_count(catalog_group(CatalogKind::Symmetric, 4), 5, 2),
                    std::invalid_argument);
}

TEST_CASE("power_image_count agrees with the class-level count") {
    struct Case {
        CatalogKind kind;
        int m;
        int n;
    };
    for (auto [kind, m, n] : {Case{CatalogKind::Cyclic, 2, 3}, Case{CatalogKind::Cyclic, 3, 3},
                              Case{CatalogKind::Symmetric, 3, 2}, Case{CatalogKind::Dihedral, 4, 2},
                              Case{CatalogKind::Trivial, 1, 5}}) {
        auto g = catalog_group(kind, m);
        ClassStructure cs(g);
        for (unsigned r : {2u, 3u})
            CHECK(power_image_count(g, n, r) == count_power_elements(cs, n, r));
    }
}

TEST_CASE("verify_power_type_lemma exhaustively at small scale") {
    auto rep1 = verify_power_type_lemma(catalog_group(CatalogKind::Cyclic, 2), 3, 2);
    CHECK(rep1.pass());
    CHECK(rep1.checked == 48);
    auto rep2 = verify_power_type_lemma(catalog_group(CatalogKind::Cyclic, 3), 3, 2);
    CHECK(rep2.pass());
    CHECK(rep2.checked == 162);
    auto rep3 = verify_power_type_lemma(catalog_group(CatalogKind::Symmetric, 3), 2, 2);
    CHECK(rep3.pass());
    CHECK(rep3.checked == 72);
    auto rep4 = verify_power_type_lemma(catalog_group(CatalogKind::Symmetric, 3), 2, 3);
    CHECK(rep4.pass());
}

TEST_CASE("verify_conjugacy_types matches orbit structure") {
    auto rep1 = verify_conjugacy_types(catalog_group(CatalogKind::Cyclic, 2), 2);
    CHECK(rep1.pass());
    CHECK(rep1.checked == 8);
    auto rep2 = verify_conjugacy_types(catalog_group(CatalogKind::Symmetric, 3), 2);
    CHECK(rep2.pass());
    auto rep3 = verify_conjugacy_types(catalog_group(CatalogKind::Trivial, 1), 3);
    CHECK(rep3.pass());
}

TEST_CASE("image set grouped by type equals the passing types") {
    struct Case {
        CatalogKind kind;
        int m;
        int n;
    };
    for (auto [kind, m, n] : {Case{CatalogKind::Cyclic, 2, 3}, Case{CatalogKind::Cyclic, 3, 3},
                              Case{CatalogKind::Symmetric, 3, 2}}) {
        auto g = catalog_group(kind, m);
        ClassStructure cs(g);
        for (unsigned r : {2u, 3u}) {
            auto lab = nonpower_classes(cs, r);
            std::set<TypeMatrix> image_types;
            for_each_element(g, n, [&](const WreathElement& e) {
                image_types.insert(element_type(wreath_power(e, r, g), cs));
            });
            std::set<TypeMatrix> passing;
            for (const auto& t : enumerate_types(cs.num_classes(), n))
                if (is_rth_power_type(t, r, lab)) passing.insert(t);
            CHECK(image_types == passing);
        }
    }
}
