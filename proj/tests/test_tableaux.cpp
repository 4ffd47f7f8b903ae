#include "doctest.h"

#include <stdexcept>

#include "skewdet/acceptance.hpp"
#include "skewdet/tableaux.hpp"

using namespace skewdet;

namespace {

std::size_t count_ssyt(const SkewShape& s, int max_entry) {
    std::size_t n = 0;
    enumerate_ssyt(s, max_entry, [&](const Tableau& t) {
        CHECK(t.is_semistandard());
        ++n;
        return true;
    });
    return n;
}

}  // namespace

TEST_CASE("SSYT enumeration") {
    CHECK(count_ssyt(SkewShape::make({1}), 2) == 2);
    CHECK(count_ssyt(SkewShape::make({2}), 2) == 3);
    CHECK(count_ssyt(SkewShape::make({2, 1}), 3) == 8);
    auto s21 = schur_direct(SkewShape::make({2, 1}), 3);
    mpz_class total = 0;
    for (const auto& [e, c] : s21.terms()) total += c;
    CHECK(total == 8);
}

TEST_CASE("SSYT enumeration order is deterministic and stops early") {
    auto a = all_ssyt(skew_boxes(SkewShape::make({2, 2}, {1})), 3);
    auto b = all_ssyt(skew_boxes(SkewShape::make({2, 2}, {1})), 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].entries == b[i].entries);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].entries < a[i].entries);
    int seen = 0;
    enumerate_ssyt(SkewShape::make({3}), 3, [&](const Tableau&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("standard counts by brute force") {
    CHECK(count_syt_bruteforce(SkewShape::make({1})) == 1);
    CHECK(count_syt_bruteforce(SkewShape::make({2, 1})) == 2);
    CHECK(count_syt_bruteforce(SkewShape::make({1, 1})) == 1);
}

TEST_CASE("direct Schur polynomials") {
    CHECK(schur_direct(SkewShape::make({}), 2) == Polynomial::constant(2, 1));
    auto s1 = schur_direct(SkewShape::make({1}), 3);
    CHECK(s1 == Polynomial::variable(3, 0) + Polynomial::variable(3, 1) + Polynomial::variable(3, 2));
    CHECK(schur_direct(SkewShape::make({1, 1}), 2) == Polynomial::monomial({1, 1}));
}

TEST_CASE("complete homogeneous") {
    CHECK(complete_homogeneous(0, 2) == Polynomial::constant(2, 1));
    CHECK(complete_homogeneous(-2, 2).is_zero());
    auto h2 = complete_homogeneous(2, 2);
    CHECK(h2.coefficient({2, 0}) == 1);
    CHECK(h2.coefficient({1, 1}) == 1);
    CHECK(h2.coefficient({0, 2}) == 1);
    CHECK(h2.term_count() == 3);
}

TEST_CASE("Jacobi-Trudi matches direct enumeration") {
    CHECK(schur_jacobi_trudi(SkewShape::make({1}), 3) == complete_homogeneous(1, 3));
    CHECK(schur_jacobi_trudi(SkewShape::make({2, 1}), 3) == schur_direct(SkewShape::make({2, 1}), 3));
    auto big = SkewShape::make({6, 6, 6, 4}, {3, 1});
    CHECK(schur_jacobi_trudi(big, 4) == schur_direct(big, 4));
    for (const auto& s : connected_skew_shapes(6))
        for (int n = 1; n <= 3; ++n) CHECK(schur_jacobi_trudi(s, n) == schur_direct(s, n));
}

TEST_CASE("Jacobi-Trudi handles disconnected shapes") {
    auto s = SkewShape::make({2, 1}, {1});
    CHECK(schur_jacobi_trudi(s, 3) == schur_direct(s, 3));
}

TEST_CASE("Aitken count matches brute force") {
    CHECK(count_syt_aitken(SkewShape::make({1})) == 1);
    CHECK(count_syt_aitken(SkewShape::make({2, 1})) == 2);
    CHECK(count_syt_aitken(SkewShape::make({2, 2}, {1})) == 2);
    for (const auto& s : connected_skew_shapes(8)) CHECK(count_syt_aitken(s) == count_syt_bruteforce(s));
}

TEST_CASE("Aitken count on translated diagrams") {
    Diagram d;
    for (Box b : skew_boxes(SkewShape::make({3, 2}, {1}))) d.insert(shifted(b, 4, 2));
    CHECK(count_syt_aitken(d) == count_syt_bruteforce(SkewShape::make({3, 2}, {1})));
    CHECK_THROWS_AS(count_syt_aitken(Diagram{{1, 1}, {2, 2}, {1, 2}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("Schur polynomials are symmetric") {
    for (const auto& s : connected_skew_shapes(5)) {
        auto p = schur_direct(s, 3);
        CHECK(p.permute_variables({1, 0, 2}) == p);
        CHECK(p.permute_variables({0, 2, 1}) == p);
    }
}

TEST_CASE("squarefree coefficient counts standard tableaux") {
    for (const auto& s : connected_skew_shapes(6)) {
        int n = s.size();
        Exponents ones(n, 1);
        CHECK(schur_direct(s, n).coefficient(ones) == count_syt_bruteforce(s));
    }
}

TEST_CASE("tableau accessors") {
    auto all = all_ssyt(skew_boxes(SkewShape::make({2, 1})), 3);
    const auto& t = all.front();
    CHECK(t.at({1, 1}) == 1);
    CHECK_THROWS_AS(t.at({5, 5}), std::out_of_range);
    auto w = t.weight(3);
    CHECK(w[0] + w[1] + w[2] == 3);
    auto r = t.restricted_to({{1, 1}, {1, 2}});
    CHECK(r.boxes.size() == 2);
}
