#include "doctest.h"

#include <stdexcept>

#include <algorithm>

#include "skewdet/acceptance.hpp"
#include "skewdet/nested_det.hpp"
#include "skewdet/tableaux.hpp"

using namespace skewdet;

namespace {

const Decomposition& three_strip() {
    static const Decomposition d = reference_thick_decomposition().decomposition;
    return d;
}

std::vector<Decomposition> small_corpus() {
    std::vector<Decomposition> out;
    for (const auto& s : connected_skew_shapes(6))
        for (auto& d : enumerate_nested_decompositions(s, 3)) out.push_back(std::move(d));
    return out;
}

}  // namespace

TEST_CASE("single-strip sides") {
    auto hook = SkewShape::make({3, 1, 1});
    auto d = make_decomposition(hook, {skew_boxes(hook)});
    auto s = schur_jacobi_trudi(hook, 3);
    CHECK(theorem_lhs(d, 3) == s);
    CHECK(theorem_rhs(d, 3) == s);
    CHECK(corollary_count(d) == 1 * count_syt_bruteforce(hook));
}

TEST_CASE("single box") {
    auto box = SkewShape::make({1});
    auto d = make_decomposition(box, {skew_boxes(box)});
    CHECK(corollary_count(d) == 1);
    CHECK(verify_identity(d, 1).equal);
}

TEST_CASE("three-strip cover identity") {
    const auto& d = three_strip();
    auto lhs = theorem_lhs(d, 4);
    CHECK(lhs == power_sum_p1r(3, 4) * schur_jacobi_trudi(d.shape, 4));
    auto rep = verify_identity(d, 4);
    CHECK(rep.equal);
    CHECK(rep.r == 3);
    CHECK(rep.g == 3);
    CHECK(rep.degree == 21);
    CHECK_FALSE(rep.conclusive);
    CHECK(verify_identity(d, 5).equal);
}

TEST_CASE("three-strip cover count") {
    CHECK(corollary_count(three_strip()) == count_syt_aitken(three_strip().shape));
}

TEST_CASE("rim cover of the interior-endpoint shape") {
    auto d = peel_rim(interior_endpoint_shape());
    CHECK(d.r() == 0);
    CHECK(verify_identity(d, 3).equal);
}

TEST_CASE("corrupted cover fails") {
    std::string what;
    auto bad = corrupted_reference(&what);
    CHECK_FALSE(what.empty());
    auto rep = verify_identity(bad, 4);
    CHECK_FALSE(rep.equal);
    CHECK_FALSE(rep.note.empty());
}

TEST_CASE("sharp Schur entries") {
    const auto& d = three_strip();
    CHECK(sharp_schur(sharp(2, 0, d), 3) == Polynomial::constant(3, 1));
    SharpResult undefined;
    CHECK(sharp_schur(undefined, 3).is_zero());
}

TEST_CASE("identity and count over small nested covers") {
    for (const auto& d : small_corpus()) {
        auto ns = analyze(d);
        for (int n = 2; n <= 4; ++n) CHECK(theorem_lhs(d, n) == theorem_rhs(ns, n));
        CHECK(corollary_count(ns) == count_syt_bruteforce(d.shape));
    }
}

TEST_CASE("strip order does not matter") {
    int checked = 0;
    for (const auto& d : small_corpus()) {
        if (d.g() < 2) continue;
        auto strips = d.strips;
        std::reverse(strips.begin(), strips.end());
        auto flipped = make_decomposition(d.shape, strips);
        CHECK(theorem_rhs(flipped, 3) == theorem_rhs(d, 3));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("outside covers reduce to the strip determinant") {
    for (const auto& s : connected_skew_shapes(7)) {
        auto d = peel_rim(s);
        CHECK(theorem_rhs(d, 3) == schur_jacobi_trudi(s, 3));
    }
}

TEST_CASE("cached Schur matches Jacobi-Trudi") {
    auto s = SkewShape::make({4, 3, 1}, {2});
    CHECK(schur_cached(s, 3) == schur_jacobi_trudi(s, 3));
    CHECK(schur_cached(s, 3) == schur_cached(s, 3));
}
