#include "doctest.h"

#include <stdexcept>

#include <algorithm>

#include "skewdet/acceptance.hpp"
#include "skewdet/decomp.hpp"

using namespace skewdet;

namespace {

const Decomposition& three_strip() {
    static const Decomposition d = reference_thick_decomposition().decomposition;
    return d;
}

Diagram shared_set(const Decomposition& d) {
    Diagram s;
    for (const auto& c : d.shared_corners) s.insert(c.box);
    return s;
}

}  // namespace

TEST_CASE("special corners of a row and of a square") {
    auto row = skew_boxes(SkewShape::make({3}));
    auto corners = special_corners(row);
    CHECK(is_special_corner(row, {1, 1}));
    CHECK(is_special_corner(row, {1, 3}));
    CHECK_FALSE(is_special_corner(row, {1, 2}));
    for (const auto& c : corners) CHECK(c.box != Box{1, 2});

    // the off-diagonal boxes of a square have a neighbour on each side, so they are not corners
    auto square = skew_boxes(SkewShape::make({2, 2}));
    CHECK(is_special_corner(square, {1, 1}));
    CHECK(is_special_corner(square, {2, 2}));
    CHECK_FALSE(is_special_corner(square, {1, 2}));
    CHECK_FALSE(is_special_corner(square, {2, 1}));
    CHECK(special_corners(square).size() == 2);
    CHECK_THROWS_AS(special_corners(Diagram{{1, 1}}), std::domain_error);
}

TEST_CASE("corner kinds") {
    auto hook = skew_boxes(SkewShape::make({3, 1, 1}));
    CHECK(is_upper_corner(hook, {1, 1}));
    CHECK(is_lower_corner(hook, {3, 1}));
    CHECK(is_lower_corner(hook, {1, 3}));
    CHECK_FALSE(is_upper_corner(hook, {2, 1}));
    CHECK(in_square_block(skew_boxes(SkewShape::make({2, 2})), {1, 2}));
}

TEST_CASE("three-strip cover is valid with three shared corners") {
    const auto& d = three_strip();
    CHECK(reference_thick_decomposition().role_matches == 1);
    CHECK(d.shape == SkewShape::make({6, 6, 6, 4}, {3, 1}));
    CHECK(validate_decomposition(d).ok);
    CHECK(d.g() == 3);
    CHECK(d.r() == 3);
    CHECK(shared_set(d) == three_strip_shared());
    std::size_t total = 0;
    for (const auto& s : d.strips) total += s.size();
    CHECK(total == static_cast<std::size_t>(d.shape.size() + d.r()));
}

TEST_CASE("validation reports") {
    auto start = interior_start_decomposition();
    auto rs = validate_decomposition(start);
    CHECK_FALSE(rs.ok);
    CHECK_FALSE(rs.message.empty());
    CHECK_FALSE(validate_decomposition(interior_end_decomposition()).ok);

    auto hook = SkewShape::make({3, 1, 1});
    CHECK(validate_decomposition(hook, {skew_boxes(hook)}).ok);
    CHECK_FALSE(validate_decomposition(hook, {{{1, 1}, {1, 2}, {1, 3}}}).ok);
    CHECK_THROWS_AS(make_decomposition(hook, {{{1, 1}}}), std::invalid_argument);
}

TEST_CASE("enriched diagrams") {
    const auto& d = three_strip();
    auto third = enrich(2, d);
    CHECK(third.count({4, 0}));
    CHECK(third.count({3, 0}));
    CHECK(third.size() == d.strips[2].size() + 2);
    auto second = enrich(1, d);
    CHECK(second.count({5, 1}));
    CHECK(second.count({5, 2}));
    CHECK(second.size() == d.strips[1].size() + 2);

    auto hook = SkewShape::make({3, 1, 1});
    auto single = make_decomposition(hook, {skew_boxes(hook)});
    CHECK(enrich(0, single) == skew_boxes(hook));
}

TEST_CASE("directions on the three-strip cover") {
    const auto& d = three_strip();
    auto rep = nestedness(d);
    CHECK(rep.nested);
    CHECK(is_nested(d));
    int up = 0, right = 0;
    for (const auto& [b, dir] : rep.directions) {
        if (b.content() == 1 || b.content() == 4 || b.content() == 5) {
            CHECK(dir != Direction::Right);
            ++up;
        }
        if (b.content() == -2) {
            CHECK(dir != Direction::Up);
            ++right;
        }
    }
    CHECK(up > 0);
    CHECK(right > 0);
    for (Box b : rep.special) CHECK_THROWS_AS(box_direction(b, d), std::domain_error);
}

TEST_CASE("non-nested covers fail") {
    auto cands = non_nested_candidates();
    REQUIRE_FALSE(cands.empty());
    bool at_minus_two = false;
    for (const auto& d : cands) {
        CHECK(validate_decomposition(d).ok);
        auto rep = nestedness(d);
        CHECK_FALSE(rep.nested);
        if (std::count(rep.failing_contents.begin(), rep.failing_contents.end(), -2)) at_minus_two = true;
    }
    CHECK(at_minus_two);
}

TEST_CASE("cutting strip of the three-strip cover") {
    auto h = cutting_strip(three_strip());
    CHECK(is_thickened_strip(h.boxes));
    // the enrichment box (4,0) reaches content -4
    CHECK(h.by_content.begin()->first == -4);
    CHECK(h.by_content.rbegin()->first == 5);
    for (int c = -4; c <= 5; ++c) CHECK(h.doubled(c) == (c == -3 || c == 0 || c == 3));
}

TEST_CASE("cutting strip of a single strip is the strip") {
    auto shape = SkewShape::make({4, 4}, {2});
    auto d = make_decomposition(shape, {skew_boxes(shape)});
    CHECK(to_skew_shape(cutting_strip(d).boxes) == shape);
}

TEST_CASE("endpoints on the three-strip cover") {
    const auto& d = three_strip();
    CHECK(endpoints(1, d).p == Address{-3, +1});
    CHECK(endpoints(2, d).q == Address{1, 0});
}

TEST_CASE("sharp table on the three-strip cover") {
    const auto& d = three_strip();
    CHECK(sharp(0, 1, d).shape() == SkewShape::make({5, 5, 5, 4, 4}, {4, 3, 3, 2}));
    CHECK(sharp(2, 0, d).kind == SharpResult::Empty);
    CHECK(sharp(2, 1, d).shape() == SkewShape::make({4, 4}, {2}));
    CHECK(sharp(1, 2, d).shape() == SkewShape::make({4, 4, 3, 3, 1}, {2, 2, 1}));
    CHECK(sharp(1, 0, d).shape() == SkewShape::make({2, 2}));
    CHECK(sharp(0, 2, d).shape() == SkewShape::make({4, 4, 4, 3, 3, 1}, {3, 2, 2, 1}));
    for (int i = 0; i < 3; ++i) CHECK(sharp(i, i, d).shape() == to_skew_shape(d.strips[i]));
}

TEST_CASE("peeling") {
    auto hook = SkewShape::make({3, 1, 1});
    CHECK(peel_rim(hook).g() == 1);
    auto sq = peel_rim(SkewShape::make({2, 2}));
    CHECK(sq.g() == 2);
    CHECK(sq.r() == 0);
    CHECK(peel_thick_rim(SkewShape::make({2, 2})).g() == 1);
    CHECK_THROWS(peel_rim(SkewShape::make({2, 1}, {1})));
    for (const auto& s : connected_skew_shapes(9)) {
        for (const auto& d : {peel_rim(s), peel_thick_rim(s)}) {
            CHECK(validate_decomposition(d).ok);
            CHECK(is_nested(d));
        }
        auto rim = peel_rim(s);
        CHECK(rim.r() == 0);
        for (const auto& strip : rim.strips) CHECK(is_strip(strip));
        for (const auto& strip : peel_thick_rim(s).strips) CHECK(is_thickened_strip(strip));
    }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_nested_decompositions(SkewShape::make({1}), 1).size() == 1);
    EnumerationOptions opts;
    opts.shared_exactly = three_strip_shared();
    bool found = false;
    enumerate_decompositions(three_strip().shape, opts, [&](const Decomposition& d) {
        if (d.strips == three_strip().strips) found = true;
        return !found;
    });
    CHECK(found);
}

TEST_CASE("every enumerated cover is valid, nested and meets the content rule") {
    for (const auto& s : connected_skew_shapes(7)) {
        for (const auto& d : enumerate_nested_decompositions(s, 3)) {
            CHECK(validate_decomposition(d).ok);
            auto rep = nestedness(d);
            CHECK(rep.nested);
            std::map<int, std::vector<Box>> by_content;
            for (Box b : skew_boxes(s)) by_content[b.content()].push_back(b);
            for (const auto& [c, boxes] : by_content) {
                if (!by_content.count(c + 1)) continue;
                bool next_special = std::all_of(by_content[c + 1].begin(), by_content[c + 1].end(),
                                                [&](Box b) { return rep.special.count(b) > 0; });
                bool both = std::all_of(boxes.begin(), boxes.end(), [&](Box b) {
                    auto it = rep.directions.find(b);
                    return it != rep.directions.end() && it->second == Direction::RightAndUp;
                });
                CHECK(next_special == both);
            }
            auto ns = analyze(d);
            for (int i = 0; i < d.g(); ++i)
                for (int j = 0; j < d.g(); ++j) {
                    auto sh = ns.sharp(i, j);
                    if (sh.kind == SharpResult::Defined) CHECK(is_thickened_strip(sh.segment));
                }
        }
    }
}

TEST_CASE("strip-only covers give strip-only sharps") {
    for (const auto& s : connected_skew_shapes(7)) {
        auto d = peel_rim(s);
        auto ns = analyze(d);
        for (int i = 0; i < d.g(); ++i)
            for (int j = 0; j < d.g(); ++j) {
                auto sh = ns.sharp(i, j);
                if (sh.kind == SharpResult::Defined) CHECK_FALSE(has_block(sh.segment, 2, 2));
            }
    }
}

TEST_CASE("address formatting") {
    CHECK(Address{-3, +1}.str() == "[-3,+]");
    CHECK(Address{1, 0}.str() == "[1]");
}
