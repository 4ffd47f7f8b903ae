#include "doctest.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "skewdet/acceptance.hpp"
#include "skewdet/paths.hpp"

using namespace skewdet;

namespace {

const NestedStructure& three_strip() {
    static const NestedStructure ns = analyze(reference_thick_decomposition().decomposition);
    return ns;
}

Polynomial monomial_of(const Tableau& t, int nvars) { return Polynomial::monomial(t.weight(nvars)); }

}  // namespace

TEST_CASE("path endpoints on the three-strip cover") {
    const auto& ns = three_strip();
    auto u_second = path_endpoints(0, 1, ns).u;
    CHECK(u_second.x == -3);
    CHECK(u_second.top);
    CHECK(path_endpoints(2, 0, ns).v == LatticePoint{2, false, 1});
    auto u_first = path_endpoints(2, 0, ns).u;
    CHECK(u_first.x == 2);
    CHECK(u_first.top);
}

TEST_CASE("empty segment maps to the all-vertical path") {
    const auto& ns = three_strip();
    REQUIRE(ns.sharp(2, 0).kind == SharpResult::Empty);
    Tableau empty;
    auto p = tableau_to_path(empty, 2, 0, ns);
    CHECK(p.plus.empty());
    CHECK(p.minus.empty());
    CHECK(check_path(p).ok);
    CHECK(path_weight(p, 3) == Polynomial::constant(3, 1));
    CHECK(path_to_tableau(p, 2, 0, ns).boxes.empty());
}

TEST_CASE("round trips on every defined segment") {
    const auto& ns = three_strip();
    const int max_entry = 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto sh = ns.sharp(i, j);
            if (sh.kind != SharpResult::Defined || sh.segment.size() > 8) continue;
            std::size_t tableaux = 0;
            enumerate_ssyt(sh.segment, max_entry, [&](const Tableau& t) {
                auto p = tableau_to_path(t, i, j, ns);
                CHECK(check_path(p).ok);
                CHECK(path_to_tableau(p, i, j, ns).entries == t.entries);
                CHECK(path_weight(p, max_entry) == monomial_of(t, max_entry));
                std::set<std::pair<int, int>> ends;
                for (const auto& [gap, step] : p.plus) ends.insert({gap + 1, step.end_y});
                for (const auto& [gap, step] : p.minus) ends.insert({gap + 1, step.end_y});
                std::set<std::pair<int, int>> expected;
                for (std::size_t k = 0; k < t.boxes.size(); ++k)
                    expected.insert({t.boxes[k].content() + 1, t.entries[k]});
                CHECK(ends == expected);
                ++tableaux;
                return true;
            });
            std::size_t paths = 0;
            enumerate_paths(i, j, ns, max_entry, [&](const DoubleLatticePath& p) {
                auto t = path_to_tableau(p, i, j, ns);
                CHECK(tableau_to_path(t, i, j, ns) == p);
                ++paths;
                return true;
            });
            CHECK(paths == tableaux);
        }
}

TEST_CASE("single-box tableau gives one step") {
    auto shape = SkewShape::make({1});
    auto ns = analyze(make_decomposition(shape, {skew_boxes(shape)}));
    for (int q = 1; q <= 3; ++q) {
        Tableau t{{{1, 1}}, {q}};
        auto p = tableau_to_path(t, 0, 0, ns);
        CHECK(p.plus.size() + p.minus.size() >= 1);
        CHECK(path_weight(p, 3) == Polynomial::variable(3, q - 1));
    }
    Tableau t{{{1, 1}}, {4}};
    CHECK_THROWS_AS(path_weight(tableau_to_path(t, 0, 0, ns), 3), std::domain_error);
}

TEST_CASE("malformed paths are rejected") {
    const auto& ns = three_strip();
    auto ends = path_endpoints(2, 0, ns);
    DoubleLatticePath bad;
    bad.start = ends.u;
    bad.end = ends.v;
    bad.plus[40] = Step{StepKind::Horizontal, 1};
    CHECK_THROWS_AS(path_to_tableau(bad, 2, 0, ns), std::invalid_argument);
}

TEST_CASE("crossing detection") {
    const auto& ns = three_strip();
    auto sh = ns.sharp(0, 1);
    REQUIRE(sh.kind == SharpResult::Defined);
    std::optional<Tableau> first;
    enumerate_ssyt(sh.segment, 6, [&](const Tableau& t) {
        first = t;
        return false;
    });
    REQUIRE(first);
    auto p = tableau_to_path(*first, 0, 1, ns);
    CHECK_FALSE(is_noncrossing({p, p}).noncrossing);

    auto box = SkewShape::make({1});
    auto single = analyze(make_decomposition(box, {skew_boxes(box)}));
    auto q = tableau_to_path(Tableau{{{1, 1}}, {1}}, 0, 0, single);
    DoubleLatticePath far = q;
    far.start.x += 10;
    far.end.x += 10;
    std::map<int, Step> shifted_plus, shifted_minus;
    for (const auto& [g, s] : q.plus) shifted_plus[g + 10] = s;
    for (const auto& [g, s] : q.minus) shifted_minus[g + 10] = s;
    far.plus = shifted_plus;
    far.minus = shifted_minus;
    auto rep = is_noncrossing({q, far});
    CHECK(rep.noncrossing);
    CHECK(rep.touchpoints.empty());
}

TEST_CASE("tableau tuples have r touchpoints and matching weight") {
    const auto& ns = three_strip();
    const auto& d = ns.decomposition;
    const int max_entry = 5;
    std::size_t seen = 0;
    enumerate_ssyt(d.shape, max_entry, [&](const Tableau& t) {
        auto tuple = tableau_tuple_to_path_tuple(t, ns);
        auto rep = is_noncrossing(tuple.paths);
        CHECK(rep.noncrossing);
        CHECK(static_cast<int>(rep.touchpoints.size()) == d.r());
        Polynomial product = Polynomial::constant(max_entry, 1);
        for (const auto& p : tuple.paths) product *= path_weight(p, max_entry);
        Polynomial expected = monomial_of(t, max_entry);
        for (const auto& [x, y] : rep.touchpoints) expected *= Polynomial::variable(max_entry, y - 1);
        CHECK(product == expected);
        return ++seen < 200;
    });
    CHECK(seen > 0);
}

TEST_CASE("single-strip tableaux give one path and no touchpoints") {
    auto hook = SkewShape::make({3, 1, 1});
    auto ns = analyze(make_decomposition(hook, {skew_boxes(hook)}));
    enumerate_ssyt(hook, 5, [&](const Tableau& t) {
        auto tuple = tableau_tuple_to_path_tuple(t, ns);
        CHECK(tuple.paths.size() == 1);
        CHECK(tuple.touchpoints.empty());
        return true;
    });
}

TEST_CASE("start and end orders agree on paths sharing an x-range") {
    CHECK(start_order(three_strip()) == end_order(three_strip()));
    std::size_t overlapping = 0;
    for (const auto& s : connected_skew_shapes(6))
        for (const auto& d : enumerate_nested_decompositions(s, 3)) {
            auto ns = analyze(d);
            auto su = start_order(ns), ev = end_order(ns);
            for (int i = 0; i < d.g(); ++i)
                for (int k = i + 1; k < d.g(); ++k) {
                    auto a = path_endpoints(i, i, ns), b = path_endpoints(k, k, ns);
                    if (std::max(a.u.x, b.u.x) > std::min(a.v.x, b.v.x)) continue;
                    ++overlapping;
                    CHECK((su[i] < su[k]) == (ev[i] < ev[k]));
                }
        }
    CHECK(overlapping > 0);
}

TEST_CASE("orders may disagree on paths with disjoint x-ranges") {
    auto shape = SkewShape::make({2, 1});
    auto d = make_decomposition(shape, {{{1, 2}}, {{1, 1}}, {{2, 1}}});
    REQUIRE(is_nested(d));
    auto ns = analyze(d);
    CHECK(start_order(ns) == std::vector<int>{0, 2, 1});
    CHECK(end_order(ns) == std::vector<int>{1, 2, 0});
}

TEST_CASE("lattice point formatting") {
    CHECK(LatticePoint{2, false, 1}.str() == "(2,1)");
    CHECK(LatticePoint{-3, true, 1}.str() == "(-3,inf)");
}
