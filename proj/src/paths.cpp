#include "skewdet/paths.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skewdet {

std::string LatticePoint::str() const {
    return "(" + std::to_string(x) + "," + (top ? std::string("inf") : std::to_string(y)) + ")";
}

namespace {

int height(const LatticePoint& p, int sentinel) { return p.top ? sentinel : p.y; }

/* Points of one path: vertical fillers between steps, then the step endpoints. */
void trace(const LatticePoint& start, const LatticePoint& end, const std::map<int, Step>& steps, int sentinel,
           std::set<std::pair<int, int>>& out) {
    int x = start.x, y = height(start, sentinel);
    auto vertical = [&](int to) {
        int dir = to >= y ? 1 : -1;
        for (; y != to; y += dir) out.insert({x, y});
        out.insert({x, y});
    };
    for (const auto& [gap, s] : steps) {
        vertical(s.start_y());
        x = gap + 1;
        y = s.end_y;
        out.insert({x, y});
    }
    vertical(height(end, sentinel));
}

PathCheck fail(std::string m) { return {false, std::move(m)}; }

PathCheck check_one(const LatticePoint& start, const LatticePoint& end, const std::map<int, Step>& steps,
                    const char* name) {
    int x = start.x;
    std::optional<int> y;  // nullopt while still at the sentinel
    if (!start.top) y = start.y;
    for (const auto& [gap, s] : steps) {
        if (gap != x) return fail(std::string(name) + ": missing non-vertical step in gap " + std::to_string(x));
        if (s.end_y < 1) return fail(std::string(name) + ": step below height 1");
        int from = s.start_y();
        if (s.kind == StepKind::Horizontal && (!y || from < *y))
            return fail(std::string(name) + ": down-vertical step before a horizontal step in gap " +
                        std::to_string(gap));
        if (s.kind == StepKind::Diagonal && y && from > *y)
            return fail(std::string(name) + ": up-vertical step before a diagonal step in gap " + std::to_string(gap));
        x = gap + 1;
        y = s.end_y;
    }
    if (x != end.x) return fail(std::string(name) + ": does not reach x = " + std::to_string(end.x));
    return {};
}

/* p+ is at or above p- in a gap: higher endpoint, or same endpoint with a diagonal over a horizontal. */
bool at_or_above(const Step& hi, const Step& lo) {
    if (hi.end_y != lo.end_y) return hi.end_y > lo.end_y;
    return hi.kind == lo.kind || hi.kind == StepKind::Diagonal;
}

/* Boxes of a content, upper corner first. */
std::map<int, std::vector<Box>> by_content(const Diagram& d) {
    std::map<int, std::vector<Box>> m;
    for (Box b : d) m[b.content()].push_back(b);
    for (auto& [c, v] : m) std::sort(v.begin(), v.end());
    return m;
}

SharpResult defined_segment(int i, int j, const NestedStructure& ns) {
    SharpResult s = ns.sharp(i, j);
    if (s.kind == SharpResult::Undefined) throw std::domain_error("no lattice paths: the segment is undefined");
    return s;
}

/* Moves tableau entries onto the segment, matching content then row order. */
std::map<Box, int> transfer(const Tableau& t, const Diagram& segment) {
    std::map<Box, int> by_box;
    for (std::size_t k = 0; k < t.boxes.size(); ++k) by_box[t.boxes[k]] = t.entries[k];
    std::map<int, std::vector<Box>> src, dst = by_content(segment);
    for (const auto& [b, v] : by_box) src[b.content()].push_back(b);
    std::map<Box, int> out;
    for (auto& [c, boxes] : dst) {
        auto it = src.find(c);
        if (it == src.end() || it->second.size() != boxes.size())
            throw std::invalid_argument("tableau does not match the segment at content " + std::to_string(c));
        std::sort(it->second.begin(), it->second.end());
        for (std::size_t k = 0; k < boxes.size(); ++k) out[boxes[k]] = by_box[it->second[k]];
    }
    if (src.size() != dst.size()) throw std::invalid_argument("tableau has contents outside the segment");
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> DoubleLatticePath::points(int sentinel) const {
    std::set<std::pair<int, int>> out;
    trace(start, end, plus, sentinel, out);
    trace(start, end, minus, sentinel, out);
    return {out.begin(), out.end()};
}

int DoubleLatticePath::max_height() const {
    int h = 1;
    if (!start.top) h = std::max(h, start.y);
    if (!end.top) h = std::max(h, end.y);
    for (const auto* m : {&plus, &minus})
        for (const auto& [g, s] : *m) h = std::max(h, s.start_y());
    return h;
}

PathCheck check_path(const DoubleLatticePath& p) {
    if (auto c = check_one(p.start, p.end, p.plus, "p+"); !c.ok) return c;
    if (auto c = check_one(p.start, p.end, p.minus, "p-"); !c.ok) return c;
    for (const auto& [gap, hi] : p.plus) {
        auto it = p.minus.find(gap);
        if (it == p.minus.end() || !at_or_above(hi, it->second))
            return fail("p+ is below p- in gap " + std::to_string(gap));
    }
    return {};
}

PathEndpoints path_endpoints(int i, int j, const NestedStructure& ns) {
    const Decomposition& d = ns.decomposition;
    PathEndpoints e;
    Box s = starting_box(d.strips.at(j));
    const Address& p = ns.ends.at(j).p;
    e.u.x = s.content();
    if (p.sign != 0) e.u.top = p.sign > 0;
    else e.u.top = !(perimeter_class(d.shape, s) & Left);

    Box t = ending_box(d.strips.at(i));
    const Address& q = ns.ends.at(i).q;
    e.v.x = t.content() + 1;
    if (q.sign != 0) e.v.top = q.sign > 0;
    else e.v.top = (perimeter_class(d.shape, t) & Right) != 0;
    return e;
}

PathEndpoints path_endpoints(int i, int j, const Decomposition& d) { return path_endpoints(i, j, analyze(d)); }

std::map<int, GapPlan> path_shape(int i, int j, const NestedStructure& ns) {
    SharpResult s = defined_segment(i, j, ns);
    std::map<int, GapPlan> plan;
    if (s.kind == SharpResult::Empty) return plan;
    PathEndpoints e = path_endpoints(i, j, ns);
    auto cols = by_content(s.segment);
    for (auto& [c, boxes] : cols) {
        if (boxes.size() > 2) throw std::logic_error("segment has three boxes of one content");
        GapPlan g;
        g.minus_box = boxes.front();
        g.plus_box = boxes.back();
        auto kind_of = [&](Box b, bool plus_side) {
            auto prev = cols.find(c - 1);
            if (prev == cols.end()) return e.u.top ? StepKind::Diagonal : StepKind::Horizontal;
            Box from = plus_side ? prev->second.back() : prev->second.front();
            if (from == shifted(b, 0, -1)) return StepKind::Horizontal;
            if (from == shifted(b, 1, 0)) return StepKind::Diagonal;
            throw std::logic_error("segment boxes at contents " + std::to_string(c - 1) + " and " +
                                   std::to_string(c) + " are not adjacent");
        };
        g.plus_kind = kind_of(g.plus_box, true);
        g.minus_kind = kind_of(g.minus_box, false);
        plan[c] = g;
    }
    return plan;
}

DoubleLatticePath tableau_to_path(const Tableau& t, int i, int j, const NestedStructure& ns) {
    SharpResult s = defined_segment(i, j, ns);
    PathEndpoints e = path_endpoints(i, j, ns);
    DoubleLatticePath p{e.u, e.v, {}, {}};
    if (s.kind == SharpResult::Empty) {
        if (!t.boxes.empty()) throw std::invalid_argument("nonempty tableau on an empty segment");
        return p;
    }
    std::map<Box, int> entry = transfer(t, s.segment);
    for (const auto& [c, g] : path_shape(i, j, ns)) {
        p.plus[c] = Step{g.plus_kind, entry.at(g.plus_box)};
        p.minus[c] = Step{g.minus_kind, entry.at(g.minus_box)};
    }
    return p;
}

Tableau path_to_tableau(const DoubleLatticePath& p, int i, int j, const NestedStructure& ns) {
    SharpResult s = defined_segment(i, j, ns);
    PathEndpoints e = path_endpoints(i, j, ns);
    if (!(p.start == e.u) || !(p.end == e.v))
        throw std::invalid_argument("path endpoints " + p.start.str() + "->" + p.end.str() + " differ from " +
                                    e.u.str() + "->" + e.v.str());
    Tableau t;
    if (s.kind == SharpResult::Empty) {
        if (!p.plus.empty() || !p.minus.empty()) throw std::invalid_argument("empty segment needs a vertical path");
        return t;
    }
    if (auto c = check_path(p); !c.ok) throw std::invalid_argument(c.message);
    auto plan = path_shape(i, j, ns);
    if (p.plus.size() != plan.size() || p.minus.size() != plan.size())
        throw std::invalid_argument("path does not span the segment");
    std::map<Box, int> entry;
    for (const auto& [c, g] : plan) {
        const Step& hi = p.plus.at(c);
        const Step& lo = p.minus.at(c);
        if (hi.kind != g.plus_kind || lo.kind != g.minus_kind)
            throw std::invalid_argument("step kind in gap " + std::to_string(c) + " does not match the segment");
        if (g.plus_box == g.minus_box && hi.end_y != lo.end_y)
            throw std::invalid_argument("single box in gap " + std::to_string(c) + " needs one endpoint");
        entry[g.plus_box] = hi.end_y;
        entry[g.minus_box] = lo.end_y;
    }
    for (const auto& [b, v] : entry) {
        t.boxes.push_back(b);
        t.entries.push_back(v);
    }
    if (!t.is_semistandard()) throw std::invalid_argument("path yields a tableau that is not semistandard");
    return t;
}

void enumerate_paths(int i, int j, const NestedStructure& ns, int max_height,
                     const std::function<bool(const DoubleLatticePath&)>& visit) {
    SharpResult s = defined_segment(i, j, ns);
    PathEndpoints e = path_endpoints(i, j, ns);
    DoubleLatticePath p{e.u, e.v, {}, {}};
    if (s.kind == SharpResult::Empty) {
        visit(p);
        return;
    }
    auto plan = path_shape(i, j, ns);
    std::vector<std::pair<int, GapPlan>> gaps(plan.begin(), plan.end());
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (stop) return;
        if (k == gaps.size()) {
            if (check_path(p).ok && !visit(p)) stop = true;
            return;
        }
        const auto& [c, g] = gaps[k];
        bool single = g.plus_box == g.minus_box;
        for (int hi = 1; hi <= max_height && !stop; ++hi)
            for (int lo = single ? hi : 1; lo <= (single ? hi : max_height) && !stop; ++lo) {
                p.plus[c] = Step{g.plus_kind, hi};
                p.minus[c] = Step{g.minus_kind, lo};
                go(k + 1);
            }
        p.plus.erase(c);
        p.minus.erase(c);
    };
    go(0);
}

CrossingReport is_noncrossing(const std::vector<DoubleLatticePath>& paths) {
    CrossingReport rep;
    int sentinel = 1;
    for (const auto& p : paths) sentinel = std::max(sentinel, p.max_height());
    sentinel += 1;
    std::vector<std::set<std::pair<int, int>>> pts;
    for (const auto& p : paths) {
        auto v = p.points(sentinel);
        pts.emplace_back(v.begin(), v.end());
    }
    auto ends_with = [](const DoubleLatticePath& p, std::pair<int, int> pt, StepKind k) {
        for (const auto* m : {&p.plus, &p.minus}) {
            auto it = m->find(pt.first - 1);
            if (it != m->end() && it->second.end_y == pt.second && it->second.kind == k) return true;
        }
        return false;
    };
    std::set<std::pair<int, int>> touch;
    for (std::size_t a = 0; a < paths.size(); ++a)
        for (std::size_t b = a + 1; b < paths.size(); ++b) {
            int top = -1;  // index of the path on top, fixed by the first common point
            for (auto pt : pts[a]) {
                if (!pts[b].count(pt)) continue;
                bool a_top = ends_with(paths[a], pt, StepKind::Diagonal) && ends_with(paths[b], pt, StepKind::Horizontal);
                bool b_top = ends_with(paths[b], pt, StepKind::Diagonal) && ends_with(paths[a], pt, StepKind::Horizontal);
                int who = a_top ? static_cast<int>(a) : b_top ? static_cast<int>(b) : -2;
                if (who == -2 || (top >= 0 && who != top)) {
                    rep.noncrossing = false;
                    rep.message = "paths " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                  " cross at (" + std::to_string(pt.first) + "," + std::to_string(pt.second) + ")";
                    rep.touchpoints.clear();
                    return rep;
                }
                top = who;
                touch.insert(pt);
            }
        }
    rep.touchpoints.assign(touch.begin(), touch.end());
    return rep;
}

PathTuple tableau_tuple_to_path_tuple(const Tableau& t, const NestedStructure& ns) {
    PathTuple out;
    for (int i = 0; i < ns.decomposition.g(); ++i)
        out.paths.push_back(tableau_to_path(t.restricted_to(ns.decomposition.strips[i]), i, i, ns));
    out.touchpoints = is_noncrossing(out.paths).touchpoints;
    return out;
}

Polynomial path_weight(const DoubleLatticePath& p, int nvars) {
    Exponents e(nvars, 0);
    auto bump = [&](int y) {
        if (y < 1 || y > nvars) throw std::domain_error("height " + std::to_string(y) + " exceeds " + std::to_string(nvars) + " variables");
        ++e[y - 1];
    };
    for (const auto& [gap, hi] : p.plus) {
        bump(hi.end_y);
        auto it = p.minus.find(gap);
        if (it != p.minus.end() && it->second.end_y != hi.end_y) bump(it->second.end_y);
    }
    for (const auto& [gap, lo] : p.minus)
        if (!p.plus.count(gap)) bump(lo.end_y);
    return Polynomial::monomial(e);
}

namespace {

std::vector<int> ranks(int g, const std::function<bool(int, int)>& before) {
    std::vector<int> idx(g);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), before);
    std::vector<int> rank(g);
    for (int k = 0; k < g; ++k) rank[idx[k]] = k;
    return rank;
}

}  // namespace

std::vector<int> start_order(const NestedStructure& ns) {
    int g = ns.decomposition.g();
    std::vector<LatticePoint> u;
    for (int j = 0; j < g; ++j) u.push_back(path_endpoints(j, j, ns).u);
    return ranks(g, [&](int s, int i) {
        if (u[s].top != u[i].top) return u[s].top;
        return u[s].top ? u[s].x > u[i].x : u[s].x < u[i].x;
    });
}

std::vector<int> end_order(const NestedStructure& ns) {
    int g = ns.decomposition.g();
    std::vector<LatticePoint> v;
    for (int i = 0; i < g; ++i) v.push_back(path_endpoints(i, i, ns).v);
    return ranks(g, [&](int s, int i) {
        if (v[s].top != v[i].top) return v[s].top;
        return v[s].top ? v[s].x < v[i].x : v[s].x > v[i].x;
    });
}

}  // namespace skewdet
