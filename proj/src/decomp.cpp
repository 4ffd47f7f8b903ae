#include "skewdet/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace skewdet {

bool is_upper_corner(const Diagram& strip, Box b) {
    return strip.count(b) && !strip.count(shifted(b, -1, 0)) && !strip.count(shifted(b, 0, -1));
}

bool is_lower_corner(const Diagram& strip, Box b) {
    return strip.count(b) && !strip.count(shifted(b, 1, 0)) && !strip.count(shifted(b, 0, 1));
}

bool in_square_block(const Diagram& strip, Box b) {
    for (int dr : {-1, 0})
        for (int dc : {-1, 0}) {
            Box o = shifted(b, dr, dc);
            if (strip.count(o) && strip.count(shifted(o, 1, 0)) && strip.count(shifted(o, 0, 1)) &&
                strip.count(shifted(o, 1, 1)))
                return true;
        }
    return false;
}

std::vector<Corner> special_corners(const Diagram& strip) {
    if (strip.size() < 2) throw std::domain_error("corners are undefined for a single-box strip");
    Box start = starting_box(strip), end = ending_box(strip);
    std::vector<Corner> out;
    for (Box b : strip) {
        bool up = is_upper_corner(strip, b), low = is_lower_corner(strip, b);
        if (!up && !low) continue;
        bool special = b == start || b == end || in_square_block(strip, b);
        out.push_back({b, up ? CornerKind::Upper : CornerKind::Lower, special});
    }
    return out;
}

bool is_special_corner(const Diagram& strip, Box b) {
    if (strip.size() < 2 || !strip.count(b)) return false;
    if (!is_upper_corner(strip, b) && !is_lower_corner(strip, b)) return false;
    return b == starting_box(strip) || b == ending_box(strip) || in_square_block(strip, b);
}

std::vector<SharedCorner> find_shared_corners(const std::vector<Diagram>& strips) {
    std::vector<SharedCorner> out;
    for (int i = 0; i < static_cast<int>(strips.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(strips.size()); ++j)
            for (Box b : strips[i]) {
                if (!strips[j].count(b)) continue;
                if (is_lower_corner(strips[i], b))
                    out.push_back({b, i, j});
                else
                    out.push_back({b, j, i});
            }
    std::sort(out.begin(), out.end(), [](const SharedCorner& a, const SharedCorner& b) { return a.box < b.box; });
    return out;
}

namespace {

ValidationReport violation(std::string clause, std::string message, std::vector<int> strips,
                           std::vector<Box> boxes) {
    ValidationReport r;
    r.ok = false;
    r.clause = std::move(clause);
    r.message = std::move(message);
    r.strips = std::move(strips);
    r.boxes = std::move(boxes);
    return r;
}

std::string label(int i) { return "strip " + std::to_string(i + 1); }

}  // namespace

ValidationReport validate_decomposition(const SkewShape& shape, const std::vector<Diagram>& strips) {
    Diagram all = skew_boxes(shape);
    for (int i = 0; i < static_cast<int>(strips.size()); ++i) {
        const Diagram& s = strips[i];
        if (s.empty()) return violation("empty-strip", label(i) + " has no boxes", {i}, {});
        for (Box b : s)
            if (!all.count(b))
                return violation("box-outside-shape", label(i) + " has box " + box_str(b) + " outside the shape",
                                 {i}, {b});
        if (!is_thickened_strip(s))
            return violation("not-thickened-strip", label(i) + " is not a thickened strip", {i}, {});
    }
    Diagram covered;
    for (const auto& s : strips) covered.insert(s.begin(), s.end());
    if (covered != all) {
        std::vector<Box> missing;
        std::set_difference(all.begin(), all.end(), covered.begin(), covered.end(), std::back_inserter(missing));
        return violation("union", "strips leave " + std::to_string(missing.size()) + " boxes uncovered", {},
                         missing);
    }
    for (int i = 0; i < static_cast<int>(strips.size()); ++i) {
        Box st = starting_box(strips[i]);
        if (!(perimeter_class(shape, st) & (Left | Bottom)))
            return violation("start-perimeter",
                             label(i) + " starts at " + box_str(st) + ", neither on the left nor the bottom perimeter",
                             {i}, {st});
        Box en = ending_box(strips[i]);
        if (!(perimeter_class(shape, en) & (Right | Top)))
            return violation("end-perimeter",
                             label(i) + " ends at " + box_str(en) + ", neither on the right nor the top perimeter",
                             {i}, {en});
    }
    std::map<Box, std::vector<int>> owners;
    for (int i = 0; i < static_cast<int>(strips.size()); ++i)
        for (Box b : strips[i]) owners[b].push_back(i);
    for (auto& [b, who] : owners)
        if (who.size() > 2) return violation("overlap", "box " + box_str(b) + " lies in three or more strips", who, {b});
    for (int i = 0; i < static_cast<int>(strips.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(strips.size()); ++j) {
            std::vector<Box> common;
            for (Box b : strips[i])
                if (strips[j].count(b)) common.push_back(b);
            if (common.empty()) continue;
            if (strips[i].size() == 1 || strips[j].size() == 1)
                return violation("single-box-special", "a single-box strip overlaps another strip", {i, j}, common);
            int orientation = 0;  // +1: lower in i, upper in j
            for (Box b : common) {
                if (!is_special_corner(strips[i], b) || !is_special_corner(strips[j], b))
                    return violation("overlap", "shared box " + box_str(b) + " is not a special corner of both strips",
                                     {i, j}, {b});
                int o = 0;
                if (is_lower_corner(strips[i], b) && is_upper_corner(strips[j], b)) o = 1;
                if (is_upper_corner(strips[i], b) && is_lower_corner(strips[j], b)) o = -1;
                if (o == 0)
                    return violation("overlap", "shared box " + box_str(b) + " is not a lower corner of one strip and an upper corner of the other",
                                     {i, j}, {b});
                if (orientation != 0 && o != orientation)
                    return violation("overlap", "shared boxes of " + label(i) + " and " + label(j) + " disagree on which strip lies outside",
                                     {i, j}, common);
                orientation = o;
            }
        }
    return {};
}

ValidationReport validate_decomposition(const Decomposition& d) { return validate_decomposition(d.shape, d.strips); }

Decomposition make_decomposition(const SkewShape& shape, std::vector<Diagram> strips) {
    auto report = validate_decomposition(shape, strips);
    if (!report.ok) throw std::invalid_argument(report.clause + ": " + report.message);
    Decomposition d;
    d.shape = shape;
    d.strips = std::move(strips);
    d.shared_corners = find_shared_corners(d.strips);
    return d;
}

Diagram enrich(int i, const Decomposition& d) {
    const Diagram& strip = d.strips.at(i);
    Diagram out = strip;
    if (strip.size() < 2) return out;
    auto other_has = [&](Box b, bool upper) {
        for (int j = 0; j < d.g(); ++j) {
            if (j == i || d.strips[j].size() < 2 || !d.strips[j].count(b)) continue;
            if (upper ? is_upper_corner(d.strips[j], b) : is_lower_corner(d.strips[j], b)) return true;
        }
        return false;
    };
    for (Box b : {starting_box(strip), ending_box(strip)}) {
        if (is_lower_corner(strip, b) && other_has(b, true))
            for (Box n : {shifted(b, 0, -1), shifted(b, -1, 0), shifted(b, -1, -1)}) out.insert(n);
        if (is_upper_corner(strip, b) && other_has(b, false))
            for (Box n : {shifted(b, 0, 1), shifted(b, 1, 0), shifted(b, 1, 1)}) out.insert(n);
    }
    return out;
}

std::string direction_name(Direction d) {
    switch (d) {
        case Direction::Right: return "right";
        case Direction::Up: return "up";
        case Direction::RightAndUp: return "right-and-up";
    }
    return "?";
}

Diagram special_corners_of(const Decomposition& d) {
    Diagram out;
    for (const auto& sc : d.shared_corners) out.insert(sc.box);
    for (const auto& s : d.strips) {
        if (s.size() < 2) continue;
        for (const auto& c : special_corners(s))
            if (in_square_block(s, c.box)) out.insert(c.box);
    }
    return out;
}

namespace {

Direction direction_in(Box b, const Diagram& enriched, const SkewShape& shape) {
    bool up = enriched.count(shifted(b, -1, 0)), right = enriched.count(shifted(b, 0, 1));
    if (up && right) return Direction::RightAndUp;
    if (right) return Direction::Right;
    if (up) return Direction::Up;
    return (perimeter_class(shape, b) & Top) ? Direction::Up : Direction::Right;
}

int owner_of(Box b, const Decomposition& d) {
    for (int i = 0; i < d.g(); ++i)
        if (d.strips[i].count(b)) return i;
    throw std::invalid_argument("box " + box_str(b) + " is not covered by the decomposition");
}

}  // namespace

Direction box_direction(Box b, const Decomposition& d) {
    if (special_corners_of(d).count(b))
        throw std::domain_error("box " + box_str(b) + " is a special corner and has no direction");
    int i = owner_of(b, d);
    return direction_in(b, enrich(i, d), d.shape);
}

NestednessReport nestedness(const Decomposition& d) {
    NestednessReport rep;
    rep.special = special_corners_of(d);
    std::vector<Diagram> enriched;
    for (int i = 0; i < d.g(); ++i) enriched.push_back(enrich(i, d));
    std::map<int, std::vector<Box>> by_content;
    for (Box b : skew_boxes(d.shape)) {
        by_content[b.content()].push_back(b);
        if (!rep.special.count(b)) rep.directions[b] = direction_in(b, enriched[owner_of(b, d)], d.shape);
    }
    auto all_special = [&](int c) {
        auto it = by_content.find(c);
        if (it == by_content.end()) return false;
        return std::all_of(it->second.begin(), it->second.end(), [&](Box b) { return rep.special.count(b) > 0; });
    };
    for (auto& [c, boxes] : by_content) {
        bool uniform = std::none_of(boxes.begin(), boxes.end(), [&](Box b) { return rep.special.count(b) > 0; });
        if (uniform) {
            bool all_right = true, all_up = true;
            for (Box b : boxes) {
                all_right = all_right && rep.directions[b] == Direction::Right;
                all_up = all_up && rep.directions[b] == Direction::Up;
            }
            uniform = all_right || all_up;
        }
        if (uniform || all_special(c) || all_special(c + 1)) continue;
        rep.failing_contents.push_back(c);
    }
    // A fully special diagonal must follow a diagonal that goes right and up, and only such a one.
    for (auto& [c, boxes] : by_content) {
        if (!by_content.count(c + 1)) continue;
        bool right_and_up = std::all_of(boxes.begin(), boxes.end(), [&](Box b) {
            return !rep.special.count(b) && rep.directions[b] == Direction::RightAndUp;
        });
        if (right_and_up != all_special(c + 1)) rep.failing_contents.push_back(c);
    }
    // An unshared endpoint next to an all-special diagonal has no consistent direction in the cutting strip.
    Diagram shared;
    for (const auto& sc : find_shared_corners(d.strips)) shared.insert(sc.box);
    for (const auto& s : d.strips) {
        Box a = starting_box(s), e = ending_box(s);
        if (!shared.count(a) && all_special(a.content() - 1)) rep.failing_contents.push_back(a.content() - 1);
        if (!shared.count(e) && all_special(e.content() + 1)) rep.failing_contents.push_back(e.content());
    }
    std::sort(rep.failing_contents.begin(), rep.failing_contents.end());
    rep.failing_contents.erase(std::unique(rep.failing_contents.begin(), rep.failing_contents.end()),
                               rep.failing_contents.end());
    rep.nested = rep.failing_contents.empty();
    if (!rep.nested) rep.failing_content = rep.failing_contents.front();
    return rep;
}

bool is_nested(const Decomposition& d) { return nestedness(d).nested; }

std::string Address::str() const {
    std::string s = "[" + std::to_string(content);
    if (sign > 0) s += ",+";
    if (sign < 0) s += ",-";
    return s + "]";
}

Box CuttingStrip::at(Address a) const {
    auto it = by_content.find(a.content);
    if (it == by_content.end()) throw std::out_of_range("no box of content " + std::to_string(a.content));
    const auto& v = it->second;
    if (a.sign == 0 && v.size() == 1) return v[0];
    if (a.sign > 0 && v.size() == 2) return v[0];
    if (a.sign < 0 && v.size() == 2) return v[1];
    throw std::out_of_range("address " + a.str() + " does not exist in the cutting strip");
}

bool CuttingStrip::doubled(int content) const {
    auto it = by_content.find(content);
    return it != by_content.end() && it->second.size() == 2;
}

Diagram CuttingStrip::segment(Address from, Address to) const {
    Diagram out{at(from), at(to)};
    for (int c = from.content + 1; c < to.content; ++c)
        for (Box b : by_content.at(c)) out.insert(b);
    return out;
}

CuttingStrip cutting_strip(const Decomposition& d) {
    NestednessReport rep = nestedness(d);
    if (!rep.nested)
        throw std::domain_error("decomposition is not nested at content " + std::to_string(rep.failing_content));
    std::vector<std::map<int, std::vector<Box>>> profiles;
    std::set<int> contents, doubled;
    for (int i = 0; i < d.g(); ++i) {
        std::map<int, std::vector<Box>> prof;
        for (Box b : enrich(i, d)) prof[b.content()].push_back(b);
        for (auto& [c, v] : prof) {
            contents.insert(c);
            if (v.size() > 2 || (v.size() == 2 && v[1] != shifted(v[0], 1, 1)))
                throw std::logic_error("enriched strip is not a thickened strip");
            if (v.size() == 2) doubled.insert(c);
        }
        profiles.push_back(std::move(prof));
    }
    for (int c : doubled)
        if (doubled.count(c + 1)) throw std::logic_error("adjacent doubled contents in the cutting strip");
    int lo = *contents.begin(), hi = *contents.rbegin();
    std::map<int, Direction> link;
    for (int c = lo; c < hi; ++c) {
        if (doubled.count(c) || doubled.count(c + 1)) continue;
        std::optional<Direction> dir;
        auto note = [&](Direction x) {
            if (dir && *dir != x) throw std::logic_error("strips disagree on the cutting strip at content " + std::to_string(c));
            dir = x;
        };
        for (const auto& prof : profiles) {
            auto a = prof.find(c), b = prof.find(c + 1);
            if (a == prof.end() || b == prof.end()) continue;
            Box x = a->second[0], y = b->second[0];
            if (y == shifted(x, 0, 1)) note(Direction::Right);
            else if (y == shifted(x, -1, 0)) note(Direction::Up);
            else throw std::logic_error("enriched strip is disconnected along a diagonal step");
        }
        if (!dir)
            for (auto& [b, x] : rep.directions)
                if (b.content() == c) note(x);
        if (!dir || *dir == Direction::RightAndUp)
            throw std::logic_error("no direction from content " + std::to_string(c));
        link[c] = *dir;
    }
    CuttingStrip h;
    Box cur{0, lo};  // the single box, or the upper corner of a doubled content
    for (int c = lo; c <= hi; ++c) {
        if (c > lo) {
            if (doubled.count(c - 1))
                cur = shifted(cur, 0, 1);
            else if (doubled.count(c))
                cur = shifted(cur, -1, 0);
            else
                cur = link.at(c - 1) == Direction::Right ? shifted(cur, 0, 1) : shifted(cur, -1, 0);
        }
        h.by_content[c].push_back(cur);
        if (doubled.count(c)) {
            h.by_content[c].push_back(shifted(cur, 1, 1));
        }
        for (Box b : h.by_content[c]) h.boxes.insert(b);
    }
    if (!is_thickened_strip(h.boxes)) throw std::logic_error("superimposed strips do not form a thickened strip");
    return h;
}

namespace {

Address address_of(Box b, int strip, const Decomposition& d, const Diagram& special, const CuttingStrip& h) {
    Address a{b.content(), 0};
    if (special.count(b)) {
        if (is_upper_corner(d.strips[strip], b)) a.sign = 1;
        else if (is_lower_corner(d.strips[strip], b)) a.sign = -1;
        else throw std::logic_error("special endpoint " + box_str(b) + " is not a corner");
    }
    if ((a.sign != 0) != h.doubled(a.content))
        throw std::logic_error("endpoint " + box_str(b) + " does not match the cutting strip at " + a.str());
    return a;
}

}  // namespace

NestedStructure analyze(const Decomposition& d) {
    NestedStructure ns;
    ns.decomposition = d;
    ns.nesting = nestedness(d);
    ns.cutting = cutting_strip(d);
    for (int i = 0; i < d.g(); ++i) {
        Endpoints e;
        e.p = address_of(starting_box(d.strips[i]), i, d, ns.nesting.special, ns.cutting);
        e.q = address_of(ending_box(d.strips[i]), i, d, ns.nesting.special, ns.cutting);
        ns.ends.push_back(e);
    }
    return ns;
}

Endpoints endpoints(int strip, const Decomposition& d) { return analyze(d).ends.at(strip); }

SharpResult NestedStructure::sharp(int i, int j) const {
    const Address& p = ends.at(j).p;
    const Address& q = ends.at(i).q;
    SharpResult r;
    if (p.content < q.content || p == q) {
        r.kind = SharpResult::Defined;
        r.segment = cutting.segment(p, q);
    } else if (p.content == q.content || p.content == q.content + 1) {
        r.kind = SharpResult::Empty;
    } else {
        r.kind = SharpResult::Undefined;
    }
    return r;
}

SharpResult sharp(int i, int j, const Decomposition& d) { return analyze(d).sharp(i, j); }

std::optional<SkewShape> SharpResult::shape() const {
    if (kind == Empty) return SkewShape{};
    if (kind == Undefined) return std::nullopt;
    return to_skew_shape(segment);
}

std::string SharpResult::str() const {
    if (kind == Empty) return "empty";
    if (kind == Undefined) return "undefined";
    return shape()->str();
}

void sort_canonical(std::vector<Diagram>& strips) {
    std::sort(strips.begin(), strips.end(), [](const Diagram& a, const Diagram& b) {
        int ea = ending_box(a).content(), eb = ending_box(b).content();
        if (ea != eb) return ea > eb;
        int sa = starting_box(a).content(), sb = starting_box(b).content();
        if (sa != sb) return sa > sb;
        return a < b;
    });
}

namespace {

std::vector<Diagram> components(const Diagram& d) {
    std::vector<Diagram> out;
    Diagram left = d;
    while (!left.empty()) {
        Diagram comp{*left.begin()};
        std::vector<Box> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            Box b = stack.back();
            stack.pop_back();
            for (Box n : {shifted(b, -1, 0), shifted(b, 1, 0), shifted(b, 0, -1), shifted(b, 0, 1)})
                if (left.erase(n)) {
                    comp.insert(n);
                    stack.push_back(n);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

Diagram outer_rim(const Diagram& region) {
    Diagram rim;
    for (Box b : region)
        if (!region.count(shifted(b, 1, 1))) rim.insert(b);
    return rim;
}

void require_connected(const SkewShape& shape) {
    if (!is_edgewise_connected(skew_boxes(shape))) throw std::invalid_argument("shape is not edgewise connected");
}

}  // namespace

Decomposition peel_rim(const SkewShape& shape) {
    require_connected(shape);
    Diagram region = skew_boxes(shape);
    std::vector<Diagram> strips;
    while (!region.empty()) {
        Diagram rim = outer_rim(region);
        for (auto& c : components(rim)) strips.push_back(c);
        for (Box b : rim) region.erase(b);
    }
    return make_decomposition(shape, strips);
}

Decomposition peel_thick_rim(const SkewShape& shape) {
    require_connected(shape);
    Diagram region = skew_boxes(shape), covered;
    struct Layer {
        Diagram strip;
        Diagram fillers;  // boxes completing a square with the rim, shared with the next layer
    };
    std::vector<Layer> layers;
    while (!region.empty()) {
        if (std::includes(covered.begin(), covered.end(), region.begin(), region.end())) break;
        Diagram rim = outer_rim(region);
        for (auto& comp : components(rim)) {
            if (std::includes(covered.begin(), covered.end(), comp.begin(), comp.end())) continue;
            Layer layer{comp, {}};
            for (Box b : region)
                if (!rim.count(b) && comp.count(shifted(b, 0, 1)) && comp.count(shifted(b, 1, 0))) layer.fillers.insert(b);
            layer.strip.insert(layer.fillers.begin(), layer.fillers.end());
            layers.push_back(std::move(layer));
        }
        for (Box b : rim) region.erase(b);
        for (auto& l : layers) covered.insert(l.strip.begin(), l.strip.end());
    }
    // innermost first: a filler stays shared only if the inner strip holds it as a special lower corner
    for (int k = static_cast<int>(layers.size()) - 1; k >= 0; --k) {
        for (Box b : Diagram(layers[k].fillers)) {
            int inner = -1;
            for (int j = k + 1; j < static_cast<int>(layers.size()); ++j)
                if (layers[j].strip.count(b) && !layers[j].fillers.count(b)) inner = j;
            if (inner < 0) continue;
            const Diagram& s = layers[inner].strip;
            if (s.size() >= 2 && is_lower_corner(s, b) && is_special_corner(s, b)) continue;
            layers[k].strip.erase(b);
            layers[k].fillers.erase(b);
        }
    }
    std::vector<Diagram> strips;
    for (auto& l : layers) strips.push_back(l.strip);
    return make_decomposition(shape, strips);
}

std::vector<Diagram> thickened_substrips(const SkewShape& shape) {
    std::vector<Diagram> out;
    int rows = shape.rows();
    struct Span {
        int lo, hi;
    };
    std::vector<Span> spans;
    std::function<void(int)> extend = [&](int row) {  // spans holds rows up to `row`
        Diagram d;
        int top = row - static_cast<int>(spans.size()) + 1;
        for (std::size_t k = 0; k < spans.size(); ++k)
            for (int c = spans[k].lo; c <= spans[k].hi; ++c) d.insert({top + static_cast<int>(k), c});
        out.push_back(std::move(d));
        if (row == rows) return;
        const Span last = spans.back();
        int lo_min = shape.mu[row] + 1;
        for (int lo = lo_min; lo <= last.lo; ++lo)
            for (int hi = std::max(lo, last.lo); hi <= std::min(last.hi, shape.lambda[row]); ++hi) {
                if (hi - last.lo + 1 > 2) continue;  // 2x3 block
                if (spans.size() >= 2 && hi - spans[spans.size() - 2].lo + 1 >= 2) continue;  // 3x2 block
                spans.push_back({lo, hi});
                extend(row + 1);
                spans.pop_back();
            }
    };
    for (int r = 1; r <= rows; ++r)
        for (int lo = shape.mu[r - 1] + 1; lo <= shape.lambda[r - 1]; ++lo)
            for (int hi = lo; hi <= shape.lambda[r - 1]; ++hi) {
                spans.push_back({lo, hi});
                extend(r);
                spans.pop_back();
            }
    return out;
}

void enumerate_decompositions(const SkewShape& shape, const EnumerationOptions& opts,
                              const std::function<bool(const Decomposition&)>& visit) {
    using Mask = std::uint64_t;
    Diagram all = skew_boxes(shape);
    if (all.empty()) return;
    if (all.size() > 64) throw std::invalid_argument("enumeration limited to 64 boxes");
    std::vector<Box> boxes(all.begin(), all.end());
    std::map<Box, int> index;
    for (int i = 0; i < static_cast<int>(boxes.size()); ++i) index[boxes[i]] = i;
    Mask shared_mask = 0;
    if (opts.shared_exactly)
        for (Box b : *opts.shared_exactly) shared_mask |= Mask{1} << index.at(b);

    struct Candidate {
        Diagram boxes;
        Mask mask = 0, upper = 0, lower = 0;  // special upper and lower corners
    };
    std::vector<Candidate> cands;
    for (auto& d : thickened_substrips(shape)) {
        if (opts.strips_only && has_block(d, 2, 2)) continue;
        bool out_ok = (perimeter_class(shape, starting_box(d)) & (Left | Bottom)) &&
                      (perimeter_class(shape, ending_box(d)) & (Right | Top));
        if (opts.outside && !out_ok) continue;
        if (opts.candidate_filter && !opts.candidate_filter(d)) continue;
        Candidate c;
        c.boxes = d;
        for (Box b : d) {
            Mask bit = Mask{1} << index.at(b);
            c.mask |= bit;
            if (is_special_corner(d, b)) (is_upper_corner(d, b) ? c.upper : c.lower) |= bit;
        }
        if ((c.mask & shared_mask) & ~(c.upper | c.lower)) continue;
        cands.push_back(std::move(c));
    }
    std::vector<std::vector<int>> containing(boxes.size());
    for (int k = 0; k < static_cast<int>(cands.size()); ++k)
        for (int id = 0; id < static_cast<int>(boxes.size()); ++id)
            if (cands[k].mask >> id & 1) containing[id].push_back(k);

    Mask once = 0, twice = 0;
    std::vector<int> chosen;
    std::set<std::vector<Diagram>> seen;
    std::size_t emitted = 0;
    bool stop = false;
    const Mask full = boxes.size() == 64 ? ~Mask{0} : (Mask{1} << boxes.size()) - 1;

    auto fits = [&](int k) {
        const Candidate& c = cands[k];
        if (c.mask & twice) return false;
        Mask overlap = c.mask & once;
        if (!overlap) return true;
        if (opts.shared_exactly && (overlap & ~shared_mask)) return false;
        for (int other : chosen) {
            const Candidate& o = cands[other];
            Mask common = overlap & o.mask;
            if (!common) continue;
            if (other == k) return false;
            bool mine_upper = (common & c.upper) == common && (common & o.lower) == common;
            bool mine_lower = (common & c.lower) == common && (common & o.upper) == common;
            if (!mine_upper && !mine_lower) return false;
        }
        return true;
    };

    std::function<void()> search = [&]() {
        if (stop) return;
        Mask open = opts.shared_exactly ? ((full & ~once & ~twice) | (shared_mask & once)) : (full & ~once & ~twice);
        if (!open) {
            std::vector<Diagram> strips;
            for (int k : chosen) strips.push_back(cands[k].boxes);
            sort_canonical(strips);
            if (!seen.insert(strips).second) return;
            bool valid = validate_decomposition(shape, strips).ok;
            if (!valid && opts.valid_only) return;
            Decomposition d;
            d.shape = shape;
            d.strips = strips;
            d.shared_corners = find_shared_corners(strips);
            if (valid && opts.nested_only && !is_nested(d)) return;
            ++emitted;
            if (!visit(d) || (opts.limit && emitted >= opts.limit)) stop = true;
            return;
        }
        if (static_cast<int>(chosen.size()) >= opts.max_g) return;
        int best = -1;
        std::vector<int> best_opts;
        for (int id = 0; id < static_cast<int>(boxes.size()); ++id) {
            if (!(open >> id & 1)) continue;
            std::vector<int> options;
            for (int k : containing[id])
                if (fits(k)) options.push_back(k);
            if (best < 0 || options.size() < best_opts.size()) {
                best = id;
                best_opts = std::move(options);
                if (best_opts.empty()) return;
            }
        }
        for (int k : best_opts) {
            Mask saved_once = once, saved_twice = twice;
            twice |= once & cands[k].mask;
            once = (once ^ cands[k].mask) & ~twice;
            chosen.push_back(k);
            search();
            chosen.pop_back();
            once = saved_once;
            twice = saved_twice;
            if (stop) return;
        }
    };
    search();
}

std::vector<Decomposition> enumerate_nested_decompositions(const SkewShape& shape, int max_g) {
    std::vector<Decomposition> out;
    EnumerationOptions opts;
    opts.max_g = max_g;
    enumerate_decompositions(shape, opts, [&](const Decomposition& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

}  // namespace skewdet
