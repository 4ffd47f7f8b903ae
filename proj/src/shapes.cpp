#include "skewdet/shapes.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace skewdet {

Box shifted(Box b, int drow, int dcol) { return {b.row + drow, b.col + dcol}; }

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

SkewShape SkewShape::make(Partition lambda, Partition mu) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw std::invalid_argument("not a partition");
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    if (mu.size() > lambda.size()) throw std::invalid_argument("mu is not contained in lambda");
    mu.resize(lambda.size(), 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (mu[i] > lambda[i]) throw std::invalid_argument("mu is not contained in lambda");
    SkewShape s;
    s.lambda = std::move(lambda);
    s.mu = std::move(mu);
    return s;
}

int SkewShape::size() const {
    int n = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) n += lambda[i] - mu[i];
    return n;
}

bool SkewShape::contains(Box b) const {
    if (b.row < 1 || b.row > rows()) return false;
    return mu[b.row - 1] < b.col && b.col <= lambda[b.row - 1];
}

static std::string join(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::string SkewShape::str() const {
    Partition m = mu;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.empty()) return join(lambda);
    return join(lambda) + "/" + join(m);
}

std::string box_str(Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

Diagram skew_boxes(const SkewShape& shape) {
    Diagram d;
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = shape.mu[i] + 1; j <= shape.lambda[i]; ++j) d.insert({i + 1, j});
    return d;
}

bool is_edgewise_connected(const Diagram& d) {
    if (d.empty()) return true;
    Diagram seen{*d.begin()};
    std::queue<Box> q;
    q.push(*d.begin());
    while (!q.empty()) {
        Box b = q.front();
        q.pop();
        for (Box n : {shifted(b, -1, 0), shifted(b, 1, 0), shifted(b, 0, -1), shifted(b, 0, 1)})
            if (d.count(n) && seen.insert(n).second) q.push(n);
    }
    return seen.size() == d.size();
}

namespace {

struct RowSpan {
    int lo, hi, count;
};

std::map<int, RowSpan> row_spans(const Diagram& d) {
    std::map<int, RowSpan> rows;
    for (Box b : d) {
        auto [it, fresh] = rows.try_emplace(b.row, RowSpan{b.col, b.col, 0});
        it->second.lo = std::min(it->second.lo, b.col);
        it->second.hi = std::max(it->second.hi, b.col);
        it->second.count++;
    }
    return rows;
}

}  // namespace

Diagram normalize_position(const Diagram& d) {
    if (d.empty()) return d;
    int r0 = d.begin()->row, c0 = d.begin()->col;
    for (Box b : d) c0 = std::min(c0, b.col);
    Diagram out;
    for (Box b : d) out.insert({b.row - r0 + 1, b.col - c0 + 1});
    return out;
}

std::optional<SkewShape> to_skew_shape(const Diagram& d) {
    if (d.empty()) return SkewShape{};
    Diagram n = normalize_position(d);
    auto rows = row_spans(n);
    int last = rows.rbegin()->first;
    Partition lambda(last, 0), mu(last, 0);
    for (auto& [r, span] : rows) {
        if (span.hi - span.lo + 1 != span.count) return std::nullopt;
        lambda[r - 1] = span.hi;
        mu[r - 1] = span.lo - 1;
    }
    // an empty row copies the row below it; the partition check rejects impossible gaps
    for (int r = last - 1; r >= 1; --r)
        if (!rows.count(r)) lambda[r - 1] = mu[r - 1] = lambda[r];
    if (!is_partition(lambda) || !is_partition(mu)) return std::nullopt;
    auto shape = SkewShape::make(lambda, mu);
    if (skew_boxes(shape) != n) return std::nullopt;
    return shape;
}

bool is_skew_diagram(const Diagram& d) { return to_skew_shape(d).has_value(); }

bool has_block(const Diagram& d, int height, int width) {
    for (Box b : d) {
        bool full = true;
        for (int i = 0; i < height && full; ++i)
            for (int j = 0; j < width && full; ++j) full = d.count(shifted(b, i, j)) > 0;
        if (full) return true;
    }
    return false;
}

bool is_strip(const Diagram& d) {
    return !d.empty() && is_edgewise_connected(d) && is_skew_diagram(d) && !has_block(d, 2, 2);
}

bool is_thickened_strip(const Diagram& d) {
    return !d.empty() && is_edgewise_connected(d) && is_skew_diagram(d) && !has_block(d, 3, 2) &&
           !has_block(d, 2, 3);
}

SideSet perimeter_class(const Diagram& d, Box b) {
    if (!d.count(b)) throw std::invalid_argument("box " + box_str(b) + " is not in the shape");
    SideSet s = 0;
    if (!d.count(shifted(b, 0, -1))) s |= Left;
    if (!d.count(shifted(b, 1, 0))) s |= Bottom;
    if (!d.count(shifted(b, 0, 1))) s |= Right;
    if (!d.count(shifted(b, -1, 0))) s |= Top;
    return s;
}

SideSet perimeter_class(const SkewShape& shape, Box b) {
    if (!shape.contains(b)) throw std::invalid_argument("box " + box_str(b) + " is not in the shape");
    SideSet s = 0;
    if (!shape.contains(shifted(b, 0, -1))) s |= Left;
    if (!shape.contains(shifted(b, 1, 0))) s |= Bottom;
    if (!shape.contains(shifted(b, 0, 1))) s |= Right;
    if (!shape.contains(shifted(b, -1, 0))) s |= Top;
    return s;
}

std::string side_names(SideSet s) {
    std::string out;
    auto add = [&](Side f, const char* name) {
        if (!(s & f)) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(Left, "Left");
    add(Bottom, "Bottom");
    add(Right, "Right");
    add(Top, "Top");
    return "{" + out + "}";
}

Box starting_box(const Diagram& d) {
    if (d.empty()) throw std::invalid_argument("empty diagram has no starting box");
    int bottom = d.rbegin()->row;
    return *d.lower_bound({bottom, INT32_MIN});
}

Box ending_box(const Diagram& d) {
    if (d.empty()) throw std::invalid_argument("empty diagram has no ending box");
    int top = d.begin()->row;
    return *std::prev(d.lower_bound({top + 1, INT32_MIN}));
}

SkewShape rotate180(const SkewShape& shape) {
    if (shape.empty()) return {};
    Diagram d;
    for (Box b : skew_boxes(shape)) d.insert({-b.row, -b.col});
    return *to_skew_shape(d);
}

}  // namespace skewdet
