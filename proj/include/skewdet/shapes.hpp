#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace skewdet {

using Partition = std::vector<int>;

struct Box {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    auto operator<=>(const Box&) const = default;
};

Box shifted(Box b, int drow, int dcol);

/* Box sets compare by set equality. Coordinates may be non-positive. */
using Diagram = std::set<Box>;

struct SkewShape {
    Partition lambda;
    Partition mu;  // padded to lambda.size()

    /* Validates and normalizes; throws std::invalid_argument. */
    static SkewShape make(Partition lambda, Partition mu = {});

    int size() const;
    int rows() const { return static_cast<int>(lambda.size()); }
    bool empty() const { return size() == 0; }
    bool contains(Box b) const;
    std::string str() const;

    bool operator==(const SkewShape&) const = default;
    auto operator<=>(const SkewShape&) const = default;
};

bool is_partition(const Partition& p);

Diagram skew_boxes(const SkewShape& shape);

bool is_edgewise_connected(const Diagram& d);
bool is_skew_diagram(const Diagram& d);
bool has_block(const Diagram& d, int height, int width);
bool is_strip(const Diagram& d);
bool is_thickened_strip(const Diagram& d);

/* Translate so the top row is 1 and the leftmost column is 1, then read off (lambda, mu). */
std::optional<SkewShape> to_skew_shape(const Diagram& d);
Diagram normalize_position(const Diagram& d);

enum Side : unsigned { Left = 1, Bottom = 2, Right = 4, Top = 8 };
using SideSet = unsigned;

SideSet perimeter_class(const Diagram& d, Box b);
SideSet perimeter_class(const SkewShape& shape, Box b);
std::string side_names(SideSet s);

/* Bottommost then leftmost; topmost then rightmost. */
Box starting_box(const Diagram& d);
Box ending_box(const Diagram& d);

SkewShape rotate180(const SkewShape& shape);

std::string box_str(Box b);

}  // namespace skewdet
