#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewdet/shapes.hpp"

namespace skewdet {

enum class CornerKind { Upper, Lower };

struct Corner {
    Box box;
    CornerKind kind;
    bool special;
};

bool is_upper_corner(const Diagram& strip, Box b);
bool is_lower_corner(const Diagram& strip, Box b);
bool in_square_block(const Diagram& strip, Box b);
/* All corners of a strip with more than one box; throws std::domain_error otherwise. */
std::vector<Corner> special_corners(const Diagram& strip);
bool is_special_corner(const Diagram& strip, Box b);

struct SharedCorner {
    Box box;
    int lower_owner;  // the strip in which the box is a lower corner
    int upper_owner;
};

struct Decomposition {
    SkewShape shape;
    std::vector<Diagram> strips;
    std::vector<SharedCorner> shared_corners;  // filled by make_decomposition

    int g() const { return static_cast<int>(strips.size()); }
    int r() const { return static_cast<int>(shared_corners.size()); }
};

struct ValidationReport {
    bool ok = true;
    std::string clause;
    std::string message;
    std::vector<int> strips;
    std::vector<Box> boxes;
};

ValidationReport validate_decomposition(const SkewShape& shape, const std::vector<Diagram>& strips);
ValidationReport validate_decomposition(const Decomposition& d);
std::vector<SharedCorner> find_shared_corners(const std::vector<Diagram>& strips);
/* Validates and fills the shared corners; throws std::invalid_argument with the report message. */
Decomposition make_decomposition(const SkewShape& shape, std::vector<Diagram> strips);

Diagram enrich(int strip, const Decomposition& d);

enum class Direction { Right, Up, RightAndUp };
std::string direction_name(Direction d);

/* Shared boxes and corners lying in a square block of their strip. */
Diagram special_corners_of(const Decomposition& d);
Direction box_direction(Box b, const Decomposition& d);

struct NestednessReport {
    bool nested = true;
    int failing_content = 0;            // the first one
    std::vector<int> failing_contents;
    std::map<Box, Direction> directions;
    Diagram special;
};
NestednessReport nestedness(const Decomposition& d);
bool is_nested(const Decomposition& d);

struct Address {
    int content = 0;
    int sign = 0;  // 0 for [c], +1 for [c,+], -1 for [c,-]
    bool operator==(const Address&) const = default;
    std::string str() const;
};

struct CuttingStrip {
    Diagram boxes;
    std::map<int, std::vector<Box>> by_content;  // one box, or the upper then the lower corner

    Box at(Address a) const;
    bool doubled(int content) const;
    /* Boxes from address `from` to address `to`, inclusive, in content order. */
    Diagram segment(Address from, Address to) const;
};

CuttingStrip cutting_strip(const Decomposition& d);

struct Endpoints {
    Address p, q;
};
Endpoints endpoints(int strip, const Decomposition& d);

struct SharpResult {
    enum Kind { Defined, Empty, Undefined } kind = Undefined;
    Diagram segment;
    std::optional<SkewShape> shape() const;
    std::string str() const;
};

/* Everything the # operation needs, computed once. */
struct NestedStructure {
    Decomposition decomposition;
    NestednessReport nesting;
    CuttingStrip cutting;
    std::vector<Endpoints> ends;

    SharpResult sharp(int i, int j) const;  // 0-based
};
NestedStructure analyze(const Decomposition& d);
SharpResult sharp(int i, int j, const Decomposition& d);

Decomposition peel_rim(const SkewShape& shape);
Decomposition peel_thick_rim(const SkewShape& shape);

/* Connected skew sub-diagrams of the shape with no 3x2 or 2x3 block. */
std::vector<Diagram> thickened_substrips(const SkewShape& shape);

struct EnumerationOptions {
    int max_g = 3;
    std::optional<Diagram> shared_exactly;  // when set, exactly these boxes lie in two strips
    bool nested_only = true;
    bool valid_only = true;   // false also emits covers that fail validation (nesting is then not checked)
    bool outside = true;      // candidate strips must start on Left/Bottom and end on Right/Top
    bool strips_only = false; // forbid square blocks inside candidates
    std::function<bool(const Diagram&)> candidate_filter;  // extra admission test, optional
    std::size_t limit = 0;    // 0 means unlimited
};

/* Deterministic order; strips in canonical order within each decomposition. */
void enumerate_decompositions(const SkewShape& shape, const EnumerationOptions& opts,
                              const std::function<bool(const Decomposition&)>& visit);
std::vector<Decomposition> enumerate_nested_decompositions(const SkewShape& shape, int max_g);

/* Outermost first: later ending content, then later starting content. */
void sort_canonical(std::vector<Diagram>& strips);

}  // namespace skewdet
