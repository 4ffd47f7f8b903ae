#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewdet/decomp.hpp"
#include "skewdet/polynomial.hpp"
#include "skewdet/tableaux.hpp"

namespace skewdet {

/* y is either a finite height or the symbolic top sentinel. */
struct LatticePoint {
    int x = 0;
    bool top = false;
    int y = 1;  // ignored when top

    bool operator==(const LatticePoint&) const = default;
    std::string str() const;
};

enum class StepKind { Horizontal, Diagonal };

/* A non-vertical step in the gap between x = gap and x = gap + 1, ending at height end_y. */
struct Step {
    StepKind kind;
    int end_y;
    int start_y() const { return kind == StepKind::Horizontal ? end_y : end_y + 1; }
    bool operator==(const Step&) const = default;
};

struct DoubleLatticePath {
    LatticePoint start, end;
    std::map<int, Step> plus, minus;  // keyed by gap

    bool operator==(const DoubleLatticePath&) const = default;
    /* Every lattice point of both paths, with the sentinel materialized at `sentinel`. */
    std::vector<std::pair<int, int>> points(int sentinel) const;
    int max_height() const;
};

struct PathCheck {
    bool ok = true;
    std::string message;
};
/* Step alphabet ordering rules plus at-or-above of p+ over p-; shape-independent. */
PathCheck check_path(const DoubleLatticePath& p);

struct PathEndpoints {
    LatticePoint u, v;
};
/* u of strip j and v of strip i, 0-based. */
PathEndpoints path_endpoints(int i, int j, const NestedStructure& ns);
PathEndpoints path_endpoints(int i, int j, const Decomposition& d);

/* Per content of the segment: the box carrying the p+ step and the box carrying the p- step. */
struct GapPlan {
    Box plus_box, minus_box;
    StepKind plus_kind, minus_kind;
};
std::map<int, GapPlan> path_shape(int i, int j, const NestedStructure& ns);

/* The tableau may sit on the segment or on any box set matching it content by content. */
DoubleLatticePath tableau_to_path(const Tableau& t, int i, int j, const NestedStructure& ns);
/* Throws std::invalid_argument on a path that is not in P(u_j, v_i). */
Tableau path_to_tableau(const DoubleLatticePath& p, int i, int j, const NestedStructure& ns);

/* Every path of P(u_j, v_i) with heights at most max_height that passes check_path, built from steps alone. */
void enumerate_paths(int i, int j, const NestedStructure& ns, int max_height,
                     const std::function<bool(const DoubleLatticePath&)>& visit);

struct PathTuple {
    std::vector<DoubleLatticePath> paths;
    std::vector<std::pair<int, int>> touchpoints;
};

struct CrossingReport {
    bool noncrossing = true;
    std::vector<std::pair<int, int>> touchpoints;  // sorted
    std::string message;
};
CrossingReport is_noncrossing(const std::vector<DoubleLatticePath>& paths);

PathTuple tableau_tuple_to_path_tuple(const Tableau& t, const NestedStructure& ns);

/* Each shared p+/p- endpoint counts once; throws std::domain_error when a height exceeds nvars. */
Polynomial path_weight(const DoubleLatticePath& p, int nvars);

/* Order ranks of the start points and of the end points under the non-crossing orders. */
std::vector<int> start_order(const NestedStructure& ns);
std::vector<int> end_order(const NestedStructure& ns);

}  // namespace skewdet
