#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewdet/decomp.hpp"

namespace skewdet {

/* (6,6,6,4)/(3,1) with three strips sharing (4,1), (3,3), (2,5). */
SkewShape three_strip_shape();
Diagram three_strip_shared();

struct Reconstruction {
    Decomposition decomposition;
    std::size_t shared_matches = 0;  // nested covers with exactly the shared set
    std::size_t role_matches = 0;    // of those, the ones meeting the stated roles and directions
};
/* Search by shared set, then by which strips share which corner and the stated per-content directions. */
Reconstruction reference_thick_decomposition();

/* (8,8,8,7,4)/(3,1) covers sharing exactly (2,3),(2,5),(4,5),(3,6),(2,7),(1,8). */
SkewShape non_nested_shape();
std::vector<Decomposition> non_nested_candidates();

/* (8,6,6,2,1)/(3,2) covered by strips, one of them a (5,1) hook starting inside, or a row of 3 ending inside. */
SkewShape interior_endpoint_shape();
Decomposition interior_start_decomposition();
Decomposition interior_end_decomposition();

/* The reference decomposition with one box moved to a neighbouring strip so that it stops being valid or nested. */
Decomposition corrupted_reference(std::string* description = nullptr);

/* Normalized edgewise-connected skew shapes, by size then lexicographically. */
std::vector<SkewShape> connected_skew_shapes(int max_boxes);

/* SKEWDET_MAX_ORACLE_BOXES, default 12. */
int max_oracle_boxes();

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

struct AcceptanceOptions {
    std::vector<int> only;  // empty runs all
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_result(const CriterionResult& r);

}  // namespace skewdet
