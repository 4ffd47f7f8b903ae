#pragma once

#include <string>

#include "skewdet/decomp.hpp"
#include "skewdet/polynomial.hpp"

namespace skewdet {

/* Memoized Jacobi-Trudi Schur polynomial; thread-safe. */
Polynomial schur_cached(const SkewShape& shape, int nvars);

Polynomial theorem_lhs(const Decomposition& d, int nvars);
Polynomial theorem_rhs(const Decomposition& d, int nvars);
Polynomial theorem_rhs(const NestedStructure& ns, int nvars);

/* Entry (i,j) of the Schur matrix: the segment's Schur polynomial, 1 when empty, 0 when undefined. */
Polynomial sharp_schur(const SharpResult& s, int nvars);

mpz_class corollary_count(const Decomposition& d);
mpz_class corollary_count(const NestedStructure& ns);

struct IdentityReport {
    Polynomial lhs{1}, rhs{1};
    bool equal = false;
    int r = 0;
    int g = 0;
    int nvars = 0;
    int degree = 0;
    bool conclusive = false;  // nvars reaches the degree
    std::string note;
};

/* Decompositions that fail validation or nesting are still evaluated when possible; the note says why. */
IdentityReport verify_identity(const Decomposition& d, int nvars);

}  // namespace skewdet
