#pragma once

#include <functional>

#include "skewdet/polynomial.hpp"
#include "skewdet/shapes.hpp"

namespace skewdet {

/* Boxes in row-major order with one entry per box. */
struct Tableau {
    std::vector<Box> boxes;
    std::vector<int> entries;

    int at(Box b) const;
    bool is_semistandard() const;
    bool is_standard() const;
    Tableau restricted_to(const Diagram& d) const;
    Exponents weight(int nvars) const;
};

/* Visitor returns false to stop early. Deterministic lexicographic order on the entry vector. */
void enumerate_ssyt(const Diagram& d, int max_entry, const std::function<bool(const Tableau&)>& visit);
void enumerate_ssyt(const SkewShape& shape, int max_entry, const std::function<bool(const Tableau&)>& visit);
std::vector<Tableau> all_ssyt(const Diagram& d, int max_entry);

mpz_class count_syt_bruteforce(const Diagram& d);
mpz_class count_syt_bruteforce(const SkewShape& shape);

Polynomial schur_direct(const SkewShape& shape, int nvars);
Polynomial complete_homogeneous(int k, int nvars);
Polynomial schur_jacobi_trudi(const SkewShape& shape, int nvars);

mpz_class count_syt_aitken(const SkewShape& shape);
/* Translate-invariant count for box sets that are skew-shape translates. */
mpz_class count_syt_aitken(const Diagram& d);

}  // namespace skewdet
