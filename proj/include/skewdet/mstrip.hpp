#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skewdet/decomp.hpp"
#include "skewdet/shapes.hpp"

namespace skewdet {

struct MStripSpec {
    int m = 2;
    int n = 1;  // body columns
    Partition head, tail;

    int k() const { return m / 2; }
    std::string str() const;
};

/* Throws std::invalid_argument for m < 2, n < max(1, floor(m/2)), or head/tail longer than floor(m/2). */
Diagram mstrip_boxes(const MStripSpec& spec);
SkewShape build_mstrip(const MStripSpec& spec);
/* Expected body column heights: ramps on both sides, clipped at m and, for small n, at n + 2*ceil((m+1)/2) - m - 1. */
std::vector<int> body_column_heights(int m, int n);

struct SequenceTable {
    std::vector<mpz_class> A;  // up-down permutation counts A_0..A_limit

    int limit() const { return static_cast<int>(A.size()) - 1; }
    mpq_class bar(int n) const;
    mpq_class tilde(int n) const;
    mpq_class hat(int n) const;
    mpz_class euler(int n) const;    // E_n with sec x = sum (-1)^k E_2k x^2k/(2k)!; zero for odd n
    mpz_class tangent(int n) const;  // T_n = A_{2n-1}, n >= 1
};

SequenceTable andre_numbers(int limit);
mpz_class count_up_down_bruteforce(int n);

mpz_class alpha2(int n, int p, int q);
mpz_class alpha3(int n, int p, int q);

struct XYNumbers {
    mpq_class X;  // X_{2n-1}(p,q)
    mpq_class Y;  // Y_{2n-2}(p,q)
};
XYNumbers xy_numbers(int n, int p, int q);

struct MStripCount {
    mpz_class value;
    int order = 0;          // determinant size, floor(m/2)
    int strip_columns = 0;  // columns of each 2- or 3-strip entry
    std::vector<int> L, M;
    std::vector<std::vector<mpq_class>> matrix;
    mpz_class aitken;
    std::optional<mpz_class> bruteforce;  // only at oracle scale
    bool consistent = false;
};
MStripCount count_mstrip_thm(const MStripSpec& spec, int oracle_boxes = 16);

struct ClosedForm {
    std::string name;  // "alpha3(0,0)", "D4(0;0)", ...
    int n = 0;
    mpz_class value;      // the product formula
    mpz_class alternate;  // the normalized-sequence form
    MStripSpec diagram;   // the diagram it counts, unset for C_3n
    bool is_c3n = false;
};
std::vector<ClosedForm> closed_forms(int n);
/* The closed form counting this diagram, if one applies. */
std::optional<ClosedForm> closed_form_for(const MStripSpec& spec);

SkewShape c3n_diagram(int n);
enum class D3Variant { D3nMinus2, D3nMinus1, D3nMinus1Star, D3n };
MStripSpec d3_variant(D3Variant v, int n);
std::string d3_variant_name(D3Variant v);
/* Removes the top box (i, n - i) of column n - i; needs 1 <= i <= n - 1. */
SkewShape d3_removed(int n, int i);
SkewShape c3n_removed(int n, int i);

struct RecursionCheck {
    std::string identity;
    int n = 0;
    int i = 0;  // 0 when the identity has no index
    mpz_class lhs, rhs;
    bool ok = false;
};
std::vector<RecursionCheck> verify_recursions(int n_max);

struct ZigzagDecomposition {
    Decomposition decomposition;
    std::size_t matches = 0;  // decompositions meeting the strip-count targets
    mpz_class strip_target, sharp_12, sharp_21;
};
/* Supported: m = 4 with empty or (1)/(1) head and tail, m = 5 with empty head and tail. */
ZigzagDecomposition zigzag_decomposition(const MStripSpec& spec);

}  // namespace skewdet
