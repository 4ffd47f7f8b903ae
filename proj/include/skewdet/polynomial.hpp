#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace skewdet {

using Exponents = std::vector<int>;

/* Graded lex, largest first: higher total degree, then lexicographically larger. */
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
public:
    using Terms = std::map<Exponents, mpz_class, GrlexGreater>;

    explicit Polynomial(int nvars = 1);
    static Polynomial constant(int nvars, const mpz_class& c);
    static Polynomial variable(int nvars, int index);  // index is 0-based
    static Polynomial monomial(const Exponents& exps, const mpz_class& c = 1);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    mpz_class coefficient(const Exponents& exps) const;
    int degree() const;

    void add_term(const Exponents& exps, const mpz_class& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const mpz_class& k) const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /* Exact quotient; throws std::domain_error when the division leaves a remainder. */
    Polynomial exact_divide(const Polynomial& divisor) const;

    /* Substitute x_i -> x_perm[i]. */
    Polynomial permute_variables(const std::vector<int>& perm) const;

    std::string str() const;

private:
    int nvars_;
    Terms terms_;
};

Polynomial pow(const Polynomial& base, int e);
Polynomial power_sum_p1r(int r, int nvars);

using PolyMatrix = std::vector<std::vector<Polynomial>>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_cofactor(const PolyMatrix& m);
Polynomial determinant_bareiss(const PolyMatrix& m);
mpq_class determinant_rational(const RationalMatrix& m);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace skewdet
