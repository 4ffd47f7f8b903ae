#include "skewdet/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace skewdet {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const mpz_class& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(const Exponents& exps, const mpz_class& c) {
    Polynomial p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

mpz_class Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

void Polynomial::add_term(const Exponents& exps, const mpz_class& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("variable-count mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exps, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_vars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable-count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_vars(a, b);
    Polynomial out(a.nvars());
    Exponents e(a.nvars());
    mpz_class prod;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            out.add_term(e, prod);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const mpz_class& k) const {
    Polynomial p(nvars_);
    if (k == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * k);
    return p;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
    check_vars(*this, divisor);
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [le, lc] = *divisor.terms_.begin();
    Polynomial rem = *this, quot(nvars_);
    Exponents e(nvars_);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        for (int i = 0; i < nvars_; ++i) {
            e[i] = re[i] - le[i];
            if (e[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_class q = rc / lc;
        Polynomial t = monomial(e, q);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

Polynomial Polynomial::permute_variables(const std::vector<int>& perm) const {
    Polynomial p(nvars_);
    Exponents e(nvars_);
    for (const auto& [ex, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[perm.at(i)] = ex[i];
        p.add_term(e, c);
    }
    return p;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        mpz_class a = abs(c);
        std::string coef = (a == 1 && !mono.empty()) ? "" : a.get_str();
        std::string term = coef + (!coef.empty() && !mono.empty() ? "*" : "") + mono;
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

Polynomial pow(const Polynomial& base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial result = Polynomial::constant(base.nvars(), 1), b = base;
    while (e) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

Polynomial power_sum_p1r(int r, int nvars) {
    Polynomial p1(nvars);
    for (int i = 0; i < nvars; ++i) p1 += Polynomial::variable(nvars, i);
    return pow(p1, r);
}

namespace {

int matrix_vars(const PolyMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) throw std::invalid_argument("matrix is not square");
        for (const auto& p : row)
            if (p.nvars() != m[0][0].nvars()) throw std::invalid_argument("variable-count mismatch");
    }
    return m.empty() ? 1 : m[0][0].nvars();
}

Polynomial cofactor(const PolyMatrix& m, std::vector<int>& cols, std::size_t row) {
    int nv = m[0][0].nvars();
    if (row == m.size()) return Polynomial::constant(nv, 1);
    Polynomial sum(nv);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!m[row][c].is_zero()) {
            cols.erase(cols.begin() + k);
            Polynomial minor = cofactor(m, cols, row + 1);
            cols.insert(cols.begin() + k, c);
            if (!minor.is_zero()) {
                Polynomial t = m[row][c] * minor;
                if (sign > 0) sum += t; else sum -= t;
            }
        }
        sign = -sign;
    }
    return sum;
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
    int nv = matrix_vars(m);
    if (m.empty()) return Polynomial::constant(nv, 1);
    std::vector<int> cols(m.size());
    std::iota(cols.begin(), cols.end(), 0);
    return cofactor(m, cols, 0);
}

Polynomial determinant_bareiss(const PolyMatrix& input) {
    int nv = matrix_vars(input);
    std::size_t n = input.size();
    if (n == 0) return Polynomial::constant(nv, 1);
    PolyMatrix a = input;
    Polynomial prev = Polynomial::constant(nv, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return Polynomial(nv);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_divide(prev);
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
    return m.size() <= 6 ? determinant_cofactor(m) : determinant_bareiss(m);
}

mpq_class determinant_rational(const RationalMatrix& input) {
    std::size_t n = input.size();
    for (const auto& row : input)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    RationalMatrix a = input;
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[k], a[p]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            mpq_class f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace skewdet
