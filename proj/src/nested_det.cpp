#include "skewdet/nested_det.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "skewdet/tableaux.hpp"

namespace skewdet {

Polynomial schur_cached(const SkewShape& shape, int nvars) {
    static std::mutex lock;
    static std::map<std::pair<SkewShape, int>, Polynomial> cache;
    auto key = std::make_pair(shape, nvars);
    {
        std::lock_guard g(lock);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Polynomial s = schur_jacobi_trudi(shape, nvars);
    std::lock_guard g(lock);
    if (cache.size() > 200000) cache.clear();
    cache.emplace(key, s);
    return s;
}

Polynomial theorem_lhs(const Decomposition& d, int nvars) {
    int r = 0;
    for (const auto& s : d.strips) r += static_cast<int>(s.size());
    r -= d.shape.size();
    return power_sum_p1r(r, nvars) * schur_cached(d.shape, nvars);
}

Polynomial sharp_schur(const SharpResult& s, int nvars) {
    switch (s.kind) {
        case SharpResult::Empty: return Polynomial::constant(nvars, 1);
        case SharpResult::Undefined: return Polynomial(nvars);
        case SharpResult::Defined: break;
    }
    auto shape = s.shape();
    if (!shape) throw std::logic_error("segment is not a skew shape");
    return schur_cached(*shape, nvars);
}

Polynomial theorem_rhs(const NestedStructure& ns, int nvars) {
    int g = ns.decomposition.g();
    PolyMatrix m(g, std::vector<Polynomial>(g, Polynomial(nvars)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) m[i][j] = sharp_schur(ns.sharp(i, j), nvars);
    if (g == 0) return Polynomial::constant(nvars, 1);
    return determinant(m);
}

Polynomial theorem_rhs(const Decomposition& d, int nvars) { return theorem_rhs(analyze(d), nvars); }

mpz_class corollary_count(const NestedStructure& ns) {
    int g = ns.decomposition.g();
    RationalMatrix m(g, std::vector<mpq_class>(g, 0));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            SharpResult s = ns.sharp(i, j);
            if (s.kind == SharpResult::Empty) m[i][j] = 1;
            if (s.kind != SharpResult::Defined) continue;
            auto shape = s.shape();
            m[i][j] = mpq_class(count_syt_aitken(*shape), factorial(shape->size()));
            m[i][j].canonicalize();
        }
    mpq_class v = determinant_rational(m) * factorial(ns.decomposition.shape.size());
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("non-integral scaled determinant in the corollary");
    return v.get_num();
}

mpz_class corollary_count(const Decomposition& d) { return corollary_count(analyze(d)); }

IdentityReport verify_identity(const Decomposition& d, int nvars) {
    IdentityReport rep;
    rep.nvars = nvars;
    rep.g = d.g();
    for (const auto& s : d.strips) rep.r += static_cast<int>(s.size());
    rep.r -= d.shape.size();
    rep.degree = d.shape.size() + rep.r;
    rep.conclusive = nvars >= rep.degree;
    auto valid = validate_decomposition(d);
    if (!valid.ok) rep.note = "invalid decomposition (" + valid.clause + "): " + valid.message;
    Decomposition work = d;
    work.shared_corners = find_shared_corners(d.strips);
    rep.lhs = theorem_lhs(work, nvars);
    try {
        rep.rhs = theorem_rhs(work, nvars);
    } catch (const std::exception& e) {
        rep.rhs = Polynomial(nvars);
        rep.note += (rep.note.empty() ? "" : "; ") + std::string("right side unavailable: ") + e.what();
        rep.equal = false;
        return rep;
    }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace skewdet
