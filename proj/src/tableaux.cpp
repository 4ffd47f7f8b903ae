#include "skewdet/tableaux.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace skewdet {

int Tableau::at(Box b) const {
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i] == b) return entries[i];
    throw std::out_of_range("box " + box_str(b) + " not in tableau");
}

bool Tableau::is_semistandard() const {
    std::map<Box, int> e;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (entries[i] < 1) return false;
        e[boxes[i]] = entries[i];
    }
    for (auto [b, v] : e) {
        auto left = e.find(shifted(b, 0, -1));
        if (left != e.end() && left->second > v) return false;
        auto up = e.find(shifted(b, -1, 0));
        if (up != e.end() && up->second >= v) return false;
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<bool> seen(entries.size() + 1, false);
    for (int v : entries) {
        if (v < 1 || v > static_cast<int>(entries.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Tableau Tableau::restricted_to(const Diagram& d) const {
    Tableau t;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (d.count(boxes[i])) {
            t.boxes.push_back(boxes[i]);
            t.entries.push_back(entries[i]);
        }
    return t;
}

Exponents Tableau::weight(int nvars) const {
    Exponents e(nvars, 0);
    for (int v : entries) {
        if (v > nvars) throw std::out_of_range("entry exceeds the number of variables");
        e[v - 1]++;
    }
    return e;
}

void enumerate_ssyt(const Diagram& d, int max_entry, const std::function<bool(const Tableau&)>& visit) {
    Tableau t;
    t.boxes.assign(d.begin(), d.end());
    t.entries.assign(t.boxes.size(), 0);
    std::map<Box, std::size_t> index;
    for (std::size_t i = 0; i < t.boxes.size(); ++i) index[t.boxes[i]] = i;
    std::vector<long> left(t.boxes.size(), -1), up(t.boxes.size(), -1);
    for (std::size_t i = 0; i < t.boxes.size(); ++i) {
        if (auto it = index.find(shifted(t.boxes[i], 0, -1)); it != index.end()) left[i] = it->second;
        if (auto it = index.find(shifted(t.boxes[i], -1, 0)); it != index.end()) up[i] = it->second;
    }
    bool stop = false;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (stop) return;
        if (i == t.boxes.size()) {
            if (!visit(t)) stop = true;
            return;
        }
        int lo = 1;
        if (left[i] >= 0) lo = std::max(lo, t.entries[left[i]]);
        if (up[i] >= 0) lo = std::max(lo, t.entries[up[i]] + 1);
        for (int v = lo; v <= max_entry && !stop; ++v) {
            t.entries[i] = v;
            fill(i + 1);
        }
    };
    fill(0);
}

void enumerate_ssyt(const SkewShape& shape, int max_entry, const std::function<bool(const Tableau&)>& visit) {
    enumerate_ssyt(skew_boxes(shape), max_entry, visit);
}

std::vector<Tableau> all_ssyt(const Diagram& d, int max_entry) {
    std::vector<Tableau> out;
    enumerate_ssyt(d, max_entry, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

mpz_class count_syt_bruteforce(const Diagram& d) {
    if (d.size() > 64) throw std::invalid_argument("brute-force count limited to 64 boxes");
    std::vector<Box> boxes(d.begin(), d.end());
    std::size_t n = boxes.size();
    std::vector<std::uint64_t> preds(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (boxes[j] == shifted(boxes[i], -1, 0) || boxes[j] == shifted(boxes[i], 0, -1))
                preds[i] |= std::uint64_t{1} << j;
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::unordered_map<std::uint64_t, mpz_class> memo;
    std::function<mpz_class(std::uint64_t)> go = [&](std::uint64_t filled) -> mpz_class {
        if (filled == full) return 1;
        if (auto it = memo.find(filled); it != memo.end()) return it->second;
        mpz_class total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t bit = std::uint64_t{1} << i;
            if (!(filled & bit) && (preds[i] & filled) == preds[i]) total += go(filled | bit);
        }
        memo.emplace(filled, total);
        return total;
    };
    return go(0);
}

mpz_class count_syt_bruteforce(const SkewShape& shape) { return count_syt_bruteforce(skew_boxes(shape)); }

Polynomial schur_direct(const SkewShape& shape, int nvars) {
    Polynomial s(nvars);
    enumerate_ssyt(shape, nvars, [&](const Tableau& t) {
        s.add_term(t.weight(nvars), 1);
        return true;
    });
    return s;
}

Polynomial complete_homogeneous(int k, int nvars) {
    static std::mutex lock;
    static std::map<std::pair<int, int>, Polynomial> cache;
    if (k < 0) return Polynomial(nvars);
    {
        std::lock_guard g(lock);
        if (auto it = cache.find({k, nvars}); it != cache.end()) return it->second;
    }
    Polynomial h(nvars);
    Exponents e(nvars, 0);
    std::function<void(int, int)> place = [&](int var, int left) {
        if (var == nvars - 1) {
            e[var] = left;
            h.add_term(e, 1);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[var] = a;
            place(var + 1, left - a);
        }
    };
    place(0, k);
    std::lock_guard g(lock);
    cache.emplace(std::make_pair(k, nvars), h);
    return h;
}

Polynomial schur_jacobi_trudi(const SkewShape& shape, int nvars) {
    int k = shape.rows();
    PolyMatrix m(k, std::vector<Polynomial>(k, Polynomial(nvars)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m[i][j] = complete_homogeneous(shape.lambda[i] - shape.mu[j] - i + j, nvars);
    if (k == 0) return Polynomial::constant(nvars, 1);
    return determinant(m);
}

mpz_class count_syt_aitken(const SkewShape& shape) {
    int k = shape.rows();
    RationalMatrix m(k, std::vector<mpq_class>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int a = shape.lambda[i] - shape.mu[j] - i + j;
            if (a >= 0) m[i][j] = mpq_class(1, factorial(a));
        }
    mpq_class v = determinant_rational(m) * factorial(shape.size());
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("non-integral scaled Aitken determinant");
    return v.get_num();
}

mpz_class count_syt_aitken(const Diagram& d) {
    auto shape = to_skew_shape(d);
    if (!shape) throw std::invalid_argument("box set is not a skew shape");
    return count_syt_aitken(*shape);
}

}  // namespace skewdet
