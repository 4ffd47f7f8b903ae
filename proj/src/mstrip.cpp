#include "skewdet/mstrip.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "skewdet/nested_det.hpp"
#include "skewdet/polynomial.hpp"
#include "skewdet/tableaux.hpp"

namespace skewdet {

namespace {

std::string parts(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return "(" + s + ")";
}

Partition trimmed(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class integral(mpq_class v, const std::string& what) {
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error(what + " is not an integer: " + v.get_str());
    return v.get_num();
}

}  // namespace

std::string MStripSpec::str() const {
    return "D" + std::to_string(m) + "(" + parts(trimmed(head)) + ";" + parts(trimmed(tail)) + ") n=" +
           std::to_string(n);
}

std::vector<int> body_column_heights(int m, int n) {
    int low = (m + 2) / 2;
    int clip = n + 2 * low - m - 1;  // binds only when n is too small for a full plateau
    std::vector<int> h;
    for (int j = 1; j <= n; ++j) h.push_back(std::min({low + j - 1, low + n - j, m, clip}));
    return h;
}

Diagram mstrip_boxes(const MStripSpec& spec) {
    const int m = spec.m, n = spec.n, k = spec.k();
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (n < std::max(1, k)) throw std::invalid_argument("n must be at least max(1, floor(m/2))");
    Partition head = trimmed(spec.head), tail = trimmed(spec.tail);
    if (!is_partition(head) || !is_partition(tail)) throw std::invalid_argument("head and tail must be partitions");
    if (static_cast<int>(head.size()) > k || static_cast<int>(tail.size()) > k)
        throw std::invalid_argument("head and tail may have at most floor(m/2) parts");
    if (static_cast<int>(head.size()) > n || static_cast<int>(tail.size()) > n)
        throw std::invalid_argument("head and tail may have at most n parts");

    const int low = (m + 2) / 2;
    const int bottom = n + low, top_edge = bottom - m + 1, last_row = top_edge + low - 2;
    Diagram boxes;
    std::vector<int> top(n + 2), bot(n + 2);
    for (int j = 1; j <= n; ++j) {
        top[j] = std::max(top_edge - j, 1);
        bot[j] = std::min(bottom - j, last_row);
        for (int i = top[j]; i <= bot[j]; ++i) boxes.insert({i, j});
    }
    for (std::size_t idx = 0; idx < head.size(); ++idx) {
        int col = n - static_cast<int>(idx);
        for (int t = 1; t <= head[idx]; ++t) boxes.insert({top[col] - t, col});
    }
    for (std::size_t idx = 0; idx < tail.size(); ++idx) {
        int col = 1 + static_cast<int>(idx);
        for (int t = 1; t <= tail[idx]; ++t) boxes.insert({bot[col] + t, col});
    }
    Diagram out = normalize_position(boxes);

    std::vector<int> expect = body_column_heights(m, n), got(n, 0);
    for (int j = 1; j <= n; ++j) got[j - 1] = bot[j] - top[j] + 1;
    if (got != expect) throw std::logic_error("body column heights do not match for " + spec.str());
    return out;
}

SkewShape build_mstrip(const MStripSpec& spec) {
    auto s = to_skew_shape(mstrip_boxes(spec));
    if (!s) throw std::logic_error(spec.str() + " is not a skew diagram");
    return *s;
}

mpq_class SequenceTable::bar(int n) const {
    mpq_class v(A.at(n), factorial(n));
    v.canonicalize();
    return v;
}

mpq_class SequenceTable::tilde(int n) const {
    mpq_class v = bar(n) / mpq_class(pow2(n + 1) - 1);
    v.canonicalize();
    return v;
}

mpq_class SequenceTable::hat(int n) const {
    mpq_class v = bar(n) * mpq_class(pow2(n) - 1) / mpq_class(pow2(n) * (pow2(n + 1) - 1));
    v.canonicalize();
    return v;
}

mpz_class SequenceTable::euler(int n) const {
    if (n % 2) return 0;
    return (n / 2) % 2 ? mpz_class(-A.at(n)) : A.at(n);
}

mpz_class SequenceTable::tangent(int n) const {
    if (n < 1) throw std::out_of_range("tangent numbers start at index 1");
    return A.at(2 * n - 1);
}

SequenceTable andre_numbers(int limit) {
    SequenceTable t;
    t.A.push_back(1);
    std::vector<mpz_class> prev{1};
    for (int n = 1; n <= limit; ++n) {
        std::vector<mpz_class> cur(n + 1, 0);
        for (int k = 1; k <= n; ++k) cur[k] = cur[k - 1] + prev[n - k];
        t.A.push_back(cur[n]);
        prev = std::move(cur);
    }
    return t;
}

mpz_class count_up_down_bruteforce(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    mpz_class count = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) ok = (i % 2 == 0) ? p[i] < p[i + 1] : p[i] > p[i + 1];
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

namespace {

MStripSpec small_strip(int m, int n, int p, int q) {
    MStripSpec s;
    s.m = m;
    s.n = n;
    if (q) s.head = {q};
    if (p) s.tail = {p};
    return s;
}

}  // namespace

mpz_class alpha2(int n, int p, int q) { return count_syt_aitken(build_mstrip(small_strip(2, n, p, q))); }
mpz_class alpha3(int n, int p, int q) { return count_syt_aitken(build_mstrip(small_strip(3, n, p, q))); }

XYNumbers xy_numbers(int n, int p, int q) {
    XYNumbers r;
    r.X = mpq_class(alpha2(n, p, q), factorial(2 * n + p + q));
    r.Y = mpq_class(alpha3(n, p, q), factorial(3 * n + p + q - 2));
    r.X.canonicalize();
    r.Y.canonicalize();
    return r;
}

MStripCount count_mstrip_thm(const MStripSpec& spec, int oracle_boxes) {
    MStripCount out;
    const int k = spec.k();
    SkewShape shape = build_mstrip(spec);
    Partition head = spec.head, tail = spec.tail;
    head.resize(k, 0);
    tail.resize(k, 0);
    for (int i = 0; i < k; ++i) {
        out.L.push_back(head[i] + k - (i + 1));
        out.M.push_back(tail[i] + k - (i + 1));
    }
    out.order = k;
    out.strip_columns = spec.n - k + 1;
    const int thin = spec.m % 2 ? 3 : 2;
    out.matrix.assign(k, std::vector<mpq_class>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            SkewShape entry = build_mstrip(small_strip(thin, out.strip_columns, out.L[i], out.M[j]));
            out.matrix[i][j] = mpq_class(count_syt_aitken(entry), factorial(entry.size()));
            out.matrix[i][j].canonicalize();
        }
    mpq_class v = determinant_rational(out.matrix) * factorial(shape.size());
    if ((k * (k - 1) / 2) % 2) v = -v;
    out.value = integral(v, "scaled determinant for " + spec.str());
    out.aitken = count_syt_aitken(shape);
    if (shape.size() <= oracle_boxes) out.bruteforce = count_syt_bruteforce(shape);
    out.consistent = out.value == out.aitken && (!out.bruteforce || *out.bruteforce == out.value);
    return out;
}

namespace {

ClosedForm form(std::string name, int n, const mpq_class& value, const mpq_class& alternate) {
    ClosedForm f;
    f.name = std::move(name);
    f.n = n;
    f.value = integral(value, f.name);
    f.alternate = integral(alternate, f.name + " (normalized form)");
    return f;
}

mpq_class det2(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d) {
    return a * d - b * c;
}

}  // namespace

std::vector<ClosedForm> closed_forms(int n) {
    if (n < 1) throw std::invalid_argument("closed forms need n >= 1");
    SequenceTable s = andre_numbers(2 * n + 2);
    auto fac = [](long v) { return mpq_class(factorial(v)); };
    mpq_class T = s.tangent(n);
    std::vector<ClosedForm> out;

    out.push_back(form("D2(0;0)", n, s.A[2 * n], fac(2 * n) * s.bar(2 * n)));
    out.back().diagram = small_strip(2, n, 0, 0);

    out.push_back(form("alpha3(0,0)", n, fac(3 * n - 2) * T / (fac(2 * n - 1) * pow2(2 * n - 2)),
                       fac(3 * n - 2) * s.bar(2 * n - 1) / pow2(2 * n - 2)));
    out.back().diagram = small_strip(3, n, 0, 0);

    out.push_back(form("alpha3(0,1)", n, fac(3 * n - 1) * T / (fac(2 * n - 1) * pow2(2 * n - 1)),
                       fac(3 * n - 1) * s.bar(2 * n - 1) / pow2(2 * n - 1)));
    out.back().diagram = small_strip(3, n, 0, 1);

    out.push_back(form("alpha3(1,1)", n,
                       fac(3 * n) * mpq_class(pow2(2 * n - 1) - 1) * T /
                           (fac(2 * n - 1) * pow2(2 * n - 1) * mpq_class(pow2(2 * n) - 1)),
                       fac(3 * n) * s.hat(2 * n - 1)));
    out.back().diagram = small_strip(3, n, 1, 1);

    out.push_back(form("C3n", n, fac(3 * n) * mpq_class(s.A[2 * n - 1]) / (fac(2 * n - 1) * mpq_class(pow2(2 * n) - 1)),
                       fac(3 * n) * s.tilde(2 * n - 1)));
    out.back().is_c3n = true;

    if (n >= 2) {
        mpq_class value = mpq_class(binomial(4 * n - 2, 2 * n - 1) * T * T) +
                          mpq_class(binomial(4 * n - 2, 2 * n - 2) * s.euler(2 * n - 2) * s.euler(2 * n));
        mpq_class alt = fac(4 * n - 2) * det2(s.bar(2 * n - 1), s.bar(2 * n), s.bar(2 * n - 2), s.bar(2 * n - 1));
        out.push_back(form("D4(0;0)", n, value, alt));
        out.back().diagram = small_strip(4, n, 0, 0);

        value = mpq_class(binomial(4 * n, 2 * n) * s.euler(2 * n) * s.euler(2 * n)) -
                mpq_class(binomial(4 * n, 2 * n - 2) * s.euler(2 * n - 2) * s.euler(2 * n + 2));
        alt = fac(4 * n) * det2(s.bar(2 * n), s.bar(2 * n + 2), s.bar(2 * n - 2), s.bar(2 * n));
        out.push_back(form("D4(1;1)", n, value, alt));
        out.back().diagram = small_strip(4, n, 1, 1);

        mpq_class t1 = s.tangent(n - 1);
        value = fac(5 * n - 6) * t1 * t1 /
                (fac(2 * n - 3) * fac(2 * n - 3) * pow2(4 * n - 6) * mpq_class(pow2(2 * n - 2) - 1));
        alt = fac(5 * n - 6) * det2(s.tilde(2 * n - 3), s.hat(2 * n - 3), s.hat(2 * n - 3), s.tilde(2 * n - 3));
        out.push_back(form("D5(0;0)", n, value, alt));
        out.back().diagram = small_strip(5, n, 0, 0);
    }
    return out;
}

std::optional<ClosedForm> closed_form_for(const MStripSpec& spec) {
    Partition head = trimmed(spec.head), tail = trimmed(spec.tail);
    std::string name;
    auto is = [](const Partition& p, int v) { return v == 0 ? p.empty() : p == Partition{v}; };
    if (spec.m == 2 && head.empty() && tail.empty()) name = "D2(0;0)";
    if (spec.m == 3 && head.empty() && tail.empty()) name = "alpha3(0,0)";
    if (spec.m == 3 && ((is(head, 1) && tail.empty()) || (head.empty() && is(tail, 1)))) name = "alpha3(0,1)";
    if (spec.m == 3 && is(head, 1) && is(tail, 1)) name = "alpha3(1,1)";
    if (spec.m == 4 && head.empty() && tail.empty()) name = "D4(0;0)";
    if (spec.m == 4 && is(head, 1) && is(tail, 1)) name = "D4(1;1)";
    if (spec.m == 5 && head.empty() && tail.empty()) name = "D5(0;0)";
    if (name.empty()) return std::nullopt;
    for (auto& f : closed_forms(spec.n))
        if (f.name == name) {
            f.diagram = spec;
            return f;
        }
    return std::nullopt;
}

SkewShape c3n_diagram(int n) {
    Diagram d = mstrip_boxes(small_strip(3, n, 1, 0));
    Box end = ending_box(d);
    d.insert(shifted(end, 0, 1));
    auto s = to_skew_shape(d);
    if (!s) throw std::logic_error("C_3n is not a skew diagram");
    return *s;
}

MStripSpec d3_variant(D3Variant v, int n) {
    switch (v) {
        case D3Variant::D3nMinus2: return small_strip(3, n, 0, 0);
        case D3Variant::D3nMinus1: return small_strip(3, n, 0, 1);
        case D3Variant::D3nMinus1Star: return small_strip(3, n, 1, 0);
        case D3Variant::D3n: return small_strip(3, n, 1, 1);
    }
    throw std::invalid_argument("unknown variant");
}

std::string d3_variant_name(D3Variant v) {
    switch (v) {
        case D3Variant::D3nMinus2: return "D_{3n-2}";
        case D3Variant::D3nMinus1: return "D_{3n-1}";
        case D3Variant::D3nMinus1Star: return "D*_{3n-1}";
        case D3Variant::D3n: return "D_{3n}";
    }
    return "?";
}

namespace {

SkewShape without(const SkewShape& shape, int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("box index must satisfy 1 <= i <= n - 1");
    Diagram d = skew_boxes(shape);
    if (!d.erase(Box{i, n - i})) throw std::logic_error("box (" + std::to_string(i) + "," + std::to_string(n - i) + ") is missing");
    auto s = to_skew_shape(d);
    if (!s) throw std::logic_error("removing a box left a non-skew diagram");
    return *s;
}

}  // namespace

SkewShape d3_removed(int n, int i) { return without(build_mstrip(small_strip(3, n, 0, 0)), n, i); }
SkewShape c3n_removed(int n, int i) { return without(c3n_diagram(n), n, i); }

std::vector<RecursionCheck> verify_recursions(int n_max) {
    std::vector<RecursionCheck> out;
    auto f = [](const MStripSpec& s) { return count_syt_aitken(build_mstrip(s)); };
    auto D = [&](D3Variant v, int n) { return f(d3_variant(v, n)); };
    auto C = [](int n) { return count_syt_aitken(c3n_diagram(n)); };
    auto add = [&](std::string id, int n, int i, mpz_class lhs, mpz_class rhs) {
        out.push_back({std::move(id), n, i, lhs, rhs, lhs == rhs});
    };
    for (int n = 1; n <= n_max; ++n) {
        add("(3n-1) f[D_{3n-2}] = 2 f[D_{3n-1}]", n, 0, (3 * n - 1) * D(D3Variant::D3nMinus2, n),
            2 * D(D3Variant::D3nMinus1, n));
        add("f[D_{3n-1}] = f[D*_{3n-1}]", n, 0, D(D3Variant::D3nMinus1, n), D(D3Variant::D3nMinus1Star, n));
        add("3n f[D_{3n-1}] = f[D_{3n}] + f[C_{3n}]", n, 0, 3 * n * D(D3Variant::D3nMinus1, n),
            D(D3Variant::D3n, n) + C(n));
        for (int i = 1; i <= n - 1; ++i) {
            add("(3n-2) f[D_{3n-2,i}] = f[D_{3n-2}] + C(3n-2,3i-1) f[D_{3i-1}] f[D_{3n-3i-1}]", n, i,
                (3 * n - 2) * count_syt_aitken(d3_removed(n, i)),
                D(D3Variant::D3nMinus2, n) +
                    binomial(3 * n - 2, 3 * i - 1) * D(D3Variant::D3nMinus1, i) * D(D3Variant::D3nMinus1, n - i));
            add("3n f[C_{3n,i}] = f[C_{3n}] + C(3n,3i) f[C_{3i}] f[C_{3n-3i}]", n, i,
                3 * n * count_syt_aitken(c3n_removed(n, i)), C(n) + binomial(3 * n, 3 * i) * C(i) * C(n - i));
        }
        if (n >= 2) {
            mpz_class sum_d = 0, sum_c = 0;
            for (int i = 1; i <= n - 1; ++i) {
                sum_d += binomial(3 * n - 2, 3 * i - 1) * D(D3Variant::D3nMinus1, i) * D(D3Variant::D3nMinus1, n - i);
                sum_c += binomial(3 * n, 3 * i) * C(i) * C(n - i);
            }
            add("(2n-1) f[D_{3n-2}] = sum C(3n-2,3i-1) f[D_{3i-1}] f[D_{3n-3i-1}]", n, 0,
                (2 * n - 1) * D(D3Variant::D3nMinus2, n), sum_d);
            add("(2n+1) f[C_{3n}] = sum C(3n,3i) f[C_{3i}] f[C_{3n-3i}]", n, 0, (2 * n + 1) * C(n), sum_c);
        }
    }
    return out;
}

ZigzagDecomposition zigzag_decomposition(const MStripSpec& spec) {
    Partition head = trimmed(spec.head), tail = trimmed(spec.tail);
    const int n = spec.n;
    SequenceTable seq = andre_numbers(2 * n + 4);
    EnumerationOptions opts;
    opts.max_g = 2;
    int strip_size = 0;
    ZigzagDecomposition out;
    if (spec.m == 4 && head.empty() && tail.empty() && n >= 2) {
        strip_size = 2 * n - 1;
        out.strip_target = seq.A[2 * n - 1];
        opts.strips_only = true;
    } else if (spec.m == 4 && head == Partition{1} && tail == Partition{1} && n >= 2) {
        strip_size = 2 * n;
        out.strip_target = seq.A[2 * n];
        opts.strips_only = true;
    } else if (spec.m == 5 && head.empty() && tail.empty() && n >= 2) {
        strip_size = 3 * (n - 1);
        out.strip_target = count_syt_aitken(c3n_diagram(n - 1));
    } else {
        throw std::invalid_argument("no zig-zag decomposition for " + spec.str());
    }
    opts.candidate_filter = [&](const Diagram& d) {
        return static_cast<int>(d.size()) == strip_size && count_syt_aitken(d) == out.strip_target;
    };
    SkewShape shape = build_mstrip(spec);
    std::optional<Decomposition> first;
    enumerate_decompositions(shape, opts, [&](const Decomposition& d) {
        if (d.g() != 2) return true;
        ++out.matches;
        if (!first) first = d;
        return true;
    });
    if (!first) throw std::logic_error("no zig-zag decomposition found for " + spec.str());
    out.decomposition = *first;
    NestedStructure ns = analyze(*first);
    auto count = [](const SharpResult& s) {
        if (s.kind == SharpResult::Empty) return mpz_class(1);
        if (s.kind == SharpResult::Undefined) return mpz_class(0);
        return count_syt_aitken(s.segment);
    };
    out.sharp_12 = count(ns.sharp(0, 1));
    out.sharp_21 = count(ns.sharp(1, 0));
    return out;
}

}  // namespace skewdet
