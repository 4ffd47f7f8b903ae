#include "skewdet/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace skewdet {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

Partition partition_field(const Json& j, const char* key, bool required) {
    if (!j.contains(key)) {
        if (required) bad(std::string("missing \"") + key + "\"");
        return {};
    }
    if (!j[key].is_array()) bad(std::string("\"") + key + "\" must be an array");
    Partition p;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer()) bad(std::string("\"") + key + "\" entries must be integers");
        p.push_back(v.get<int>());
    }
    return p;
}

mpz_class parse_big(const Json& v) {
    if (v.is_number_integer()) return mpz_class(v.get<long>());
    if (!v.is_string()) bad("integer expected");
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) != 0) bad("bad integer \"" + v.get<std::string>() + "\"");
    return z;
}

Json point(const LatticePoint& p) {
    return {{"x", p.x}, {"y", p.top ? Json("inf") : Json(p.y)}};
}

Json steps(const std::map<int, Step>& m) {
    Json a = Json::array();
    for (const auto& [gap, s] : m)
        a.push_back({{"gap", gap}, {"kind", s.kind == StepKind::Horizontal ? "horizontal" : "diagonal"},
                     {"end", {gap + 1, s.end_y}}});
    return a;
}

}  // namespace

Json big(const mpz_class& v) { return v.get_str(); }
Json big(const mpq_class& v) { return v.get_str(); }

Json to_json(const SkewShape& s) { return {{"lambda", s.lambda}, {"mu", s.mu}}; }

SkewShape shape_from_json(const Json& j) {
    if (!j.is_object()) bad("shape must be an object");
    Partition lambda = partition_field(j, "lambda", true), mu = partition_field(j, "mu", false);
    if (!is_partition(lambda) || !is_partition(mu)) bad("lambda and mu must be partitions");
    try {
        return SkewShape::make(lambda, mu);
    } catch (const std::exception& e) {
        bad(e.what());
    }
}

Json to_json(const Diagram& d) {
    Json boxes = Json::array();
    for (Box b : d) boxes.push_back({b.row, b.col});
    return {{"boxes", boxes}};
}

Diagram diagram_from_json(const Json& j) {
    const Json& arr = j.is_object() ? j.value("boxes", Json()) : j;
    if (!arr.is_array()) bad("diagram needs a \"boxes\" array");
    Diagram d;
    for (const auto& b : arr) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer())
            bad("boxes are [row, col] integer pairs");
        d.insert({b[0].get<int>(), b[1].get<int>()});
    }
    return d;
}

Json to_json(const Decomposition& d) {
    Json strips = Json::array();
    for (const auto& s : d.strips) strips.push_back(to_json(s));
    Json shared = Json::array();
    for (const auto& c : d.shared_corners)
        shared.push_back({{"box", {c.box.row, c.box.col}}, {"upper_in", c.upper_owner + 1}, {"lower_in", c.lower_owner + 1}});
    return {{"shape", to_json(d.shape)}, {"strips", strips}, {"shared_corners", shared}};
}

Decomposition decomposition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("strips") || !j["strips"].is_array())
        bad("decomposition needs \"shape\" and \"strips\"");
    Decomposition d;
    d.shape = shape_from_json(j["shape"]);
    for (const auto& s : j["strips"]) d.strips.push_back(diagram_from_json(s));
    d.shared_corners = find_shared_corners(d.strips);
    return d;
}

Json to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({{"exps", e}, {"coef", c.get_str()}});
    return a;
}

Polynomial polynomial_from_json(const Json& j, int nvars) {
    if (!j.is_array()) bad("polynomial must be a list of terms");
    Polynomial p(nvars);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exps") || !t.contains("coef")) bad("term needs \"exps\" and \"coef\"");
        Exponents e = t["exps"].get<Exponents>();
        if (static_cast<int>(e.size()) != nvars) bad("exponent vector length differs from the variable count");
        p.add_term(e, parse_big(t["coef"]));
    }
    return p;
}

Json to_json(const Tableau& t) {
    Json boxes = Json::array();
    for (Box b : t.boxes) boxes.push_back({b.row, b.col});
    return {{"boxes", boxes}, {"entries", t.entries}};
}

Tableau tableau_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("boxes") || !j.contains("entries")) bad("tableau needs \"boxes\" and \"entries\"");
    Tableau t;
    for (const auto& b : j["boxes"]) {
        if (!b.is_array() || b.size() != 2) bad("boxes are [row, col] pairs");
        t.boxes.push_back({b[0].get<int>(), b[1].get<int>()});
    }
    t.entries = j["entries"].get<std::vector<int>>();
    if (t.entries.size() != t.boxes.size()) bad("one entry per box");
    return t;
}

Json to_json(const ValidationReport& r) {
    Json j = {{"ok", r.ok}};
    if (!r.ok) {
        Json strips = Json::array(), boxes = Json::array();
        for (int s : r.strips) strips.push_back(s + 1);
        for (Box b : r.boxes) boxes.push_back({b.row, b.col});
        j["clause"] = r.clause;
        j["message"] = r.message;
        j["strips"] = strips;
        j["boxes"] = boxes;
    }
    return j;
}

Json to_json(const IdentityReport& r) {
    return {{"equal", r.equal},
            {"r", r.r},
            {"g", r.g},
            {"nvars", r.nvars},
            {"degree", r.degree},
            {"label", r.conclusive ? "conclusive for this shape" : "consistency check"},
            {"lhs_terms", r.lhs.term_count()},
            {"rhs_terms", r.rhs.term_count()},
            {"note", r.note}};
}

Json to_json(const DoubleLatticePath& p) {
    return {{"start", point(p.start)}, {"end", point(p.end)}, {"p_plus", steps(p.plus)}, {"p_minus", steps(p.minus)}};
}

Json to_json(const PathTuple& t) {
    Json paths = Json::array(), touch = Json::array();
    for (const auto& p : t.paths) paths.push_back(to_json(p));
    for (auto [x, y] : t.touchpoints) touch.push_back({x, y});
    return {{"paths", paths}, {"touchpoints", touch}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace skewdet
