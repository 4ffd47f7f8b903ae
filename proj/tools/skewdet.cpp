#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "skewdet/acceptance.hpp"
#include "skewdet/decomp.hpp"
#include "skewdet/json_io.hpp"
#include "skewdet/mstrip.hpp"
#include "skewdet/nested_det.hpp"
#include "skewdet/paths.hpp"
#include "skewdet/tableaux.hpp"

using namespace skewdet;

namespace {

struct Outcome {
    std::string status = "ok";  // ok, violation, error
    Json payload;
    Json provenance = Json::object();
    std::string text;
};

Partition parse_partition(const std::string& s) {
    Partition p;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad partition \"" + s + "\"");
        p.push_back(v);
    }
    if (!is_partition(p)) throw std::invalid_argument("\"" + s + "\" is not a partition");
    return p;
}

void require_oracle_scale(int boxes) {
    int cap = max_oracle_boxes();
    if (boxes > cap)
        throw std::domain_error(std::to_string(boxes) + " boxes exceeds the brute-force cap of " + std::to_string(cap) +
                                " (SKEWDET_MAX_ORACLE_BOXES)");
}

std::string decomposition_text(const Decomposition& d) {
    std::ostringstream os;
    os << "shape " << d.shape.str() << ", g=" << d.g() << ", r=" << d.r() << "\n";
    for (int i = 0; i < d.g(); ++i) {
        os << "  strip " << i + 1 << ":";
        for (Box b : d.strips[i]) os << " " << box_str(b);
        os << "\n";
    }
    if (!d.shared_corners.empty()) {
        os << "  shared:";
        for (const auto& sc : d.shared_corners) os << " " << box_str(sc.box);
        os << "\n";
    }
    return os.str();
}

Outcome cmd_count(const std::string& shape_file, const std::string& method) {
    auto shape = shape_from_json(read_json_file(shape_file));
    Outcome o;
    mpz_class v;
    if (method == "brute") {
        require_oracle_scale(shape.size());
        v = count_syt_bruteforce(shape);
    } else {
        v = count_syt_aitken(shape);
    }
    o.payload = {{"shape", to_json(shape)}, {"boxes", shape.size()}, {"count", big(v)}};
    o.provenance = {{"method", method}};
    o.text = v.get_str() + "\n";
    return o;
}

Outcome cmd_schur(const std::string& shape_file, int nvars, const std::string& method) {
    auto shape = shape_from_json(read_json_file(shape_file));
    Outcome o;
    Polynomial p(nvars);
    if (method == "direct") {
        require_oracle_scale(shape.size());
        p = schur_direct(shape, nvars);
    } else {
        p = schur_jacobi_trudi(shape, nvars);
    }
    o.payload = {{"shape", to_json(shape)}, {"nvars", nvars}, {"polynomial", to_json(p)}};
    o.provenance = {{"method", method}};
    o.text = p.str() + "\n";
    return o;
}

Outcome cmd_decompose(const std::string& shape_file, const std::string& strategy) {
    auto shape = shape_from_json(read_json_file(shape_file));
    auto d = strategy == "thick-rim" ? peel_thick_rim(shape) : peel_rim(shape);
    Outcome o;
    o.payload = to_json(d);
    o.payload["nested"] = is_nested(d);
    o.provenance = {{"strategy", strategy}};
    o.text = decomposition_text(d);
    return o;
}

Outcome cmd_validate(const std::string& decomp_file) {
    auto d = decomposition_from_json(read_json_file(decomp_file));
    auto rep = validate_decomposition(d);
    Outcome o;
    o.payload = to_json(rep);
    Json shared = Json::array();
    for (const auto& sc : d.shared_corners)
        shared.push_back({{"box", {sc.box.row, sc.box.col}}, {"lower_in", sc.lower_owner + 1}, {"upper_in", sc.upper_owner + 1}});
    o.payload["shared_corners"] = shared;
    o.payload["r"] = d.r();
    std::ostringstream os;
    if (rep.ok) {
        auto nest = nestedness(d);
        o.payload["nested"] = nest.nested;
        o.payload["failing_contents"] = nest.failing_contents;
        os << "valid, r=" << d.r() << ", " << (nest.nested ? "nested" : "not nested");
        if (!nest.nested) os << " (first failing content " << nest.failing_content << ")";
        os << "\n";
    } else {
        o.status = "violation";
        os << "invalid (" << rep.clause << "): " << rep.message << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome cmd_verify(const std::string& decomp_file, int nvars, bool full_degree) {
    auto d = decomposition_from_json(read_json_file(decomp_file));
    if (full_degree) {
        int r = -d.shape.size();
        for (const auto& s : d.strips) r += static_cast<int>(s.size());
        nvars = d.shape.size() + r;
    }
    if (nvars < 1) throw std::invalid_argument("--vars must be positive");
    auto rep = verify_identity(d, nvars);
    Outcome o;
    o.status = rep.equal ? "ok" : "violation";
    o.payload = to_json(rep);
    o.provenance = {{"nvars", nvars}, {"full_degree", full_degree}};
    std::ostringstream os;
    os << (rep.equal ? "equal" : "not equal") << ", r=" << rep.r << ", g=" << rep.g << ", " << nvars
       << " variables (" << (rep.conclusive ? "conclusive for this shape" : "consistency check") << ")\n";
    if (!rep.note.empty()) os << rep.note << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_path(const std::string& decomp_file, const std::string& tableau_file) {
    auto d = decomposition_from_json(read_json_file(decomp_file));
    auto rep = validate_decomposition(d);
    if (!rep.ok) throw std::domain_error("invalid decomposition (" + rep.clause + "): " + rep.message);
    auto nest = nestedness(d);
    if (!nest.nested) throw std::domain_error("decomposition is not nested at content " + std::to_string(nest.failing_content));
    auto t = tableau_from_json(read_json_file(tableau_file));
    Diagram boxes(t.boxes.begin(), t.boxes.end());
    if (boxes != skew_boxes(d.shape)) throw std::domain_error("tableau does not fill the decomposition's shape");
    if (!t.is_semistandard()) throw std::domain_error("tableau is not semistandard");
    auto ns = analyze(d);
    auto tuple = tableau_tuple_to_path_tuple(t, ns);
    auto cr = is_noncrossing(tuple.paths);
    Outcome o;
    o.payload = to_json(tuple);
    o.payload["noncrossing"] = cr.noncrossing;
    o.payload["r"] = d.r();
    std::ostringstream os;
    for (std::size_t i = 0; i < tuple.paths.size(); ++i)
        os << "path " << i + 1 << ": " << tuple.paths[i].start.str() << " -> " << tuple.paths[i].end.str() << ", "
           << tuple.paths[i].plus.size() << "+" << tuple.paths[i].minus.size() << " steps\n";
    os << "touchpoints:";
    for (auto [x, y] : tuple.touchpoints) os << " (" << x << "," << y << ")";
    os << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_mstrip(int m, int n, const std::string& head, const std::string& tail, const std::string& method) {
    MStripSpec spec{m, n, parse_partition(head), parse_partition(tail)};
    auto shape = build_mstrip(spec);
    Outcome o;
    mpz_class v;
    if (method == "closed") {
        auto cf = closed_form_for(spec);
        if (!cf) throw std::domain_error("no closed form for " + spec.str());
        v = cf->value;
        o.provenance = {{"method", "closed"}, {"formula", cf->name}, {"n", cf->n}};
    } else if (method == "brute") {
        require_oracle_scale(shape.size());
        v = count_syt_bruteforce(shape);
        o.provenance = {{"method", "brute"}};
    } else {
        auto c = count_mstrip_thm(spec, 0);
        v = c.value;
        o.provenance = {{"method", "thm"},        {"order", c.order}, {"strip_columns", c.strip_columns},
                        {"L", c.L},               {"M", c.M},         {"strip_width", m % 2 == 0 ? 2 : 3}};
    }
    o.payload = {{"spec", spec.str()}, {"diagram", to_json(shape)}, {"boxes", shape.size()}, {"count", big(v)}};
    o.text = v.get_str() + "\n";
    return o;
}

Outcome cmd_sequences(int limit) {
    if (limit < 0) throw std::invalid_argument("--limit must be non-negative");
    auto seq = andre_numbers(limit);
    Outcome o;
    o.payload = Json::array();
    std::ostringstream os;
    os << "n\tA\tE\tT\tAbar\tAtilde\tAhat\n";
    for (int k = 0; k <= limit; ++k) {
        Json row = {{"n", k},
                    {"A", big(seq.A[k])},
                    {"E", big(seq.euler(k))},
                    {"T", k >= 1 && 2 * k - 1 <= limit ? big(seq.tangent(k)) : Json(nullptr)},
                    {"Abar", big(seq.bar(k))},
                    {"Atilde", big(seq.tilde(k))},
                    {"Ahat", big(seq.hat(k))}};
        o.payload.push_back(row);
        os << k << "\t" << seq.A[k] << "\t" << seq.euler(k) << "\t"
           << (row["T"].is_null() ? std::string("-") : row["T"].get<std::string>()) << "\t" << seq.bar(k) << "\t"
           << seq.tilde(k) << "\t" << seq.hat(k) << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome cmd_reproduce(const std::vector<int>& only, bool stream_text) {
    AcceptanceOptions opts;
    opts.only = only;
    Outcome o;
    o.payload = Json::array();
    std::ostringstream os;
    bool ok = true;
    run_acceptance(opts, [&](const CriterionResult& r) {
        ok = ok && r.pass;
        o.payload.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
        os << format_result(r) << "\n";
        if (stream_text) std::cerr << format_result(r) << std::endl;
    });
    o.status = ok ? "ok" : "violation";
    o.text = os.str();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew Schur determinants from thickened-strip decompositions"};
    app.require_subcommand(1);
    std::string format = "json", out;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out, "Write the output to this file");

    std::string shape_file, decomp_file, tableau_file, method, strategy = "rim", head, tail;
    int nvars = 3, m = 2, n = 1, limit = 12;
    bool full_degree = false, progress = false;
    std::vector<int> only;

    auto* count = app.add_subcommand("count", "Count standard Young tableaux of a skew shape");
    count->add_option("--shape", shape_file)->required();
    count->add_option("--method", method)->check(CLI::IsMember({"aitken", "brute"}));

    auto* schur = app.add_subcommand("schur", "Skew Schur polynomial in K variables");
    schur->add_option("--shape", shape_file)->required();
    schur->add_option("--vars", nvars)->required()->check(CLI::PositiveNumber);
    schur->add_option("--method", method)->check(CLI::IsMember({"direct", "jt"}));

    auto* decompose = app.add_subcommand("decompose", "Peel a shape into outer strips or thickened strips");
    decompose->add_option("--shape", shape_file)->required();
    decompose->add_option("--strategy", strategy)->check(CLI::IsMember({"rim", "thick-rim"}));

    auto* validate = app.add_subcommand("validate", "Check a decomposition and report nestedness");
    validate->add_option("--decomp", decomp_file)->required();

    auto* verify = app.add_subcommand("verify", "Compare both sides of the determinant identity");
    verify->add_option("--decomp", decomp_file)->required();
    verify->add_option("--vars", nvars)->check(CLI::PositiveNumber);
    verify->add_flag("--full-degree", full_degree, "Use as many variables as the identity's degree");

    auto* path = app.add_subcommand("path", "Map a tableau to its tuple of double lattice paths");
    path->add_option("--decomp", decomp_file)->required();
    path->add_option("--tableau", tableau_file)->required();

    auto* mstrip = app.add_subcommand("mstrip", "Count standard tableaux of an m-strip diagram");
    mstrip->add_option("--m", m)->required()->check(CLI::Range(2, 64));
    mstrip->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    mstrip->add_option("--head", head, "Head partition, comma separated");
    mstrip->add_option("--tail", tail, "Tail partition, comma separated");
    mstrip->add_option("--method", method)->check(CLI::IsMember({"thm", "closed", "brute"}));

    auto* sequences = app.add_subcommand("sequences", "Andre, Euler and tangent numbers with normalized forms");
    sequences->add_option("--limit", limit)->check(CLI::NonNegativeNumber);

    auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance suite");
    reproduce->add_option("--only", only, "Criterion ids to run");
    reproduce->add_flag("--progress", progress, "Print each criterion to stderr as it finishes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Outcome o;
    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (*count) o = cmd_count(shape_file, method.empty() ? "aitken" : method);
        else if (*schur) o = cmd_schur(shape_file, nvars, method.empty() ? "jt" : method);
        else if (*decompose) o = cmd_decompose(shape_file, strategy);
        else if (*validate) o = cmd_validate(decomp_file);
        else if (*verify) o = cmd_verify(decomp_file, nvars, full_degree);
        else if (*path) o = cmd_path(decomp_file, tableau_file);
        else if (*mstrip) o = cmd_mstrip(m, n, head, tail, method.empty() ? "thm" : method);
        else if (*sequences) o = cmd_sequences(limit);
        else if (*reproduce) o = cmd_reproduce(only, progress);
    } catch (const std::exception& e) {
        o.status = "error";
        o.payload = {{"message", e.what()}};
        o.text = std::string("error: ") + e.what() + "\n";
    }

    std::string rendered;
    if (format == "text") {
        rendered = o.text;
    } else {
        Json doc = {{"command", command}, {"status", o.status}, {"payload", o.payload}, {"provenance", o.provenance}};
        rendered = doc.dump(2) + "\n";
    }
    if (out.empty()) {
        (o.status == "error" && format == "text" ? std::cerr : std::cout) << rendered;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return 1;
        }
        f << rendered;
    }
    return o.status == "ok" ? 0 : 1;
}
