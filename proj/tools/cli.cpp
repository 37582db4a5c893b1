#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "amdesign/catalog.hpp"
#include "amdesign/designs.hpp"
#include "amdesign/gf2.hpp"
#include "amdesign/harmonic.hpp"
#include "amdesign/parallel.hpp"
#include "amdesign/poly.hpp"
#include "amdesign/subsets.hpp"
#include "amdesign/verify.hpp"

namespace amdesign::cli {

namespace {

using Json = nlohmann::ordered_json;
using verify::VerificationReport;

struct Options {
    std::string format = "text";
    unsigned threads = 0;
    std::uint64_t seed = 0;

    std::string generator;
    std::string design_path;
    std::string output;
    int t = 0;
    int w = 0;
    int k = 0;
    int n = 16;
    int d = 4;
    int v = 0;
    int m = 0;
    int index = -1;
    int block = -1;
    int alpha_max = 16;
    int t_cap = 5;
    std::optional<std::uint64_t> lambda;
    std::string lambda_text;
    std::vector<int> allowed;
    std::vector<std::string> fixed;
    std::uint64_t max_iterations = 1'000'000;
    bool store = false;
};

void render_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
        } else if (value.is_array() && std::any_of(value.begin(), value.end(),
                                                   [](const Json& e) { return e.is_structured(); })) {
            out << pad << key << ":\n";
            for (const auto& e : value) {
                if (e.is_object()) {
                    out << pad << "  -\n";
                    render_text(e, out, indent + 4);
                } else {
                    out << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << '\n';
                }
            }
        } else {
            out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
}

class Printer {
public:
    Printer(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    void emit(const Json& j) const {
        if (json())
            out_ << j.dump(2) << '\n';
        else
            render_text(j, out_, 0);
    }

    int report(const VerificationReport& r) const {
        if (json()) {
            out_ << r.to_json().dump(2) << '\n';
        } else {
            out_ << r.scenario << ": " << (r.pass ? "pass" : "fail") << '\n';
            render_text(r.witnesses, out_, 2);
        }
        return r.pass ? kSuccess : kFailVerdict;
    }

private:
    // Read at print time: the format flag is parsed after construction.
    bool json() const { return opt_.format == "json"; }

    const Options& opt_;
    std::ostream& out_;
};

Json code_json(const BinaryCode& c) {
    Json rows = Json::array();
    for (Word r : c.basis()) rows.push_back(to_bitstring(r, c.length()));
    return Json{{"n", c.length()}, {"k", c.dimension()}, {"basis", rows}};
}

Json distribution_json(const WeightDistribution& wd) {
    Json j = Json::object();
    for (int w = 0; w <= wd.n; ++w)
        if (wd[w]) j[std::to_string(w)] = std::to_string(wd[w]);
    return j;
}

Json class_json(const CodeClass& cls) {
    return Json{{"even", cls.even},
                {"doubly_even", cls.doubly_even},
                {"self_orthogonal", cls.self_orthogonal},
                {"self_dual", cls.self_dual},
                {"formally_self_dual", cls.formally_self_dual},
                {"type_one", cls.type_one},
                {"type_two", cls.type_two},
                {"extremality", std::string(to_string(cls.extremality))}};
}

catalog::SearchConfig search_config(const Options& opt) { return {opt.seed, opt.max_iterations}; }

// A generator matrix file, a file of that name in the code database, a pinned
// database code (derived on first use), or a builtin name such as "d4+d4".
BinaryCode load_code(const Options& opt) {
    if (opt.generator.empty()) throw InputError("a code is required (-g)");
    const std::filesystem::path p(opt.generator);
    if (std::filesystem::is_regular_file(p)) return read_generator_matrix(p.string());
    auto db = catalog::CodeDatabase::open_default();
    if (std::filesystem::is_regular_file(db.directory() / p)) return read_generator_matrix((db.directory() / p).string());
    const std::string name = p.extension() == ".gm" ? p.stem().string() : opt.generator;
    if (name == "type1_16") return catalog::load_type_i_16(db, search_config(opt));
    if (name == "fsd16") return catalog::load_even_fsd_16(db, search_config(opt));
    if (db.contains(name)) return db.load(name);
    return catalog::builtin(name);
}

BinaryCode load_code_or(Options opt, const std::string& fallback) {
    if (opt.generator.empty()) opt.generator = fallback;
    return load_code(opt);
}

Design load_design(const Options& opt) {
    if (opt.design_path.empty()) throw InputError("a design is required (-d)");
    return read_design(opt.design_path);
}

void save_or_print(const Options& opt, const Printer& pr, const Design& d, std::ostream& out) {
    if (opt.output.empty()) {
        out << design_to_json(d).dump() << '\n';
        return;
    }
    write_design(opt.output, d);
    pr.emit(Json{{"written", opt.output}, {"v", d.points()}, {"k", d.block_size()}, {"blocks", d.block_count()}});
}

const HarmonicFunction& basis_element(int n, int k, int index) {
    const auto& basis = harm_basis(n, k);
    if (index < 0 || static_cast<std::size_t>(index) >= basis.size())
        throw InputError("harmonic basis index " + std::to_string(index) + " out of range [0, " +
                         std::to_string(basis.size()) + ")");
    return basis[static_cast<std::size_t>(index)];
}

std::vector<int> basis_indices(int n, int k, int index) {
    if (index >= 0) return {index};
    std::vector<int> all(harm_basis(n, k).size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return all;
}

int code_info(const Options& opt, const Printer& pr) {
    const BinaryCode c = load_code(opt);
    const auto wd = weight_distribution(c);
    Json j = code_json(c);
    j["minimum_distance"] = wd.minimum_nonzero_weight();
    j["class"] = class_json(classify(c));
    j["weight_distribution"] = distribution_json(wd);
    pr.emit(j);
    return kSuccess;
}

int code_dual(const Options& opt, const Printer& pr) {
    const BinaryCode cd = dual(load_code(opt));
    if (!opt.output.empty()) write_generator_matrix(opt.output, cd);
    pr.emit(code_json(cd));
    return kSuccess;
}

int code_weights(const Options& opt, const Printer& pr) {
    const auto wd = weight_distribution(load_code(opt));
    pr.emit(Json{{"weight_distribution", distribution_json(wd)},
                 {"enumerator", weight_enumerator(wd).to_string()}});
    return kSuccess;
}

int code_subcode(const Options& opt, const Printer& pr) {
    const BinaryCode c0 = doubly_even_subcode(load_code(opt));
    if (!opt.output.empty()) write_generator_matrix(opt.output, c0);
    pr.emit(code_json(c0));
    return kSuccess;
}

int design_check(const Options& opt, const Printer& pr) {
    if (opt.t < 1) throw InputError("--t must be at least 1");
    return pr.report(verify::verify_t_design(load_design(opt), opt.t, opt.lambda));
}

int design_from_code(const Options& opt, const Printer& pr, std::ostream& out) {
    save_or_print(opt, pr, support_design(load_code(opt), opt.w), out);
    return kSuccess;
}

int design_complement(const Options& opt, const Printer& pr, std::ostream& out) {
    save_or_print(opt, pr, complement_design(load_design(opt)), out);
    return kSuccess;
}

int design_intersections(const Options& opt, const Printer& pr) {
    const Design d = load_design(opt);
    auto profile_json = [](const IntersectionProfile& p) {
        Json j = Json::object();
        for (std::size_t i = 0; i < p.counts.size(); ++i)
            if (p.counts[i]) j[std::to_string(i)] = std::to_string(p.counts[i]);
        return j;
    };
    if (opt.block >= 0) {
        if (static_cast<std::size_t>(opt.block) >= d.block_count()) throw InputError("--block out of range");
        const auto b = static_cast<std::size_t>(opt.block);
        pr.emit(Json{{"block", to_points(d.blocks()[b])}, {"profile", profile_json(intersection_profile(d, b))}});
        return kSuccess;
    }
    // Every block: distinct profiles with the number of blocks showing each.
    std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> seen;
    for (std::size_t b = 0; b < d.block_count(); ++b) {
        auto counts = intersection_profile(d, b).counts;
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == counts; });
        if (it == seen.end())
            seen.emplace_back(std::move(counts), 1);
        else
            ++it->second;
    }
    Json profiles = Json::array();
    for (const auto& [counts, blocks] : seen)
        profiles.push_back(Json{{"profile", profile_json({counts})}, {"blocks", blocks}});
    pr.emit(Json{{"blocks", d.block_count()}, {"profiles", profiles}});
    return kSuccess;
}

int design_mendelsohn(const Options& opt, const Printer& pr) {
    MendelsohnSystem sys;
    sys.t = opt.t;
    sys.v = opt.v;
    sys.k = opt.k;
    sys.m = opt.m;
    sys.allowed = opt.allowed;
    try {
        sys.lambda = Rational(opt.lambda_text);
        sys.lambda.canonicalize();
    } catch (const std::invalid_argument&) {
        throw InputError("--lambda must be a rational number");
    }
    for (const auto& f : opt.fixed) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw InputError("--fix expects i=value, got " + f);
        try {
            sys.fixed[std::stoi(f.substr(0, eq))] = std::stoll(f.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw InputError("--fix expects i=value, got " + f);
        }
    }
    const auto res = mendelsohn_solve(sys);
    Json lambdas = Json::array();
    for (const auto& l : res.lambdas) lambdas.push_back(to_string(l));
    Json solutions = Json::array();
    for (const auto& s : res.solutions) {
        Json sol = Json::object();
        for (std::size_t i = 0; i < s.size(); ++i) sol[std::to_string(res.unknowns[i])] = s[i];
        solutions.push_back(sol);
    }
    pr.emit(Json{{"lambdas", lambdas}, {"solutions", solutions}});
    return kSuccess;
}

int harmonic_basis_dim(const Options& opt, const Printer& pr) {
    const auto& basis = harm_basis(opt.n, opt.k);
    pr.emit(Json{{"n", opt.n}, {"k", opt.k}, {"dimension", basis.size()}});
    return kSuccess;
}

int harmonic_wenum(const Options& opt, const Printer& pr) {
    const BinaryCode c = load_code(opt);
    Json list = Json::array();
    for (int i : basis_indices(c.length(), opt.k, opt.index)) {
        const auto& f = basis_element(c.length(), opt.k, i);
        list.push_back(Json{{"index", i},
                            {"wenum", harmonic_weight_enumerator(c, f).to_string()},
                            {"z", zcf(c, f).to_string()}});
    }
    pr.emit(Json{{"n", c.length()}, {"k", opt.k}, {"enumerators", list}});
    return kSuccess;
}

int harmonic_transform_check(const Options& opt, const Printer& pr) {
    const BinaryCode c = load_code(opt);
    const BinaryCode cd = dual(c);
    const Integer size = Integer(1) << static_cast<unsigned>(c.dimension());
    VerificationReport r;
    r.scenario = "transform-check";
    r.pass = true;
    Json mismatches = Json::array();
    std::size_t checked = 0;
    for (int i : basis_indices(c.length(), opt.k, opt.index)) {
        const auto& f = basis_element(c.length(), opt.k, i);
        const HomPoly lhs = bachoc_transform(zcf(c, f), opt.k, size, c.length());
        const HomPoly rhs = zcf(cd, f);
        ++checked;
        if (lhs != rhs) {
            r.pass = false;
            mismatches.push_back(Json{{"index", i}, {"transform", lhs.to_string()}, {"dual", rhs.to_string()}});
        }
    }
    r.witnesses = Json{{"k", opt.k}, {"checked", checked}, {"mismatches", mismatches}};
    return pr.report(r);
}

int poly_gleason(const Options& opt, const Printer& pr) {
    const BinaryCode c = load_code(opt);
    const HomPoly p = opt.t == 0 ? weight_enumerator(weight_distribution(c))
                                 : zcf(c, basis_element(c.length(), opt.t, std::max(opt.index, 0)));
    const auto dec = gleason_decompose(p, opt.t, c.length());
    Json basis = Json::array();
    for (const auto& b : dec.basis) basis.push_back(b.to_string());
    Json coeffs = Json::array();
    for (const auto& q : dec.coefficients) coeffs.push_back(to_string(q));
    pr.emit(Json{{"polynomial", p.to_string()},
                 {"t", opt.t},
                 {"relative_invariant", check_relative_invariance(p, opt.t)},
                 {"in_span", dec.in_span},
                 {"basis", basis},
                 {"coefficients", coeffs},
                 {"residual", dec.residual.to_string()}});
    return dec.in_span ? kSuccess : kFailVerdict;
}

int poly_vanishing(const Options& opt, const Printer& pr) {
    Json pairs = Json::array();
    for (const auto& [alpha, i] : vanishing_coefficient_search(opt.alpha_max)) pairs.push_back(Json::array({alpha, i}));
    pr.emit(Json{{"alpha_max", opt.alpha_max}, {"pairs", pairs}});
    return kSuccess;
}

int search_result(const Options& opt, const Printer& pr, const catalog::SearchResult& r, const std::string& name) {
    if (!opt.output.empty()) write_generator_matrix(opt.output, r.code);
    if (opt.store) {
        auto db = catalog::CodeDatabase::open_default();
        db.store(name, r.code, {{"provenance", "search"}, {"seed", opt.seed}, {"iterations", r.iterations}});
    }
    const auto wd = weight_distribution(r.code);
    Json j = code_json(r.code);
    j["seed"] = opt.seed;
    j["iterations"] = r.iterations;
    j["class"] = class_json(classify(r.code));
    j["weight_distribution"] = distribution_json(wd);
    pr.emit(j);
    return kSuccess;
}

int verify_profile(const Options& opt, const Printer& pr) {
    const BinaryCode c = load_code(opt);
    VerificationReport r;
    r.scenario = "profile";
    r.pass = true;
    r.witnesses = verify::to_json(verify::strength_profile(c, opt.t_cap));
    return pr.report(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app("Binary codes, harmonic weight enumerators and t-designs", "amdesign");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", opt.threads, "Worker threads (default: all cores)");
    app.add_option("--seed", opt.seed, "Search seed");

    std::function<int()> action;
    const Printer pr(opt, out);
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> fn) {
        auto* sub = parent->add_subcommand(name, help);
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };
    auto add_code = [&](CLI::App* s) { s->add_option("-g,--generator", opt.generator, "Generator matrix file or code name"); };
    auto add_design = [&](CLI::App* s) { s->add_option("-d,--design", opt.design_path, "Design JSON file"); };
    auto add_output = [&](CLI::App* s) { s->add_option("-o,--output", opt.output, "Write the result to this file"); };

    auto* code = group("code", "Binary linear codes");
    auto* s = leaf(code, "info", "Classification and weight distribution", [&] { return code_info(opt, pr); });
    add_code(s);
    s = leaf(code, "dual", "Dual code", [&] { return code_dual(opt, pr); });
    add_code(s);
    add_output(s);
    s = leaf(code, "weights", "Weight distribution and enumerator", [&] { return code_weights(opt, pr); });
    add_code(s);
    s = leaf(code, "subcode", "Doubly-even subcode", [&] { return code_subcode(opt, pr); });
    add_code(s);
    add_output(s);

    auto* design = group("design", "Block designs");
    s = leaf(design, "check", "Counting t-design check", [&] { return design_check(opt, pr); });
    add_design(s);
    s->add_option("--t", opt.t, "Strength")->required();
    s->add_option("--lambda", opt.lambda, "Required lambda");
    s = leaf(design, "from-code", "Support design of the weight-w codewords",
             [&] { return design_from_code(opt, pr, out); });
    add_code(s);
    add_output(s);
    s->add_option("--w", opt.w, "Weight")->required();
    s = leaf(design, "complement", "Complement design", [&] { return design_complement(opt, pr, out); });
    add_design(s);
    add_output(s);
    s = leaf(design, "intersections", "Block intersection profiles", [&] { return design_intersections(opt, pr); });
    add_design(s);
    s->add_option("--block", opt.block, "0-based block index (default: every block)");
    s = leaf(design, "mendelsohn", "Solve the intersection equations for an m-set",
             [&] { return design_mendelsohn(opt, pr); });
    s->add_option("--t", opt.t)->required();
    s->add_option("--v", opt.v)->required();
    s->add_option("--k", opt.k)->required();
    s->add_option("--lambda", opt.lambda_text)->required();
    s->add_option("--m", opt.m)->required();
    s->add_option("--allowed", opt.allowed, "Allowed intersection sizes")->delimiter(',')->required();
    s->add_option("--fix", opt.fixed, "Fixed counts as i=value")->delimiter(',');

    auto* harmonic = group("harmonic", "Harmonic functions and enumerators");
    s = leaf(harmonic, "basis-dim", "Dimension of Harm_k(n)", [&] { return harmonic_basis_dim(opt, pr); });
    s->add_option("--n", opt.n)->required();
    s->add_option("--k", opt.k)->required();
    s = leaf(harmonic, "wenum", "Harmonic weight enumerators", [&] { return harmonic_wenum(opt, pr); });
    add_code(s);
    s->add_option("--k", opt.k)->required();
    s->add_option("--index", opt.index, "Basis element (default: all)");
    s = leaf(harmonic, "transform-check", "Compare the transform of Z_{C,f} with Z_{C^perp,f}",
             [&] { return harmonic_transform_check(opt, pr); });
    add_code(s);
    s->add_option("--k", opt.k)->required();
    s->add_option("--index", opt.index, "Basis element (default: all)");

    auto* poly = group("poly", "Invariant polynomials");
    s = leaf(poly, "gleason", "Decompose W_C (t = 0) or Z_{C,f} in the Gleason-type basis",
             [&] { return poly_gleason(opt, pr); });
    add_code(s);
    s->add_option("--t", opt.t, "Harmonic degree");
    s->add_option("--index", opt.index, "Basis element of Harm_t (default 0)");
    s = leaf(poly, "lemma4.1", "Vanishing coefficients of (x^4+2x^2y^2+y^4)(x^2-y^2)^alpha",
             [&] { return poly_vanishing(opt, pr); });
    s->add_option("--alpha-max", opt.alpha_max);

    auto* search = group("search", "Seeded code searches");
    s = leaf(search, "type1-16", "Self-dual [16,8,4] code that is not doubly even", [&] {
        return search_result(opt, pr, catalog::search_type_i_16(search_config(opt)), "type1_16");
    });
    add_output(s);
    s->add_option("--max-iterations", opt.max_iterations);
    s->add_flag("--store", opt.store, "Store the result in the code database");
    s = leaf(search, "fsd", "Even formally self-dual code that is not self-dual", [&] {
        return search_result(opt, pr, catalog::search_even_fsd(opt.n, opt.d, search_config(opt)),
                             opt.n == 16 && opt.d == 4 ? "fsd16" : "fsd" + std::to_string(opt.n));
    });
    add_output(s);
    s->add_option("--n", opt.n);
    s->add_option("--d", opt.d);
    s->add_option("--max-iterations", opt.max_iterations);
    s->add_flag("--store", opt.store, "Store the result in the code database");

    auto* ver = group("verify", "Verification scenarios");
    s = leaf(ver, "am", "Assmus-Mattson hypothesis and promised designs",
             [&] { return pr.report(verify::assmus_mattson_check(load_code(opt), opt.t)); });
    add_code(s);
    s->add_option("--t", opt.t)->required();
    s = leaf(ver, "thm1.1", "Support designs (or unions) are 1-designs",
             [&] { return pr.report(verify::verify_support_one_designs(load_code(opt))); });
    add_code(s);
    s = leaf(ver, "thm1.2-1", "C_6 of the Type I [16,8,4] code is a 2-(16,6,8) design", [&] {
        return pr.report(verify::verify_type_one_16(load_code_or(opt, "type1_16")));
    });
    add_code(s);
    s = leaf(ver, "thm1.2-2", "Unions at weights 6 and 10 of an even fsd code are 2-designs", [&] {
        return pr.report(verify::verify_fsd_union_two_designs(load_code_or(opt, "fsd16")));
    });
    add_code(s);
    s = leaf(ver, "thm1.4", "Self-orthogonal 2-(16,6,8) design to Type I code", [&] {
        const Design d = opt.design_path.empty() ? support_design(load_code_or(opt, "type1_16"), 6) : load_design(opt);
        return pr.report(verify::verify_design_pipeline(d));
    });
    add_design(s);
    s = leaf(ver, "cor1.5", "Doubly-even subcode of the Type I [16,8,4] code", [&] {
        return pr.report(verify::verify_doubly_even_subcode(load_code_or(opt, "type1_16")));
    });
    add_code(s);
    s = leaf(ver, "profile", "Support-design strengths, delta and s", [&] { return verify_profile(opt, pr); });
    add_code(s);
    s->add_option("--t-cap", opt.t_cap, "Largest strength tested");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kSuccess : kInputError;
    }
    if (opt.threads > 0) set_worker_count(opt.threads);
    try {
        return action ? action() : kInputError;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return kGuardTripped;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace amdesign::cli
