#include "amdesign/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "amdesign/harmonic.hpp"
#include "amdesign/poly.hpp"
#include "amdesign/subsets.hpp"

namespace amdesign::verify {

namespace {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json points_json(Word s) { return Json(to_points(s)); }

Json distribution_json(const WeightDistribution& wd) {
    Json j = Json::object();
    for (int w = 0; w <= wd.n; ++w)
        if (wd[w]) j[std::to_string(w)] = std::to_string(wd[w]);
    return j;
}

Json code_json(const BinaryCode& c) {
    Json rows = Json::array();
    for (Word r : c.basis()) rows.push_back(to_bitstring(r, c.length()));
    return Json{{"n", c.length()}, {"k", c.dimension()}, {"basis", rows}};
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

Json t_design_json(const TDesignCheck& chk) {
    if (chk.lambda) return Json{{"design", true}, {"lambda", std::to_string(*chk.lambda)}};
    return Json{{"design", false},
                {"witness", Json::array({points_json(chk.witness->first), points_json(chk.witness->second)})},
                {"witness_counts",
                 Json::array({std::to_string(chk.witness_counts.first), std::to_string(chk.witness_counts.second)})}};
}

// Blocks of weight w in C plus those of weight w in C^perp, as one multiset.
Design union_at_weight(const BinaryCode& c, const BinaryCode& cd, int w) {
    auto blocks = codewords_of_weight(c, w);
    auto more = codewords_of_weight(cd, w);
    blocks.insert(blocks.end(), more.begin(), more.end());
    return Design(c.length(), w, std::move(blocks));
}

int dual_distance(const BinaryCode& c) {
    const BinaryCode cd = dual(c);
    return cd.dimension() == 0 ? c.length() + 1 : minimum_distance(cd);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

}  // namespace

Json VerificationReport::to_json() const {
    return Json{{"scenario", scenario},
                {"verdict", pass ? "pass" : "fail"},
                {"witnesses", witnesses},
                {"timings", Json{{"total_ms", timing_ms}}}};
}

VerificationReport VerificationReport::from_json(const Json& j) {
    VerificationReport r;
    try {
        r.scenario = j.at("scenario").get<std::string>();
        const auto verdict = j.at("verdict").get<std::string>();
        if (verdict != "pass" && verdict != "fail") throw InputError("verdict must be pass or fail");
        r.pass = verdict == "pass";
        r.witnesses = j.at("witnesses");
        if (j.contains("timings") && j["timings"].contains("total_ms")) r.timing_ms = j["timings"]["total_ms"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed verification report: ") + e.what());
    }
    return r;
}

StrengthProfile strength_profile(const BinaryCode& c, int t_cap) {
    if (t_cap < 0) throw InputError("t_cap must be nonnegative");
    const auto wd = weight_distribution(c);
    StrengthProfile p;
    for (int w = 1; w < c.length(); ++w) {
        if (!wd[w]) continue;
        p.per_weight[w] = design_strength(support_design(c, w), std::min(t_cap, w));
    }
    if (!p.per_weight.empty()) {
        p.delta = p.s = p.per_weight.begin()->second;
        for (const auto& [w, t] : p.per_weight) {
            p.delta = std::min(p.delta, t);
            p.s = std::max(p.s, t);
        }
    }
    return p;
}

Json to_json(const StrengthProfile& p) {
    Json per = Json::object();
    for (const auto& [w, t] : p.per_weight) per[std::to_string(w)] = t;
    return Json{{"per_weight", per}, {"delta", p.delta}, {"s", p.s}};
}

VerificationReport assmus_mattson_check(const BinaryCode& c, int t) {
    Stopwatch clock;
    VerificationReport r{"am", false, Json::object(), 0};
    const int n = c.length();
    const int d = minimum_distance(c);
    if (t < 0 || t >= d)
        throw PreconditionError("Assmus-Mattson needs 0 <= t < d (t = " + std::to_string(t) + ", d = " +
                                std::to_string(d) + ")");
    const BinaryCode cd = dual(c);
    const int dd = dual_distance(c);
    const auto wd = weight_distribution(c);
    Json low = Json::array();
    for (int w = 1; w <= n - t; ++w)
        if (wd[w]) low.push_back(w);
    const bool applicable = static_cast<int>(low.size()) <= dd - t;
    r.witnesses["n"] = n;
    r.witnesses["t"] = t;
    r.witnesses["d"] = d;
    r.witnesses["dual_d"] = dd;
    r.witnesses["weights_at_most_n_minus_t"] = low;
    r.witnesses["allowed_count"] = dd - t;
    r.witnesses["applicable"] = applicable;
    r.pass = true;
    if (applicable) {
        Json code_designs = Json::object(), dual_designs = Json::object();
        for (int u = d; u <= n - t; ++u) {
            if (!wd[u]) continue;
            const auto chk = check_t_design(support_design(c, u), t);
            code_designs[std::to_string(u)] = t_design_json(chk);
            r.pass = r.pass && chk.lambda.has_value();
        }
        if (cd.dimension() > 0) {
            const auto wdd = weight_distribution(cd);
            for (int w = dd; w <= n; ++w) {
                if (!wdd[w] || w < t) continue;
                const auto chk = check_t_design(support_design(cd, w), t);
                dual_designs[std::to_string(w)] = t_design_json(chk);
                r.pass = r.pass && chk.lambda.has_value();
            }
        }
        r.witnesses["code_designs"] = code_designs;
        r.witnesses["dual_designs"] = dual_designs;
    }
    r.timing_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_support_one_designs(const BinaryCode& c) {
    Stopwatch clock;
    VerificationReport r{"thm1.1", false, Json::object(), 0};
    const int n = c.length();
    require(n % 8 == 0, "length must be divisible by 8");
    const auto cls = classify(c);
    require(cls.extremality == Extremality::near_extremal, "code is not near-extremal");
    require(cls.type_one || (cls.even && cls.formally_self_dual),
            "code is neither Type I nor even formally self-dual");
    const bool unions = !cls.type_one;
    const BinaryCode cd = dual(c);
    r.witnesses["branch"] = unions ? "union_with_dual" : "type_one";

    // Counting route.
    bool counting = true;
    Json per_weight = Json::object();
    const auto wd = weight_distribution(c);
    for (int w = 1; w < n; ++w) {
        if (!wd[w]) continue;
        const Design design = unions ? union_at_weight(c, cd, w) : support_design(c, w);
        const auto chk = check_t_design(design, 1);
        per_weight[std::to_string(w)] = t_design_json(chk);
        counting = counting && chk.lambda.has_value();
    }
    r.witnesses["counting"] = Json{{"pass", counting}, {"weights", per_weight}};

    // Harmonic route: every degree-1 harmonic enumerator vanishes.
    bool harmonic = true;
    const auto& basis = harm_basis(n, 1);
    Json nonzero = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        HomPoly w = harmonic_weight_enumerator(c, basis[i]);
        if (unions) w += harmonic_weight_enumerator(cd, basis[i]);
        if (!w.is_zero()) {
            harmonic = false;
            nonzero.push_back(Json{{"basis_index", i}, {"enumerator", w.to_string()}});
        }
    }
    r.witnesses["harmonic"] = Json{{"pass", harmonic}, {"basis_size", basis.size()}, {"nonzero", nonzero}};
    r.witnesses["routes_agree"] = counting == harmonic;
    r.pass = counting && harmonic;
    r.timing_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_t_design(const Design& d, int t, std::optional<std::uint64_t> lambda) {
    Stopwatch clock;
    VerificationReport r{"design-check", false, Json::object(), 0};
    const auto chk = check_t_design(d, t);
    r.witnesses["v"] = d.points();
    r.witnesses["k"] = d.block_size();
    r.witnesses["blocks"] = std::to_string(d.block_count());
    r.witnesses["t"] = t;
    r.witnesses["counting"] = t_design_json(chk);
    r.pass = chk.lambda.has_value();
    if (lambda) {
        r.witnesses["expected_lambda"] = std::to_string(*lambda);
        r.pass = r.pass && *chk.lambda == *lambda;
    }
    r.timing_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_type_one_16(const BinaryCode& c) {
    Stopwatch clock;
    VerificationReport r{"thm1.2-1", false, Json::object(), 0};
    require(c.length() == 16 && c.dimension() == 8, "code must be a [16,8] code");
    const auto cls = classify(c);
    require(cls.type_one, "code is not Type I");
    require(cls.extremality == Extremality::near_extremal, "code is not near-extremal");

    const Design c6 = support_design(c, 6);
    const Design c10 = support_design(c, 10);
    const Rational lambda0 = lambda_i(2, 16, 6, 8, 0);
    const bool count_ok = Rational(static_cast<unsigned long>(c6.block_count())) == lambda0;
    r.witnesses["c6_blocks"] = std::to_string(c6.block_count());
    r.witnesses["lambda0"] = lambda0.get_str();

    const auto chk = check_t_design(c6, 2);
    const bool counting = chk.lambda && *chk.lambda == 8;
    r.witnesses["counting"] = t_design_json(chk);
    r.witnesses["counting"]["pairs_checked"] = std::to_string(binomial_u64(16, 2));

    const auto failure = delsarte_failure(c6.blocks(), 16, 2);
    const bool harmonic = !failure.has_value();
    Json harm{{"pass", harmonic},
              {"basis_sizes", Json::array({harm_basis(16, 1).size(), harm_basis(16, 2).size()})}};
    if (failure)
        harm["failure"] = Json{{"degree", failure->degree}, {"basis_index", failure->basis_index},
                               {"sum", failure->sum.get_str()}};
    r.witnesses["harmonic"] = harm;

    const bool complement = complement_design(c6).same_blocks(c10);
    r.witnesses["complement_of_c6_is_c10"] = complement;

    const auto profile = strength_profile(c, 3);
    std::set<int> gap;
    for (const auto& [w, t] : profile.per_weight)
        if (t == profile.s) gap.insert(w);
    const bool gap_ok = profile.delta == 1 && profile.s == 2 && gap == std::set<int>{6, 10};
    r.witnesses["profile"] = to_json(profile);
    r.witnesses["gap_weights"] = Json(std::vector<int>(gap.begin(), gap.end()));

    r.pass = count_ok && counting && harmonic && complement && gap_ok;
    r.timing_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_fsd_union_two_designs(const BinaryCode& c) {
    Stopwatch clock;
    VerificationReport r{"thm1.2-2", false, Json::object(), 0};
    const int n = c.length();
    if (n == 64)
        throw GuardError("length 64 means 2^32 codewords: weight-slice enumeration required");
    require(n == 16, "code length must be 16");
    require(c.dimension() == 8, "code must have dimension 8");
    const auto cls = classify(c);
    require(cls.even && cls.formally_self_dual, "code is not even formally self-dual");
    require(cls.extremality == Extremality::near_extremal, "code is not near-extremal");
    const BinaryCode cd = dual(c);
    r.witnesses["self_dual"] = cls.self_dual;
    r.pass = true;
    for (int w : {6, 10}) {
        const Design u = union_at_weight(c, cd, w);
        const auto chk = check_t_design(u, 2);
        Json entry = t_design_json(chk);
        entry["blocks"] = std::to_string(u.block_count());
        entry["harmonic"] = delsarte_design_check(u.blocks(), n, 2);
        r.witnesses["union_" + std::to_string(w)] = entry;
        r.pass = r.pass && chk.lambda.has_value() && entry["harmonic"].get<bool>();
    }
    r.timing_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_design_pipeline(const Design& d) {
    Stopwatch clock;
    VerificationReport r{"thm1.4", false, Json::object(), 0};
    require(d.points() == 16 && d.block_size() == 6, "design must have v = 16 and k = 6");
    const auto lambda = is_t_design(d, 2);
    require(lambda && *lambda == 8, "design is not a 2-(16,6,8) design");
    if (auto bad = self_orthogonality_violation(d))
        throw PreconditionError("design is not self-orthogonal: blocks " + std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " meet in an odd number of points");

    Json steps = Json::array();
    std::string failed;
    auto step = [&](const std::string& name, bool ok, Json detail) {
        detail["step"] = name;
        detail["pass"] = ok;
        steps.push_back(std::move(detail));
        if (!ok && failed.empty()) failed = name;
    };

    const BinaryCode c = code_from_design(d);
    step("generate_code", true, Json{{"k", c.dimension()}});

    const auto cls = classify(c);
    step("even_self_orthogonal", cls.even && cls.self_orthogonal,
         Json{{"even", cls.even}, {"self_orthogonal", cls.self_orthogonal}});

    // Every pair of points is met in exactly one point by 2(lambda1 - lambda2)
    // blocks, so no weight-2 vector is orthogonal to C.
    const Rational l1 = lambda_i(2, 16, 6, 8, 1), l2 = lambda_i(2, 16, 6, 8, 2);
    const Rational gap = l1 - l2;
    const std::uint64_t expected_odd = 2 * gap.get_num().get_ui();
    bool pairs_ok = true;
    for (Word pair : all_subsets(16, 2)) {
        std::uint64_t odd = 0;
        for (Word b : d.blocks()) odd += weight(b & pair) == 1;
        if (odd != expected_odd) pairs_ok = false;
    }
    std::optional<std::pair<Word, Word>> four;
    for (std::size_t i = 0; i < d.block_count() && !four; ++i)
        for (std::size_t j = i + 1; j < d.block_count(); ++j)
            if (weight(d.blocks()[i] & d.blocks()[j]) == 4) {
                four = {d.blocks()[i], d.blocks()[j]};
                break;
            }
    const BinaryCode cd = dual(c);
    const int dual_d = cd.dimension() ? minimum_distance(cd) : -1;
    Json dd{{"pairs_met_once", std::to_string(expected_odd)},
            {"all_pairs_met_once", pairs_ok},
            {"dual_minimum_distance", dual_d}};
    if (four)
        dd["weight_four_word"] = to_bitstring(four->first ^ four->second, 16);
    step("dual_minimum_distance", pairs_ok && four && cd.contains(four->first ^ four->second) && dual_d == 4, dd);

    // 1 + |C_6| + |C_10| + 1 codewords force dim C >= 8.
    std::set<Word> distinct(d.blocks().begin(), d.blocks().end());
    std::uint64_t complements = 0;
    for (Word b : distinct) complements += c.contains(full_mask(16) & ~b);
    const bool all_ones = c.contains(full_mask(16));
    const std::uint64_t lower = 1 + distinct.size() + complements + (all_ones ? 1 : 0);
    step("dimension_bound", lower > 128 && c.dimension() == 8 && c == cd,
         Json{{"codeword_lower_bound", std::to_string(lower)},
              {"blocks", std::to_string(distinct.size())},
              {"complements_in_code", std::to_string(complements)},
              {"all_ones_in_code", all_ones},
              {"dimension", c.dimension()},
              {"self_dual", c == cd}});

    const int cdist = c.dimension() ? minimum_distance(c) : -1;
    step("type_one_16_8_4",
         cls.type_one && cls.extremality == Extremality::near_extremal && c.dimension() == 8 && cdist == 4,
         Json{{"class", class_json(cls)}, {"minimum_distance", cdist}});

    const auto words6 = codewords_of_weight(c, 6);
    const bool recovered = !words6.empty() && Design(16, 6, words6).same_blocks(d);
    step("design_recovered", recovered, Json{{"weight_six_words", std::to_string(words6.size())}});

    r.witnesses["steps"] = steps;
    r.witnesses["code"] = code_json(c);
    if (!failed.empty()) r.witnesses["failed_step"] = failed;
    r.pass = failed.empty();
    r.timing_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_doubly_even_subcode(const BinaryCode& c) {
    Stopwatch clock;
    VerificationReport r{"cor1.5", false, Json::object(), 0};
    require(c.length() == 16 && c.dimension() == 8, "code must be a [16,8] code");
    const auto cls = classify(c);
    require(cls.type_one && minimum_distance(c) == 4, "code is not the Type I [16,8,4] code");

    const BinaryCode c0 = doubly_even_subcode(c);
    const BinaryCode c0d = dual(c0);
    const auto wd0 = weight_distribution(c0);
    const auto wdd = weight_distribution(c0d);
    const int d0d = minimum_distance(c0d);
    bool weights_ok = true;
    for (int w = 0; w <= 16; ++w)
        if (wd0[w] && w % 4 != 0) weights_ok = false;

    auto strengths = [](const BinaryCode& code, const WeightDistribution& wd) {
        Json j = Json::object();
        for (int w = 1; w < code.length(); ++w)
            if (wd[w]) j[std::to_string(w)] = design_strength(support_design(code, w), std::min(w, 5));
        return j;
    };
    const Json s0 = strengths(c0, wd0);
    const Json s0d = strengths(c0d, wdd);
    const auto am = assmus_mattson_check(c0, 1);

    r.witnesses["subcode"] = Json{{"k", c0.dimension()}, {"distribution", distribution_json(wd0)},
                                  {"doubly_even", weights_ok}, {"strengths", s0}};
    r.witnesses["subcode_dual"] = Json{{"k", c0d.dimension()}, {"minimum_distance", d0d},
                                       {"distribution", distribution_json(wdd)}, {"strengths", s0d}};
    r.witnesses["assmus_mattson_t1"] = Json{{"applicable", am.witnesses["applicable"]}, {"pass", am.pass}};

    const bool exceeds = s0d.contains("6") && s0d.contains("10") && s0d["6"].get<int>() > 1 &&
                         s0d["10"].get<int>() > 1;
    r.witnesses["exceeds_guarantee_at_6_10"] = exceeds;
    r.pass = c0.dimension() == 7 && weights_ok && c0d.dimension() == 9 && d0d == 4 &&
             am.witnesses["applicable"].get<bool>() && am.pass && exceeds;
    r.timing_ms = clock.elapsed_ms();
    return r;
}

}  // namespace amdesign::verify
