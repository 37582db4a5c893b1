#include <gtest/gtest.h>

#include <random>

#include "amdesign/catalog.hpp"
#include "amdesign/parallel.hpp"
#include "amdesign/verify.hpp"
#include "oracles.hpp"

using namespace amdesign;
using namespace amdesign::verify;

namespace {

const Design& c6() {
    static const Design d = support_design(fixtures::type_one_16(), 6);
    return d;
}

long count_containing(const std::vector<Word>& blocks, const Json& points) {
    Word s = 0;
    for (int p : points.get<std::vector<int>>()) s |= Word{1} << (p - 1);
    long n = 0;
    for (Word b : blocks) n += (b & s) == s;
    return n;
}

}  // namespace

TEST(AssmusMattson, E8AtStrengthThree) {
    const auto r = assmus_mattson_check(catalog::builtin("e8"), 3);
    EXPECT_TRUE(r.witnesses["applicable"].get<bool>());
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(oracle::lambda(oracle::blocks_of(codewords_of_weight(catalog::builtin("e8"), 4)), 8, 3), 1);
}

TEST(AssmusMattson, TypeOneSixteenIsNotCovered) {
    for (int t : {1, 2}) {
        const auto r = assmus_mattson_check(fixtures::type_one_16(), t);
        EXPECT_FALSE(r.witnesses["applicable"].get<bool>()) << t;
        EXPECT_TRUE(r.pass) << t;
    }
    EXPECT_THROW(assmus_mattson_check(fixtures::type_one_16(), 4), PreconditionError);
    EXPECT_THROW(assmus_mattson_check(fixtures::type_one_16(), -1), PreconditionError);
}

TEST(AssmusMattson, PromisedDesignsExistWhenApplicable) {
    std::mt19937_64 rng(83);
    int applicable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 7);
        const BinaryCode c = oracle::random_code(rng, n, 1 + static_cast<int>(rng() % (n - 1)));
        if (c.dimension() == 0 || dual(c).dimension() == 0) continue;
        const int d = minimum_distance(c);
        for (int t = 0; t < d; ++t) {
            const auto r = assmus_mattson_check(c, t);
            EXPECT_TRUE(r.pass);
            if (!r.witnesses["applicable"].get<bool>()) continue;
            ++applicable;
            const auto wd = weight_distribution(c);
            for (int w = 1; w <= n; ++w)
                if (wd[w]) {
                    EXPECT_GE(oracle::lambda(oracle::blocks_of(codewords_of_weight(c, w)), n, t), 0);
                }
        }
    }
    EXPECT_GT(applicable, 10);
}

TEST(StrengthProfile, Examples) {
    const auto p = strength_profile(fixtures::type_one_16(), 3);
    EXPECT_EQ(p.per_weight, (std::map<int, int>{{4, 1}, {6, 2}, {8, 1}, {10, 2}, {12, 1}}));
    EXPECT_EQ(p.delta, 1);
    EXPECT_EQ(p.s, 2);

    // Pairs inside one d4 block never meet the other half.
    const auto d4 = strength_profile(catalog::builtin("d4+d4"), 2);
    EXPECT_EQ(d4.delta, 1);
    EXPECT_EQ(d4.s, 1);

    const auto e = strength_profile(catalog::builtin("e8+e8"), 3);
    EXPECT_EQ(e.delta, e.s);
    EXPECT_EQ(to_json(p)["per_weight"]["6"], 2);
    EXPECT_THROW(strength_profile(catalog::builtin("e8"), -1), InputError);
}

TEST(SupportOneDesigns, Codes) {
    for (const char* name : {"d4+d4", "i2+i2+i2+i2"}) {
        const auto r = verify_support_one_designs(catalog::builtin(name));
        EXPECT_TRUE(r.pass) << name;
        EXPECT_TRUE(r.witnesses["routes_agree"].get<bool>()) << name;
    }
    const auto t1 = verify_support_one_designs(fixtures::type_one_16());
    EXPECT_TRUE(t1.pass);
    EXPECT_EQ(t1.witnesses["branch"], "type_one");
    for (auto [w, lambda] : {std::pair{4, 3}, {6, 24}, {8, 51}, {10, 40}, {12, 9}})
        EXPECT_EQ(t1.witnesses["counting"]["weights"][std::to_string(w)]["lambda"], std::to_string(lambda));
    // Independent check of the weight-6 count: 64 blocks of size 6 over 16 points.
    EXPECT_EQ(oracle::lambda(oracle::blocks_of(c6().blocks()), 16, 1), 24);

    const auto f = verify_support_one_designs(fixtures::even_fsd_16());
    EXPECT_TRUE(f.pass);
    EXPECT_EQ(f.witnesses["branch"], "union_with_dual");
}

TEST(SupportOneDesigns, Preconditions) {
    EXPECT_THROW(verify_support_one_designs(catalog::builtin("d4")), PreconditionError);
    EXPECT_THROW(verify_support_one_designs(catalog::builtin("e8")), PreconditionError);
    EXPECT_THROW(verify_support_one_designs(BinaryCode::zero(8)), PreconditionError);
}

TEST(TypeOneSixteen, Passes) {
    const auto r = verify_type_one_16(fixtures::type_one_16());
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.witnesses["c6_blocks"], "64");
    EXPECT_EQ(r.witnesses["counting"]["lambda"], "8");
    EXPECT_EQ(r.witnesses["gap_weights"], Json::array({6, 10}));
    EXPECT_TRUE(r.witnesses["harmonic"]["pass"].get<bool>());
    EXPECT_THROW(verify_type_one_16(catalog::builtin("e8+e8")), PreconditionError);
    EXPECT_THROW(verify_type_one_16(catalog::builtin("e8")), PreconditionError);
}

TEST(FsdUnions, Passes) {
    const auto r = verify_fsd_union_two_designs(fixtures::even_fsd_16());
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.witnesses["self_dual"].get<bool>());
    // Cross-check the unions with the naive counter.
    const BinaryCode& c = fixtures::even_fsd_16();
    for (int w : {6, 10}) {
        auto blocks = codewords_of_weight(c, w);
        auto more = codewords_of_weight(dual(c), w);
        blocks.insert(blocks.end(), more.begin(), more.end());
        EXPECT_EQ(r.witnesses["union_" + std::to_string(w)]["lambda"],
                  std::to_string(oracle::lambda(oracle::blocks_of(blocks), 16, 2)));
    }
    EXPECT_TRUE(verify_fsd_union_two_designs(fixtures::type_one_16()).pass);
}

TEST(FsdUnions, Preconditions) {
    EXPECT_THROW(verify_fsd_union_two_designs(catalog::builtin("e8+e8+e8")), PreconditionError);
    EXPECT_THROW(verify_fsd_union_two_designs(BinaryCode::zero(64)), GuardError);
    EXPECT_THROW(verify_fsd_union_two_designs(catalog::builtin("d4+d4+d4+d4")), PreconditionError);
}

TEST(DesignPipeline, RecoversTheCode) {
    const auto r = verify_design_pipeline(c6());
    EXPECT_TRUE(r.pass);
    ASSERT_EQ(r.witnesses["steps"].size(), 6u);
    for (const auto& s : r.witnesses["steps"]) EXPECT_TRUE(s["pass"].get<bool>()) << s["step"];
    EXPECT_EQ(r.witnesses["steps"][2]["step"], "dual_minimum_distance");
    EXPECT_EQ(r.witnesses["steps"][2]["pairs_met_once"], "32");
    EXPECT_EQ(r.witnesses["steps"][3]["codeword_lower_bound"], "130");
    EXPECT_FALSE(r.witnesses.contains("failed_step"));
}

TEST(DesignPipeline, Preconditions) {
    const Design broken = catalog::search_non_self_orthogonal_2_design(c6(), {0, 1000});
    EXPECT_THROW(verify_design_pipeline(broken), PreconditionError);
    EXPECT_THROW(verify_design_pipeline(c6().without_block(3)), PreconditionError);
    EXPECT_THROW(verify_design_pipeline(support_design(fixtures::type_one_16(), 4)), PreconditionError);
}

TEST(DoublyEvenSubcode, PinnedValues) {
    const auto r = verify_doubly_even_subcode(fixtures::type_one_16());
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.witnesses["subcode"]["k"], 7);
    EXPECT_EQ(r.witnesses["subcode"]["strengths"], (Json{{"4", 1}, {"8", 1}, {"12", 1}}));
    const auto& sd = r.witnesses["subcode_dual"];
    EXPECT_EQ(sd["k"], 9);
    EXPECT_EQ(sd["minimum_distance"], 4);
    EXPECT_EQ(sd["distribution"],
              (Json{{"0", "1"}, {"4", "44"}, {"6", "64"}, {"8", "294"}, {"10", "64"}, {"12", "44"}, {"16", "1"}}));
    EXPECT_EQ(sd["strengths"], (Json{{"4", 1}, {"6", 2}, {"8", 1}, {"10", 2}, {"12", 1}}));

    // Naive recount of the subcode and its dual.
    std::vector<Word> c0;
    for (Word w : oracle::codewords(fixtures::type_one_16()))
        if (oracle::popcount(w) % 4 == 0) c0.push_back(w);
    EXPECT_EQ(c0.size(), 128u);
    const auto perp = oracle::orthogonal_complement(c0, 16);
    EXPECT_EQ(perp.size(), 512u);
    const auto counts = oracle::weight_counts(perp, 16);
    EXPECT_EQ(counts[6], 64u);
    EXPECT_EQ(counts[8], 294u);
    EXPECT_THROW(verify_doubly_even_subcode(catalog::builtin("e8+e8")), PreconditionError);
}

TEST(Report, JsonRoundTrip) {
    const auto r = verify_type_one_16(fixtures::type_one_16());
    const auto back = VerificationReport::from_json(Json::parse(r.to_json().dump()));
    EXPECT_EQ(back, r);
    EXPECT_EQ(r.to_json()["verdict"], "pass");
    EXPECT_TRUE(r.to_json()["timings"].contains("total_ms"));
    EXPECT_THROW(VerificationReport::from_json(Json{{"scenario", "x"}}), InputError);
    EXPECT_THROW(VerificationReport::from_json(Json{{"scenario", "x"}, {"verdict", "maybe"}, {"witnesses", {}}}),
                 InputError);
}

TEST(Report, IndependentOfWorkerCount) {
    set_worker_count(1);
    const auto a = verify_type_one_16(fixtures::type_one_16());
    const auto a2 = verify_fsd_union_two_designs(fixtures::even_fsd_16());
    set_worker_count(4);
    const auto b = verify_type_one_16(fixtures::type_one_16());
    const auto b2 = verify_fsd_union_two_designs(fixtures::even_fsd_16());
    set_worker_count(0);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a2, b2);
}

TEST(TDesignReport, DeletedBlocksFailWithAWitness) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Word> blocks = c6().blocks();
        std::shuffle(blocks.begin(), blocks.end(), rng);
        blocks.resize(blocks.size() - 5);
        const auto r = verify_t_design(Design(16, 6, blocks), 2, 8);
        ASSERT_FALSE(r.pass);
        const auto& counting = r.witnesses["counting"];
        ASSERT_FALSE(counting["design"].get<bool>());
        // The reported counts match a direct recount and differ.
        const long first = count_containing(blocks, counting["witness"][0]);
        const long second = count_containing(blocks, counting["witness"][1]);
        EXPECT_EQ(counting["witness_counts"][0], std::to_string(first));
        EXPECT_EQ(counting["witness_counts"][1], std::to_string(second));
        EXPECT_NE(first, second);
    }
}

TEST(TDesignReport, LambdaMismatchFails) {
    EXPECT_TRUE(verify_t_design(c6(), 2, 8).pass);
    EXPECT_FALSE(verify_t_design(c6(), 2, 9).pass);
    EXPECT_TRUE(verify_t_design(c6(), 2).pass);
    EXPECT_FALSE(verify_t_design(c6(), 3).pass);
}
