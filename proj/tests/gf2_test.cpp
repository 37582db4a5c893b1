#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "amdesign/catalog.hpp"
#include "amdesign/gf2.hpp"
#include "amdesign/parallel.hpp"
#include "oracles.hpp"

using namespace amdesign;

namespace {

BinaryCode code(std::initializer_list<const char*> rows) {
    std::vector<Word> r;
    int n = 0;
    for (const char* s : rows) {
        r.push_back(parse_bitstring(s));
        n = static_cast<int>(std::string_view(s).size());
    }
    return BinaryCode::from_rows(r, n);
}

std::vector<std::uint64_t> dist(std::initializer_list<std::pair<int, std::uint64_t>> entries, int n) {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    for (auto [w, c] : entries) a[static_cast<std::size_t>(w)] = c;
    return a;
}

}  // namespace

TEST(Bitstring, RoundTripUsesLeftmostCharacterAsFirstCoordinate) {
    const Word w = parse_bitstring("1100");
    EXPECT_EQ(w, Word{0b0011});
    EXPECT_EQ(to_bitstring(w, 4), "1100");
    EXPECT_THROW(parse_bitstring("10x1"), InputError);
    EXPECT_THROW(parse_bitstring(""), InputError);
}

TEST(CodeFromRows, AlreadyReducedBasisIsKept) {
    const BinaryCode c = code({"1100", "0011"});
    EXPECT_EQ(c.dimension(), 2);
    ASSERT_EQ(c.basis().size(), 2u);
    EXPECT_EQ(to_bitstring(c.basis()[0], 4), "1100");
    EXPECT_EQ(to_bitstring(c.basis()[1], 4), "0011");
}

TEST(CodeFromRows, DependentRowIsDropped) {
    const BinaryCode c = code({"1111", "1100", "0011"});
    EXPECT_EQ(c.dimension(), 2);
    EXPECT_EQ(c, code({"1100", "0011"}));
}

TEST(CodeFromRows, WeightSixSupportsGenerateTheTypeOneCode) {
    const auto& c = fixtures::type_one_16();
    const auto six = codewords_of_weight(c, 6);
    ASSERT_EQ(six.size(), 64u);
    const BinaryCode g = BinaryCode::from_rows(six, 16);
    EXPECT_EQ(g.dimension(), 8);
    EXPECT_EQ(g, c);
}

TEST(CodeFromRows, RejectsBadInput) {
    const std::vector<Word> rows{Word{0b10000}};
    EXPECT_THROW(BinaryCode::from_rows(rows, 4), InputError);
    EXPECT_THROW(BinaryCode::from_rows({}, 0), InputError);
    std::istringstream ragged("1100\n011\n");
    EXPECT_THROW(parse_generator_matrix(ragged), InputError);
}

TEST(Dual, Examples) {
    const BinaryCode d4 = catalog::builtin("d4");
    EXPECT_EQ(dual(d4), d4);
    EXPECT_EQ(dual(BinaryCode::whole_space(6)), BinaryCode::zero(6));
    EXPECT_EQ(dual(fixtures::type_one_16()), fixtures::type_one_16());
}

TEST(Dual, MatchesBruteForceComplement) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const BinaryCode c = oracle::random_code(rng, n, 1 + static_cast<int>(rng() % n));
        const auto expected = oracle::orthogonal_complement(oracle::codewords(c), n);
        EXPECT_EQ(oracle::codewords(dual(c)), expected) << "n=" << n;
    }
}

TEST(WeightDistribution, Examples) {
    EXPECT_EQ(weight_distribution(BinaryCode::zero(8)).counts, dist({{0, 1}}, 8));
    EXPECT_EQ(weight_distribution(catalog::builtin("e8")).counts, dist({{0, 1}, {4, 14}, {8, 1}}, 8));
    EXPECT_EQ(weight_distribution(fixtures::type_one_16()).counts,
              dist({{0, 1}, {4, 12}, {6, 64}, {8, 102}, {10, 64}, {12, 12}, {16, 1}}, 16));
}

TEST(WeightDistribution, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const BinaryCode c = oracle::random_code(rng, n, 1 + static_cast<int>(rng() % std::min(n, 12)));
        const auto wd = weight_distribution(c);
        EXPECT_EQ(wd.counts, oracle::weight_counts(oracle::codewords(c), n));
        EXPECT_EQ(wd.total(), std::uint64_t{1} << c.dimension());
        EXPECT_EQ(wd[0], 1u);
    }
}

TEST(WeightDistribution, IndependentOfWorkerCount) {
    std::mt19937_64 rng(3);
    const BinaryCode c = oracle::random_code(rng, 40, 20);
    set_worker_count(1);
    const auto one = weight_distribution(c);
    set_worker_count(4);
    const auto four = weight_distribution(c);
    set_worker_count(0);
    EXPECT_EQ(one, four);
}

TEST(WeightDistribution, GuardTripsAboveTwentyEight) {
    std::vector<Word> rows;
    for (int i = 0; i < 29; ++i) rows.push_back(Word{1} << i);
    const BinaryCode big = BinaryCode::from_rows(rows, 30);
    EXPECT_THROW(weight_distribution(big), GuardError);
    EXPECT_THROW(codewords_of_weight(big, 2), GuardError);
}

TEST(MinimumDistance, Examples) {
    EXPECT_EQ(minimum_distance(catalog::builtin("d4")), 2);
    EXPECT_EQ(minimum_distance(catalog::builtin("e8")), 4);
    EXPECT_EQ(minimum_distance(fixtures::type_one_16()), 4);
    EXPECT_THROW(minimum_distance(BinaryCode::zero(5)), InputError);
}

TEST(Classify, E8IsTypeTwo) {
    const auto cls = classify(catalog::builtin("e8"));
    EXPECT_TRUE(cls.self_dual);
    EXPECT_TRUE(cls.doubly_even);
    EXPECT_TRUE(cls.type_two);
    EXPECT_FALSE(cls.type_one);
    EXPECT_EQ(cls.extremality, Extremality::extremal);
}

TEST(Classify, D4SumIsNearExtremalTypeOne) {
    const auto cls = classify(catalog::builtin("d4+d4"));
    EXPECT_TRUE(cls.self_dual);
    EXPECT_FALSE(cls.doubly_even);
    EXPECT_TRUE(cls.type_one);
    EXPECT_EQ(cls.extremality, Extremality::near_extremal);
}

TEST(Classify, PinnedSixteenIsNearExtremalTypeOne) {
    const auto cls = classify(fixtures::type_one_16());
    EXPECT_TRUE(cls.type_one);
    EXPECT_EQ(cls.extremality, Extremality::near_extremal);
}

TEST(Classify, ExtremalityOnlyForEvenFormallySelfDual) {
    // [3,1,3] repetition code: odd, not formally self-dual.
    EXPECT_EQ(classify(code({"111"})).extremality, Extremality::not_applicable);
    // Even but with dual of different size.
    EXPECT_EQ(classify(code({"110000"})).extremality, Extremality::not_applicable);
}

TEST(Classify, FlagInvariantsHoldOnRandomCodes) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 13);
        const BinaryCode c = oracle::random_code(rng, n, 1 + static_cast<int>(rng() % n));
        const auto cls = classify(c);
        if (cls.type_one) {
            EXPECT_TRUE(cls.self_dual && !cls.doubly_even);
        }
        if (cls.type_two) {
            EXPECT_TRUE(cls.self_dual && cls.doubly_even);
        }
        if (cls.doubly_even) {
            EXPECT_TRUE(cls.even);
        }
        if (cls.self_dual) {
            EXPECT_TRUE(cls.self_orthogonal && cls.formally_self_dual && cls.even);
        }
    }
}

TEST(MallowsSloane, Examples) {
    EXPECT_EQ(mallows_sloane(16, 4), Extremality::near_extremal);
    EXPECT_EQ(mallows_sloane(48, 12), Extremality::near_extremal);
    EXPECT_EQ(mallows_sloane(8, 2), Extremality::near_extremal);
    EXPECT_EQ(mallows_sloane(16, 6), Extremality::extremal);
    EXPECT_EQ(mallows_sloane(16, 2), Extremality::neither);
    EXPECT_THROW(mallows_sloane(16, 8), InputError);
    EXPECT_THROW(mallows_sloane(15, 4), InputError);
}

TEST(DoublyEvenSubcode, Examples) {
    const BinaryCode e8 = catalog::builtin("e8");
    EXPECT_EQ(doubly_even_subcode(e8), e8);
    EXPECT_EQ(doubly_even_subcode(catalog::builtin("d4")), code({"1111"}));

    const BinaryCode c0 = doubly_even_subcode(fixtures::type_one_16());
    EXPECT_EQ(c0.dimension(), 7);
    for (Word w : oracle::codewords(c0)) EXPECT_EQ(oracle::popcount(w) % 4, 0);
}

TEST(DoublyEvenSubcode, RejectsOddCodes) { EXPECT_THROW(doubly_even_subcode(code({"111"})), PreconditionError); }

TEST(CodewordsOfWeight, Examples) {
    EXPECT_EQ(codewords_of_weight(fixtures::type_one_16(), 6).size(), 64u);
    EXPECT_EQ(codewords_of_weight(catalog::builtin("e8"), 0), std::vector<Word>{0});
    const auto two = codewords_of_weight(catalog::builtin("d4+d4"), 2);
    std::vector<std::vector<int>> supports;
    for (Word w : two) supports.push_back(oracle::points_of(w));
    std::sort(supports.begin(), supports.end());
    EXPECT_EQ(supports, (std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
}

TEST(CodewordsOfWeight, MatchesNaiveFilter) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 12);
        const BinaryCode c = oracle::random_code(rng, n, 1 + static_cast<int>(rng() % n));
        const int w = static_cast<int>(rng() % (n + 1));
        std::vector<Word> expected;
        for (Word x : oracle::codewords(c))
            if (oracle::popcount(x) == w) expected.push_back(x);
        EXPECT_EQ(codewords_of_weight(c, w), expected);
    }
}

TEST(Properties, DualInvolutionAndDimensionLaw) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const BinaryCode c = oracle::random_code(rng, n, static_cast<int>(rng() % (n + 1)));
        const BinaryCode cd = dual(c);
        EXPECT_EQ(dual(cd), c);
        EXPECT_EQ(c.dimension() + cd.dimension(), n);
    }
}

TEST(Properties, CanonicalFormIgnoresTheGeneratingSet) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 20);
        const BinaryCode c = oracle::random_code(rng, n, 1 + static_cast<int>(rng() % 8));
        // Another generating set: random codewords plus the basis in reverse.
        auto words = oracle::codewords(c);
        std::vector<Word> gens(c.basis().rbegin(), c.basis().rend());
        for (int i = 0; i < 5; ++i) gens.push_back(words[rng() % words.size()]);
        std::shuffle(gens.begin(), gens.end(), rng);
        const BinaryCode again = BinaryCode::from_rows(gens, n);
        EXPECT_EQ(again, c);
        EXPECT_TRUE(std::equal(again.basis().begin(), again.basis().end(), c.basis().begin(), c.basis().end()));
    }
}

TEST(GeneratorMatrixFormat, RoundTripAndComments) {
    std::istringstream in("# header\n\n1000000000111110\n0100000001010100\n");
    const BinaryCode c = parse_generator_matrix(in);
    EXPECT_EQ(c.length(), 16);
    EXPECT_EQ(c.dimension(), 2);
    std::istringstream again(format_generator_matrix(c));
    EXPECT_EQ(parse_generator_matrix(again), c);

    std::istringstream zero(format_generator_matrix(BinaryCode::zero(5)));
    EXPECT_EQ(parse_generator_matrix(zero), BinaryCode::zero(5));
}
