#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "amdesign/gf2.hpp"
#include "amdesign/rational.hpp"

namespace amdesign {

/// Incidence structure on points {1..v}: a multiset of k-subsets.
/// Repeated blocks are kept.
class Design {
public:
    Design(int v, int k, std::vector<Word> blocks);

    int points() const { return v_; }
    int block_size() const { return k_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<Word>& blocks() const { return blocks_; }

    /// Sorted copy of the blocks, for multiset comparison.
    std::vector<Word> sorted_blocks() const;
    bool same_blocks(const Design& o) const;
    Design without_block(std::size_t index) const;

private:
    int v_;
    int k_;
    std::vector<Word> blocks_;
};

/// Outcome of counting every t-subset's block occurrences.
struct TDesignCheck {
    std::optional<std::uint64_t> lambda;
    /// On failure: two t-subsets with different counts (the first t-subset in
    /// colex order and the first one that disagrees with it).
    std::optional<std::pair<Word, Word>> witness;
    std::pair<std::uint64_t, std::uint64_t> witness_counts{};
};

struct IntersectionProfile {
    /// counts[i] = number of other blocks meeting the reference block in i points.
    std::vector<std::uint64_t> counts;
};

Design support_design(const BinaryCode& c, int w);
Design design_union(const Design& a, const Design& b);
TDesignCheck check_t_design(const Design& d, int t);
std::optional<std::uint64_t> is_t_design(const Design& d, int t);
int design_strength(const Design& d, int t_max);
Design complement_design(const Design& d);
/// lambda * C(v-i, t-i) / C(k-i, t-i)
Rational lambda_i(int t, int v, int k, const Rational& lambda, int i);
IntersectionProfile intersection_profile(const Design& d, std::size_t block_index);
bool is_self_orthogonal_design(const Design& d);
/// First pair of block indices whose intersection parity differs from k.
std::optional<std::pair<std::size_t, std::size_t>> self_orthogonality_violation(const Design& d);
BinaryCode code_from_design(const Design& d);

struct MendelsohnSystem {
    int t = 0;
    int v = 0;
    int k = 0;
    Rational lambda;
    int m = 0;
    std::vector<int> allowed;
    std::map<int, std::int64_t> fixed;
};

struct MendelsohnResult {
    std::vector<int> unknowns;  // intersection sizes i, ascending
    std::vector<std::vector<std::int64_t>> solutions;  // n_i in the order of `unknowns`
    std::vector<Rational> lambdas;  // lambda_j, j = 0..t
};

/// Default cap on the number of free-variable assignments tried.
inline constexpr std::uint64_t kMendelsohnEnumerationCap = 50'000'000;

/// All nonnegative integer n_i (i in allowed) with
/// sum_i C(i,j) n_i = lambda_j C(m,j) for j = 0..t, each n_i <= lambda_0.
MendelsohnResult mendelsohn_solve(const MendelsohnSystem& sys,
                                  std::uint64_t enumeration_cap = kMendelsohnEnumerationCap);

// JSON design format: {"v": int, "blocks": [[sorted 1-based ints], ...]}.
Design design_from_json(const nlohmann::json& j);
nlohmann::json design_to_json(const Design& d);
Design read_design(const std::string& path);
void write_design(const std::string& path, const Design& d);

}  // namespace amdesign
