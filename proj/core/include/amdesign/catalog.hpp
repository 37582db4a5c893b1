#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "amdesign/designs.hpp"
#include "amdesign/gf2.hpp"

namespace amdesign::catalog {

struct SearchConfig {
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 1'000'000;
};

struct SearchResult {
    BinaryCode code;
    std::uint64_t iterations = 0;
};

/// "i2", "d4", "e8", or a '+'-joined direct sum of those, e.g. "d4+d4".
BinaryCode builtin(const std::string& name);
BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b);

/// Self-dual [16,8,4] code that is not doubly even, searched over generator
/// matrices [I | A] with A A^T = I. Throws GuardError when the budget runs out.
SearchResult search_type_i_16(const SearchConfig& cfg);

/// Even [n, n/2, d] code with the same weight distribution as its dual but
/// different from it. Throws GuardError when the budget runs out.
SearchResult search_even_fsd(int n, int d, const SearchConfig& cfg);

/// Minimal 2-trade: for disjoint pairs {a_i, b_i} (i = 1..3) and a set S of
/// k-3 points, the blocks S + {x_1, x_2, x_3} with x_i in {a_i, b_i} split by
/// the parity of the number of b's. Both halves cover every pair equally often.
struct Trade {
    std::vector<Word> removed;
    std::vector<Word> added;
};

/// All trades whose even half lies in `d` and whose odd half avoids it, so
/// that switching keeps the design simple. Sorted, without duplicates.
std::vector<Trade> find_trades(const Design& d);
Design apply_trade(const Design& d, const Trade& t);

/// A simple 2-design with the parameters of `start` in which some two blocks
/// meet in an odd number of points, reached by seeded random trade switches
/// from `start`; re-validated by exact counting.
Design search_non_self_orthogonal_2_design(const Design& start, const SearchConfig& cfg);

/// A directory of generator-matrix files plus index.json recording where each
/// code came from.
class CodeDatabase {
public:
    explicit CodeDatabase(std::filesystem::path dir);
    /// $AMDESIGN_DATA if set, else the data/codes directory of the source tree.
    static CodeDatabase open_default();

    const std::filesystem::path& directory() const { return dir_; }
    bool contains(const std::string& name) const;
    BinaryCode load(const std::string& name) const;
    std::optional<nlohmann::json> provenance(const std::string& name) const;
    void store(const std::string& name, const BinaryCode& code, const nlohmann::json& provenance);

private:
    nlohmann::json read_index() const;

    std::filesystem::path dir_;
};

/// Loads the pinned code named `name`, deriving and storing it on first use.
BinaryCode load_type_i_16(CodeDatabase& db, const SearchConfig& cfg = {});
BinaryCode load_even_fsd_16(CodeDatabase& db, const SearchConfig& cfg = {});

}  // namespace amdesign::catalog
