#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amdesign/error.hpp"

namespace amdesign {

/// A length-n binary vector packed into one machine word.
/// Bit i holds coordinate i+1, which is the (i+1)-th character in the
/// generator-matrix text format.
using Word = std::uint64_t;

inline constexpr int kMaxLength = 64;
/// Codes of dimension above this are not enumerated.
inline constexpr int kEnumerationGuard = 28;

inline int weight(Word w) { return std::popcount(w); }
inline int inner_product(Word a, Word b) { return std::popcount(a & b) & 1; }
inline Word full_mask(int n) { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }

std::string to_bitstring(Word w, int n);
Word parse_bitstring(std::string_view text);

/// A binary linear code held as its reduced row-echelon basis. Two values
/// spanning the same subspace compare equal.
class BinaryCode {
public:
    /// Canonical basis of span(rows). Rows must fit in `n` bits.
    static BinaryCode from_rows(std::span<const Word> rows, int n);
    static BinaryCode zero(int n);
    static BinaryCode whole_space(int n);

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    std::span<const Word> basis() const { return rows_; }
    /// Pivot coordinate (0-based) of each basis row, ascending.
    std::vector<int> pivots() const;

    /// Reduces `w` against the basis; the result is zero iff w is a codeword.
    Word reduce(Word w) const;
    bool contains(Word w) const { return reduce(w) == 0; }

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

private:
    BinaryCode(int n, std::vector<Word> rows) : n_(n), rows_(std::move(rows)) {}

    int n_ = 0;
    std::vector<Word> rows_;
};

/// Counts A_w for w = 0..n.
struct WeightDistribution {
    int n = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t operator[](int w) const { return counts.at(static_cast<std::size_t>(w)); }
    std::uint64_t total() const;
    /// Smallest w > 0 with A_w != 0, or -1 when there is none.
    int minimum_nonzero_weight() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

enum class Extremality { extremal, near_extremal, neither, not_applicable };

std::string_view to_string(Extremality e);

struct CodeClass {
    bool even = false;
    bool doubly_even = false;
    bool self_orthogonal = false;
    bool self_dual = false;
    bool formally_self_dual = false;
    bool type_one = false;
    bool type_two = false;
    Extremality extremality = Extremality::not_applicable;
};

BinaryCode dual(const BinaryCode& c);

void check_enumeration_guard(const BinaryCode& c);

/// Visits the codewords with Gray-code indices in [begin, end). Each step
/// after the first is a single basis-row XOR.
template <class Visitor>
void enumerate_codewords(const BinaryCode& c, std::uint64_t begin, std::uint64_t end,
                         Visitor&& visit) {
    if (begin >= end) return;
    const auto rows = c.basis();
    Word w = 0;
    const std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
        if ((gray >> j) & 1u) w ^= rows[j];
    visit(w);
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        visit(w);
    }
}

/// Number of codewords, 2^k. Throws GuardError above the enumeration guard.
std::uint64_t codeword_count(const BinaryCode& c);

WeightDistribution weight_distribution(const BinaryCode& c);
int minimum_distance(const BinaryCode& c);
CodeClass classify(const BinaryCode& c);
Extremality mallows_sloane(int n, int d);
BinaryCode doubly_even_subcode(const BinaryCode& c);
/// All codewords of weight w in ascending numeric order.
std::vector<Word> codewords_of_weight(const BinaryCode& c, int w);

// Generator-matrix text format: one row of '0'/'1' per line, '#' comments
// and blank lines ignored.
BinaryCode parse_generator_matrix(std::istream& in);
BinaryCode read_generator_matrix(const std::string& path);
std::string format_generator_matrix(const BinaryCode& c);
void write_generator_matrix(const std::string& path, const BinaryCode& c);

}  // namespace amdesign
