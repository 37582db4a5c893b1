#pragma once

#include <cstdint>
#include <vector>

#include "amdesign/gf2.hpp"

namespace amdesign {

// k-subsets of {0..n-1} are Words with k bits set. Colexicographic order on
// subsets is numeric order on their masks, so ranks come from the
// combinatorial number system: rank(S) = sum_i C(s_i, i+1) for s_0 < s_1 < ...

std::uint64_t colex_rank(Word subset);
Word colex_unrank(std::uint64_t rank, int k);

/// Next mask with the same popcount (Gosper). Undefined for subset == 0.
inline Word next_same_weight(Word subset) {
    const Word low = subset & -subset;
    const Word ripple = subset + low;
    return ripple | (((subset ^ ripple) >> 2) / low);
}

/// All k-subsets of {0..n-1} in colex order.
std::vector<Word> all_subsets(int n, int k);

/// Sorted 1-based point labels of a mask.
std::vector<int> to_points(Word subset);
Word from_points(const std::vector<int>& one_based, int v);

}  // namespace amdesign
