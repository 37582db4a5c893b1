#include "amdesign/subsets.hpp"

#include "amdesign/rational.hpp"

namespace amdesign {

std::uint64_t colex_rank(Word subset) {
    std::uint64_t r = 0;
    int i = 1;
    while (subset) {
        const int s = std::countr_zero(subset);
        r += binomial_u64(s, i++);
        subset &= subset - 1;
    }
    return r;
}

Word colex_unrank(std::uint64_t rank, int k) {
    Word out = 0;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < kMaxLength && binomial_u64(c + 1, i) <= rank) ++c;
        out |= Word{1} << c;
        rank -= binomial_u64(c, i);
    }
    return out;
}

std::vector<Word> all_subsets(int n, int k) {
    if (k < 0 || k > n || n > kMaxLength) throw InputError("subset parameters out of range");
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(binomial_u64(n, k)));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const Word last = full_mask(n) & ~full_mask(n - k);
    for (Word s = full_mask(k);; s = next_same_weight(s)) {
        out.push_back(s);
        if (s == last) break;
    }
    return out;
}

std::vector<int> to_points(Word subset) {
    std::vector<int> pts;
    while (subset) {
        pts.push_back(std::countr_zero(subset) + 1);
        subset &= subset - 1;
    }
    return pts;
}

Word from_points(const std::vector<int>& one_based, int v) {
    Word w = 0;
    for (int p : one_based) {
        if (p < 1 || p > v) throw InputError("point label " + std::to_string(p) + " outside 1.." + std::to_string(v));
        const Word bit = Word{1} << (p - 1);
        if (w & bit) throw InputError("repeated point " + std::to_string(p) + " in a block");
        w |= bit;
    }
    return w;
}

}  // namespace amdesign
