#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Word type and exact rationals, and favour obviousness
// over speed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "amdesign/catalog.hpp"
#include "amdesign/gf2.hpp"

namespace oracle {

using amdesign::Word;
using Points = std::vector<int>;

inline long choose(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<long>> pascal(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        pascal[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
    }
    return pascal[n][k];
}

inline int popcount(Word w) {
    int c = 0;
    for (; w; w >>= 1) c += static_cast<int>(w & 1);
    return c;
}

/// Every XOR of a subset of `rows`, deduplicated and sorted.
inline std::vector<Word> span(const std::vector<Word>& rows) {
    std::set<Word> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows.size()); ++mask) {
        Word w = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((mask >> i) & 1) w ^= rows[i];
        out.insert(w);
    }
    return {out.begin(), out.end()};
}

inline std::vector<Word> codewords(const amdesign::BinaryCode& c) {
    return span(std::vector<Word>(c.basis().begin(), c.basis().end()));
}

/// All vectors of F_2^n orthogonal to every word in `words` (n <= 20).
inline std::vector<Word> orthogonal_complement(const std::vector<Word>& words, int n) {
    std::vector<Word> out;
    for (Word v = 0; v < (Word{1} << n); ++v)
        if (std::all_of(words.begin(), words.end(), [&](Word w) { return popcount(v & w) % 2 == 0; }))
            out.push_back(v);
    return out;
}

inline std::vector<std::uint64_t> weight_counts(const std::vector<Word>& words, int n) {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    for (Word w : words) ++a[static_cast<std::size_t>(popcount(w))];
    return a;
}

/// Dual distribution through Krawtchouk polynomials:
/// A'_j = (1/|C|) sum_i A_i K_j(i), K_j(i) = sum_s (-1)^s C(i,s) C(n-i,j-s).
inline std::vector<mpz_class> krawtchouk_dual(const std::vector<std::uint64_t>& a, int n) {
    mpz_class size = 0;
    for (auto x : a) size += x;
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        mpz_class sum = 0;
        for (int i = 0; i <= n; ++i) {
            mpz_class k = 0;
            for (int s = 0; s <= j; ++s) {
                const mpz_class term = mpz_class(choose(i, s)) * choose(n - i, j - s);
                k += (s % 2 ? -term : term);
            }
            sum += mpz_class(static_cast<unsigned long>(a[static_cast<std::size_t>(i)])) * k;
        }
        out[static_cast<std::size_t>(j)] = sum / size;
    }
    return out;
}

inline Points points_of(Word w) {
    Points p;
    for (int i = 0; i < 64; ++i)
        if ((w >> i) & 1) p.push_back(i + 1);
    return p;
}

inline void subsets_rec(int v, int t, int start, Points& cur, std::vector<Points>& out) {
    if (static_cast<int>(cur.size()) == t) {
        out.push_back(cur);
        return;
    }
    for (int p = start; p <= v; ++p) {
        cur.push_back(p);
        subsets_rec(v, t, p + 1, cur, out);
        cur.pop_back();
    }
}

/// All t-subsets of {1..v} as sorted point lists, lexicographic.
inline std::vector<Points> subsets(int v, int t) {
    std::vector<Points> out;
    Points cur;
    subsets_rec(v, t, 1, cur, out);
    return out;
}

/// Blocks-as-point-lists t-design check: the common count, or -1.
inline long lambda(const std::vector<Points>& blocks, int v, int t) {
    long common = -1;
    for (const auto& s : subsets(v, t)) {
        long count = 0;
        for (const auto& b : blocks)
            if (std::includes(b.begin(), b.end(), s.begin(), s.end())) ++count;
        if (common == -1)
            common = count;
        else if (common != count)
            return -1;
    }
    return common;
}

inline std::vector<Points> blocks_of(const std::vector<Word>& words) {
    std::vector<Points> out;
    for (Word w : words) out.push_back(points_of(w));
    return out;
}

/// Coefficient of u^i in (1+u)^2 (1-u)^alpha, i.e. of x^(2alpha+4-2i) y^(2i)
/// in (x^2+y^2)^2 (x^2-y^2)^alpha.
inline long product_coefficient(int alpha, int i) {
    long c = 0;
    for (int j = 0; j <= 2; ++j) {
        const long term = choose(2, j) * choose(alpha, i - j);
        c += ((i - j) % 2 ? -term : term);
    }
    return c;
}

inline amdesign::BinaryCode random_code(std::mt19937_64& rng, int n, int rows) {
    std::vector<Word> r(static_cast<std::size_t>(rows));
    for (auto& w : r) w = rng() & amdesign::full_mask(n);
    return amdesign::BinaryCode::from_rows(r, n);
}

}  // namespace oracle

namespace fixtures {

/// The pinned codes of the repository's data directory.
inline const amdesign::BinaryCode& type_one_16() {
    static const amdesign::BinaryCode c = [] {
        auto db = amdesign::catalog::CodeDatabase::open_default();
        return amdesign::catalog::load_type_i_16(db);
    }();
    return c;
}

inline const amdesign::BinaryCode& even_fsd_16() {
    static const amdesign::BinaryCode c = [] {
        auto db = amdesign::catalog::CodeDatabase::open_default();
        return amdesign::catalog::load_even_fsd_16(db);
    }();
    return c;
}

}  // namespace fixtures
