#include "amdesign/harmonic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "amdesign/parallel.hpp"
#include "amdesign/subsets.hpp"

namespace amdesign {

const Rational& SubsetFunction::at(Word subset) const {
    return values.at(static_cast<std::size_t>(colex_rank(subset)));
}

SubsetFunction gamma(const SubsetFunction& f) {
    if (f.k < 1) throw InputError("gamma is defined for degree k >= 1");
    SubsetFunction out{f.n, f.k - 1, std::vector<Rational>(static_cast<std::size_t>(binomial_u64(f.n, f.k - 1)))};
    const auto subsets = all_subsets(f.n, f.k);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        const Rational& v = f.values[j];
        if (sgn(v) == 0) continue;
        for (Word rest = subsets[j]; rest; rest &= rest - 1) {
            const Word y = subsets[j] & ~(rest & -rest);
            out.values[static_cast<std::size_t>(colex_rank(y))] += v;
        }
    }
    return out;
}

HarmonicFunction HarmonicFunction::from_values(int n, int k, std::vector<Rational> values) {
    if (n < 0 || n > kMaxLength || k < 0 || k > n) throw InputError("harmonic function parameters out of range");
    if (values.size() != binomial_u64(n, k)) throw InputError("harmonic function needs C(n,k) values");
    SubsetFunction f{n, k, std::move(values)};
    if (k > 0) {
        for (const auto& v : gamma(f).values)
            if (sgn(v) != 0) throw InputError("function is not harmonic: gamma(f) != 0");
    }
    return HarmonicFunction(std::move(f));
}

HarmonicFunction HarmonicFunction::operator+(const HarmonicFunction& o) const {
    if (o.n() != n() || o.degree() != degree()) throw InputError("harmonic functions of different shape");
    SubsetFunction r = f_;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += o.f_.values[i];
    return HarmonicFunction(std::move(r));
}

HarmonicFunction HarmonicFunction::operator*(const Rational& s) const {
    SubsetFunction r = f_;
    for (auto& v : r.values) v *= s;
    return HarmonicFunction(std::move(r));
}

namespace {

std::vector<HarmonicFunction> compute_harm_basis(int n, int k) {
    const std::uint64_t cols = binomial_u64(n, k);
    if (k == 0) return {HarmonicFunction::from_values(n, 0, {Rational(1)})};
    const std::uint64_t rows = binomial_u64(n, k - 1);
    if (cols > kHarmonicSubsetGuard)
        throw GuardError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(cols) +
                         " exceeds the harmonic subset guard");
    if (rows * cols > kHarmonicMatrixGuard)
        throw GuardError("gamma matrix of size " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds the elimination guard");

    const auto col_sets = all_subsets(n, k);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t j = 0; j < col_sets.size(); ++j)
        for (Word rest = col_sets[j]; rest; rest &= rest - 1)
            a[colex_rank(col_sets[j] & ~(rest & -rest))][j] = 1;

    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sgn(a[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        if (a[rank][col] != 1) {
            const Rational inv = 1 / a[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                if (sgn(a[rank][c]) != 0) a[rank][c] *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(a[r][col]) == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (sgn(a[rank][c]) != 0) a[r][c] -= factor * a[rank][c];
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }

    std::vector<HarmonicFunction> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free];
        basis.push_back(HarmonicFunction::from_values(n, k, std::move(v)));
    }
    return basis;
}

}  // namespace

const std::vector<HarmonicFunction>& harm_basis(int n, int k) {
    if (n < 1 || n > kMaxLength || k < 0 || k > n) throw InputError("harm_basis parameters out of range");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<HarmonicFunction>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::make_unique<const std::vector<HarmonicFunction>>(compute_harm_basis(n, k));
    return *slot;
}

Rational tilde_eval(const SubsetFunction& f, Word u) {
    const int m = weight(u);
    if (m < f.k) return 0;
    if (f.k == 0) return f.values.at(0);
    int elems[kMaxLength];
    int count = 0;
    for (Word rest = u; rest; rest &= rest - 1) elems[count++] = std::countr_zero(rest);
    Rational sum = 0;
    const Word last = full_mask(m) & ~full_mask(m - f.k);
    for (Word s = full_mask(f.k);; s = next_same_weight(s)) {
        Word z = 0;
        for (Word rest = s; rest; rest &= rest - 1) z |= Word{1} << elems[std::countr_zero(rest)];
        sum += f.values[static_cast<std::size_t>(colex_rank(z))];
        if (s == last) break;
    }
    return sum;
}

Rational tilde_eval(const HarmonicFunction& f, Word u) { return tilde_eval(f.function(), u); }

HomPoly harmonic_weight_enumerator(const BinaryCode& c, const HarmonicFunction& f) {
    if (f.n() != c.length()) throw InputError("harmonic function ground set does not match the code length");
    const std::uint64_t total = codeword_count(c);
    const auto n = static_cast<std::size_t>(c.length());
    std::vector<std::vector<Rational>> partial(chunk_count(total), std::vector<Rational>(n + 1));
    parallel_chunks(total, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        auto& acc = partial[chunk];
        enumerate_codewords(c, begin, end, [&](Word w) {
            acc[static_cast<std::size_t>(weight(w))] += tilde_eval(f, w);
        });
    });
    HomPoly p(c.length());
    for (const auto& acc : partial)
        for (std::size_t w = 0; w <= n; ++w) p.coeff(static_cast<int>(w)) += acc[w];
    return p;
}

HomPoly zcf(const BinaryCode& c, const HarmonicFunction& f) {
    return harmonic_weight_enumerator(c, f).divide_xy_power(f.degree());
}

HomPoly bachoc_transform(const HomPoly& z, int k, const Integer& code_size, int n) {
    if (k < 0 || 2 * k > n) throw InputError("harmonic degree out of range for length n");
    if (z.degree() != n - 2 * k)
        throw InputError("Z polynomial has degree " + std::to_string(z.degree()) + ", expected n - 2k = " +
                         std::to_string(n - 2 * k));
    if (sgn(code_size) <= 0) throw InputError("code size must be positive");
    Rational scale(1);
    mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
    scale /= Rational(code_size);
    if (k % 2 != 0) scale = -scale;
    return scale * z.hadamard();
}

std::optional<DelsarteFailure> delsarte_failure(std::span<const Word> blocks, int n, int t) {
    if (blocks.empty()) return std::nullopt;
    const int m = weight(blocks.front());
    for (Word b : blocks) {
        if (weight(b) != m) throw InputError("blocks of mixed sizes");
        if (b & ~full_mask(n)) throw InputError("block contains a point outside 1..n");
    }
    if (t > m) throw InputError("t exceeds the block size");
    for (int k = 1; k <= t; ++k) {
        const auto& basis = harm_basis(n, k);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Rational sum = 0;
            for (Word b : blocks) sum += tilde_eval(basis[i], b);
            if (sgn(sum) != 0) return DelsarteFailure{k, i, sum};
        }
    }
    return std::nullopt;
}

bool delsarte_design_check(std::span<const Word> blocks, int n, int t) {
    return !delsarte_failure(blocks, n, t).has_value();
}

}  // namespace amdesign
