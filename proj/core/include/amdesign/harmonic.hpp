#pragma once

#include <optional>
#include <span>
#include <vector>

#include "amdesign/gf2.hpp"
#include "amdesign/poly.hpp"
#include "amdesign/rational.hpp"

namespace amdesign {

/// Guard on the number of k-subsets a harmonic space may be built over.
inline constexpr std::uint64_t kHarmonicSubsetGuard = 20000;
/// Guard on the dense elimination matrix, rows * columns.
inline constexpr std::uint64_t kHarmonicMatrixGuard = 4'000'000;

/// A rational-valued function on the k-subsets of {1..n}, stored densely by
/// colex rank.
struct SubsetFunction {
    int n = 0;
    int k = 0;
    std::vector<Rational> values;

    const Rational& at(Word subset) const;
    friend bool operator==(const SubsetFunction&, const SubsetFunction&) = default;
};

/// (gamma f)(y) = sum of f(z) over k-subsets z containing the (k-1)-subset y.
SubsetFunction gamma(const SubsetFunction& f);

/// Element of Harm_k: a subset function annihilated by gamma.
class HarmonicFunction {
public:
    /// Throws InputError unless gamma(f) vanishes (k = 0 is always harmonic).
    static HarmonicFunction from_values(int n, int k, std::vector<Rational> values);

    int n() const { return f_.n; }
    int degree() const { return f_.k; }
    const SubsetFunction& function() const { return f_; }
    const std::vector<Rational>& values() const { return f_.values; }

    HarmonicFunction operator+(const HarmonicFunction& o) const;
    HarmonicFunction operator*(const Rational& s) const;

private:
    explicit HarmonicFunction(SubsetFunction f) : f_(std::move(f)) {}
    SubsetFunction f_;
};

/// Deterministic exact basis of Harm_k(n). Results are memoized per (n, k).
const std::vector<HarmonicFunction>& harm_basis(int n, int k);

/// Sum of f over the k-subsets of u.
Rational tilde_eval(const HarmonicFunction& f, Word u);
Rational tilde_eval(const SubsetFunction& f, Word u);

HomPoly harmonic_weight_enumerator(const BinaryCode& c, const HarmonicFunction& f);
/// W_{C,f} divided exactly by (xy)^k.
HomPoly zcf(const BinaryCode& c, const HarmonicFunction& f);
/// (-1)^k 2^(n/2) / code_size * z((x+y)/sqrt2, (x-y)/sqrt2), evaluated without
/// irrational scalars: the sqrt2 powers collapse to 2^k.
HomPoly bachoc_transform(const HomPoly& z, int k, const Integer& code_size, int n);

struct DelsarteFailure {
    int degree = 0;
    std::size_t basis_index = 0;
    Rational sum;
};

/// First (degree, basis element) whose block sum is nonzero, or nullopt if
/// the blocks form a t-design by the harmonic criterion.
std::optional<DelsarteFailure> delsarte_failure(std::span<const Word> blocks, int n, int t);
bool delsarte_design_check(std::span<const Word> blocks, int n, int t);

}  // namespace amdesign
