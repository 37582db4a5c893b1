#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "amdesign/gf2.hpp"
#include "amdesign/rational.hpp"

namespace amdesign {

/// Homogeneous polynomial in x, y with exact rational coefficients.
/// coeff(j) is the coefficient of x^(D-j) y^j.
class HomPoly {
public:
    HomPoly() = default;
    /// The zero polynomial of the given degree.
    explicit HomPoly(int degree);
    explicit HomPoly(std::vector<Rational> coeffs);

    static HomPoly x();
    static HomPoly y();
    static HomPoly constant(const Rational& c);
    /// c * x^(degree - y_degree) * y^y_degree
    static HomPoly monomial(int degree, int y_degree, const Rational& c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int y_degree) const { return coeffs_.at(static_cast<std::size_t>(y_degree)); }
    Rational& coeff(int y_degree) { return coeffs_.at(static_cast<std::size_t>(y_degree)); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    HomPoly& operator*=(const Rational& s);

    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(HomPoly a, const Rational& s) { return a *= s; }
    friend HomPoly operator*(const Rational& s, HomPoly a) { return a *= s; }
    friend HomPoly operator-(HomPoly a);
    friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.coeffs_ == b.coeffs_; }

    HomPoly pow(int e) const;
    /// p(x+y, x-y), no scaling.
    HomPoly hadamard() const;
    /// p(x, -y)
    HomPoly negate_y() const;
    /// Exact quotient by (xy)^k; throws Error if some dropped coefficient is nonzero.
    HomPoly divide_xy_power(int k) const;

    /// Sorted monomial list, e.g. "x^8 + 14*x^4*y^4 + y^8".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const HomPoly& p) { return os << p.to_string(); }

private:
    std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul, pow };

/// Dispatch used by the command line; `pow` takes its exponent from `exponent`.
HomPoly arith(const HomPoly& p, const HomPoly& q, PolyOp op, int exponent = 0);

/// x y (x^6 - 7 x^4 y^2 + 7 x^2 y^4 - y^6)
HomPoly q8();
HomPoly weight_enumerator(const WeightDistribution& wd);

/// Spanning set of the relative invariants of degree n - 2t: for even t the
/// products (x^2+y^2)^a (x^2 y^2 (x^2-y^2)^2)^i, for odd t the same prefixed
/// by q8(), over every i with a >= 0. Throws InputError if empty.
std::vector<HomPoly> gleason_basis(int t, int n);

struct GleasonDecomposition {
    bool in_span = false;
    std::vector<HomPoly> basis;
    std::vector<Rational> coefficients;
    /// p - sum c_i B_i; zero exactly when in_span.
    HomPoly residual;
};

GleasonDecomposition gleason_decompose(const HomPoly& p, int t, int n);

/// True iff 2^(-D/2) p(x+y, x-y) == (-1)^t p and p(x, -y) == (-1)^t p.
bool check_relative_invariance(const HomPoly& p, int t);

/// Pairs (alpha, i) with alpha < alpha_max and 0 <= i <= (alpha+2)/2 for which
/// the x^(2 alpha + 4 - 2i) y^(2i) coefficient of
/// (x^4 + 2x^2y^2 + y^4)(x^2 - y^2)^alpha vanishes.
std::vector<std::pair<int, int>> vanishing_coefficient_search(int alpha_max);

/// Dual weight distribution via 2^-k W(x+y, x-y). Throws InputError on a
/// non-integral or negative result.
WeightDistribution macwilliams_transform_classical(const WeightDistribution& wd, int n, int k);

}  // namespace amdesign
