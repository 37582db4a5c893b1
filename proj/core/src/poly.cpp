#include "amdesign/poly.hpp"

#include <sstream>

namespace amdesign {

HomPoly::HomPoly(int degree) {
    if (degree < 0) throw InputError("polynomial degree must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

HomPoly::HomPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InputError("a homogeneous polynomial needs at least one coefficient");
}

HomPoly HomPoly::x() { return HomPoly({Rational(1), Rational(0)}); }
HomPoly HomPoly::y() { return HomPoly({Rational(0), Rational(1)}); }
HomPoly HomPoly::constant(const Rational& c) { return HomPoly({c}); }

HomPoly HomPoly::monomial(int degree, int y_degree, const Rational& c) {
    HomPoly p(degree);
    p.coeff(y_degree) = c;
    return p;
}

bool HomPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (degree() != o.degree()) throw InputError("degree mismatch in polynomial addition");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (degree() != o.degree()) throw InputError("degree mismatch in polynomial subtraction");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
}

HomPoly& HomPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

HomPoly operator-(HomPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

HomPoly HomPoly::pow(int e) const {
    if (e < 0) throw InputError("negative polynomial exponent");
    HomPoly result = constant(1);
    HomPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

HomPoly HomPoly::hadamard() const {
    const int d = degree();
    const HomPoly plus = x() + y();
    const HomPoly minus = x() - y();
    std::vector<HomPoly> plus_pow{constant(1)}, minus_pow{constant(1)};
    for (int i = 1; i <= d; ++i) {
        plus_pow.push_back(plus_pow.back() * plus);
        minus_pow.push_back(minus_pow.back() * minus);
    }
    HomPoly r(d);
    for (int j = 0; j <= d; ++j) {
        if (sgn(coeff(j)) == 0) continue;
        r += coeff(j) * (plus_pow[static_cast<std::size_t>(d - j)] * minus_pow[static_cast<std::size_t>(j)]);
    }
    return r;
}

HomPoly HomPoly::negate_y() const {
    HomPoly r = *this;
    for (int j = 1; j <= degree(); j += 2) r.coeff(j) = -r.coeff(j);
    return r;
}

HomPoly HomPoly::divide_xy_power(int k) const {
    if (k < 0) throw InputError("negative power of xy");
    const int d = degree();
    if (2 * k > d) {
        if (!is_zero()) throw Error("polynomial is not divisible by (xy)^" + std::to_string(k));
        throw Error("degree too small to divide by (xy)^" + std::to_string(k));
    }
    for (int j = 0; j <= d; ++j)
        if ((j < k || j > d - k) && sgn(coeff(j)) != 0)
            throw Error("polynomial is not divisible by (xy)^" + std::to_string(k));
    HomPoly q(d - 2 * k);
    for (int j = 0; j <= d - 2 * k; ++j) q.coeff(j) = coeff(j + k);
    return q;
}

std::string HomPoly::to_string() const {
    std::ostringstream out;
    bool first = true;
    const int d = degree();
    for (int j = 0; j <= d; ++j) {
        const Rational& c = coeff(j);
        if (sgn(c) == 0) continue;
        const int xe = d - j;
        const bool unit = (c == 1 || c == -1) && (xe > 0 || j > 0);
        if (first)
            out << (sgn(c) < 0 ? "-" : "");
        else
            out << (sgn(c) < 0 ? " - " : " + ");
        bool need_star = false;
        if (!unit) {
            out << Rational(abs(c)).get_str();
            need_star = true;
        }
        if (xe > 0) {
            out << (need_star ? "*" : "") << "x";
            if (xe > 1) out << "^" << xe;
            need_star = true;
        }
        if (j > 0) {
            out << (need_star ? "*" : "") << "y";
            if (j > 1) out << "^" << j;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

HomPoly arith(const HomPoly& p, const HomPoly& q, PolyOp op, int exponent) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
        case PolyOp::pow: return p.pow(exponent);
    }
    throw InputError("unknown polynomial operation");
}

HomPoly q8() {
    const HomPoly x = HomPoly::x(), y = HomPoly::y();
    const HomPoly inner = x.pow(6) - Rational(7) * (x.pow(4) * y.pow(2)) + Rational(7) * (x.pow(2) * y.pow(4)) - y.pow(6);
    return x * y * inner;
}

HomPoly weight_enumerator(const WeightDistribution& wd) {
    HomPoly p(wd.n);
    for (int w = 0; w <= wd.n; ++w) p.coeff(w) = Rational(static_cast<unsigned long>(wd[w]));
    return p;
}

namespace {

HomPoly sum_of_squares() { return HomPoly::x().pow(2) + HomPoly::y().pow(2); }

HomPoly gleason_second_generator() {
    const HomPoly x = HomPoly::x(), y = HomPoly::y();
    return x.pow(2) * y.pow(2) * (x.pow(2) - y.pow(2)).pow(2);
}

}  // namespace

std::vector<HomPoly> gleason_basis(int t, int n) {
    if (t < 0) throw InputError("harmonic degree must be nonnegative");
    if (n % 2 != 0) throw InputError("Gleason basis needs an even length");
    const bool odd = t % 2 != 0;
    const int top = n / 2 - t - (odd ? 4 : 0);
    if (top < 0) throw InputError("empty Gleason basis: every exponent of x^2+y^2 would be negative");
    const HomPoly a = sum_of_squares();
    const HomPoly b = gleason_second_generator();
    const HomPoly prefix = odd ? q8() : HomPoly::constant(1);
    std::vector<HomPoly> basis;
    for (int i = 0; 4 * i <= top; ++i) basis.push_back(prefix * a.pow(top - 4 * i) * b.pow(i));
    return basis;
}

GleasonDecomposition gleason_decompose(const HomPoly& p, int t, int n) {
    if (p.degree() != n - 2 * t)
        throw InputError("polynomial degree " + std::to_string(p.degree()) + " does not equal n - 2t = " +
                         std::to_string(n - 2 * t));
    GleasonDecomposition out;
    out.basis = gleason_basis(t, n);
    const std::size_t m = out.basis.size();
    const std::size_t rows = static_cast<std::size_t>(p.degree()) + 1;

    // Augmented system: column i holds basis element i, last column holds p.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < m; ++i) a[r][i] = out.basis[i].coeff(static_cast<int>(r));
        a[r][m] = p.coeff(static_cast<int>(r));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sgn(a[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        const Rational inv = 1 / a[rank][col];
        for (auto& v : a[rank]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(a[r][col]) == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    out.coefficients.assign(m, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) out.coefficients[pivot_col[r]] = a[r][m];

    HomPoly fit(p.degree());
    for (std::size_t i = 0; i < m; ++i) fit += out.coefficients[i] * out.basis[i];
    out.residual = p - fit;
    out.in_span = out.residual.is_zero();
    return out;
}

bool check_relative_invariance(const HomPoly& p, int t) {
    const int d = p.degree();
    if (d % 2 != 0) throw InputError("relative invariance check needs an even degree");
    Rational scale(1);
    mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<mp_bitcnt_t>(d / 2));
    scale.canonicalize();
    const Rational sign = t % 2 == 0 ? 1 : -1;
    const HomPoly expected = sign * p;
    return scale * p.hadamard() == expected && p.negate_y() == expected;
}

std::vector<std::pair<int, int>> vanishing_coefficient_search(int alpha_max) {
    if (alpha_max < 1) throw InputError("alpha_max must be at least 1");
    const HomPoly x = HomPoly::x(), y = HomPoly::y();
    const HomPoly quartic = x.pow(4) + Rational(2) * (x.pow(2) * y.pow(2)) + y.pow(4);
    const HomPoly diff = x.pow(2) - y.pow(2);
    std::vector<std::pair<int, int>> hits;
    HomPoly r = quartic;
    for (int alpha = 0; alpha < alpha_max; ++alpha) {
        if (alpha > 0) r = r * diff;
        for (int i = 0; 2 * i <= alpha + 2; ++i)
            if (sgn(r.coeff(2 * i)) == 0) hits.emplace_back(alpha, i);
    }
    return hits;
}

WeightDistribution macwilliams_transform_classical(const WeightDistribution& wd, int n, int k) {
    if (wd.n != n || static_cast<int>(wd.counts.size()) != n + 1)
        throw InputError("weight distribution length does not match n");
    if (k < 0 || k > 63 || wd.total() != (std::uint64_t{1} << k))
        throw InputError("weight distribution does not sum to 2^k");
    HomPoly dual_poly = weight_enumerator(wd).hadamard();
    Rational scale(1);
    mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<mp_bitcnt_t>(k));
    scale.canonicalize();
    dual_poly *= scale;
    WeightDistribution out{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1)};
    for (int w = 0; w <= n; ++w) {
        const Rational& c = dual_poly.coeff(w);
        if (c.get_den() != 1 || sgn(c) < 0 || !c.get_num().fits_ulong_p())
            throw InputError("MacWilliams transform produced a non-integral or negative count at weight " +
                             std::to_string(w));
        out.counts[static_cast<std::size_t>(w)] = c.get_num().get_ui();
    }
    return out;
}

}  // namespace amdesign
