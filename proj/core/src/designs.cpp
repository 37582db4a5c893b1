#include "amdesign/designs.hpp"

#include <algorithm>
#include <fstream>

#include "amdesign/parallel.hpp"
#include "amdesign/subsets.hpp"

namespace amdesign {

Design::Design(int v, int k, std::vector<Word> blocks) : v_(v), k_(k), blocks_(std::move(blocks)) {
    if (v < 1 || v > kMaxLength) throw InputError("design point count must be in 1.." + std::to_string(kMaxLength));
    if (k < 0 || k > v) throw InputError("block size out of range");
    const Word mask = full_mask(v);
    for (Word b : blocks_) {
        if (b & ~mask) throw InputError("block contains a point outside 1..v");
        if (weight(b) != k) throw InputError("all blocks must have size " + std::to_string(k));
    }
}

std::vector<Word> Design::sorted_blocks() const {
    auto s = blocks_;
    std::sort(s.begin(), s.end());
    return s;
}

bool Design::same_blocks(const Design& o) const {
    return v_ == o.v_ && k_ == o.k_ && sorted_blocks() == o.sorted_blocks();
}

Design Design::without_block(std::size_t index) const {
    if (index >= blocks_.size()) throw InputError("block index out of range");
    auto b = blocks_;
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(index));
    return Design(v_, k_, std::move(b));
}

Design support_design(const BinaryCode& c, int w) {
    auto words = codewords_of_weight(c, w);
    if (words.empty()) throw InputError("the code has no codewords of weight " + std::to_string(w));
    return Design(c.length(), w, std::move(words));
}

Design design_union(const Design& a, const Design& b) {
    if (a.points() != b.points() || a.block_size() != b.block_size())
        throw InputError("union of designs with different point counts or block sizes");
    auto blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    return Design(a.points(), a.block_size(), std::move(blocks));
}

namespace {

std::uint64_t containing_blocks(const std::vector<Word>& blocks, Word s) {
    std::uint64_t n = 0;
    for (Word b : blocks) n += (b & s) == s;
    return n;
}

}  // namespace

TDesignCheck check_t_design(const Design& d, int t) {
    if (t < 0 || t > d.block_size()) throw InputError("t must lie in 0..k");
    const auto& blocks = d.blocks();
    const std::uint64_t total = binomial_u64(d.points(), t);
    const Word first = full_mask(t);
    const std::uint64_t reference = containing_blocks(blocks, first);

    struct Mismatch {
        std::uint64_t rank;
        Word subset;
        std::uint64_t count;
    };
    std::vector<std::optional<Mismatch>> partial(chunk_count(total));
    parallel_chunks(total, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        Word s = colex_unrank(begin, t);
        for (std::uint64_t r = begin; r < end; ++r) {
            const std::uint64_t count = containing_blocks(blocks, s);
            if (count != reference) {
                partial[chunk] = Mismatch{r, s, count};
                return;
            }
            if (r + 1 < end) s = next_same_weight(s);
        }
    });
    TDesignCheck out;
    for (const auto& m : partial) {
        if (m) {
            out.witness = {first, m->subset};
            out.witness_counts = {reference, m->count};
            return out;
        }
    }
    out.lambda = reference;
    return out;
}

std::optional<std::uint64_t> is_t_design(const Design& d, int t) { return check_t_design(d, t).lambda; }

int design_strength(const Design& d, int t_max) {
    if (t_max > d.block_size()) throw InputError("t_max exceeds the block size");
    int strength = 0;
    for (int t = 1; t <= t_max; ++t) {
        if (!is_t_design(d, t)) break;
        strength = t;
    }
    return strength;
}

Design complement_design(const Design& d) {
    const Word mask = full_mask(d.points());
    std::vector<Word> blocks;
    blocks.reserve(d.block_count());
    for (Word b : d.blocks()) blocks.push_back(mask & ~b);
    return Design(d.points(), d.points() - d.block_size(), std::move(blocks));
}

Rational lambda_i(int t, int v, int k, const Rational& lambda, int i) {
    if (i < 0 || i > t) throw InputError("lambda_i needs 0 <= i <= t");
    const Integer den = binomial(k - i, t - i);
    if (den == 0) throw InputError("lambda_i undefined: C(k-i, t-i) = 0");
    Rational r = lambda * Rational(binomial(v - i, t - i)) / Rational(den);
    r.canonicalize();
    return r;
}

IntersectionProfile intersection_profile(const Design& d, std::size_t block_index) {
    if (block_index >= d.block_count()) throw InputError("block index out of range");
    IntersectionProfile p{std::vector<std::uint64_t>(static_cast<std::size_t>(d.block_size()) + 1)};
    const Word ref = d.blocks()[block_index];
    for (std::size_t j = 0; j < d.block_count(); ++j)
        if (j != block_index) ++p.counts[static_cast<std::size_t>(weight(ref & d.blocks()[j]))];
    return p;
}

std::optional<std::pair<std::size_t, std::size_t>> self_orthogonality_violation(const Design& d) {
    const auto& b = d.blocks();
    const int parity = d.block_size() & 1;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if ((weight(b[i] & b[j]) & 1) != parity) return std::make_pair(i, j);
    return std::nullopt;
}

bool is_self_orthogonal_design(const Design& d) { return !self_orthogonality_violation(d).has_value(); }

BinaryCode code_from_design(const Design& d) { return BinaryCode::from_rows(d.blocks(), d.points()); }

MendelsohnResult mendelsohn_solve(const MendelsohnSystem& sys, std::uint64_t enumeration_cap) {
    if (sys.t < 0 || sys.t > sys.k || sys.k > sys.v || sys.m < 0 || sys.m > sys.v)
        throw InputError("Mendelsohn parameters out of range");
    MendelsohnResult out;
    out.unknowns = sys.allowed;
    std::sort(out.unknowns.begin(), out.unknowns.end());
    out.unknowns.erase(std::unique(out.unknowns.begin(), out.unknowns.end()), out.unknowns.end());
    for (int i : out.unknowns)
        if (i < 0 || i > std::min(sys.k, sys.m)) throw InputError("allowed intersection size out of 0..min(k,m)");
    for (const auto& [i, value] : sys.fixed) {
        if (!std::binary_search(out.unknowns.begin(), out.unknowns.end(), i))
            throw InputError("fixed intersection size " + std::to_string(i) + " is not in the allowed set");
        if (value < 0) throw InputError("fixed counts must be nonnegative");
    }
    for (int j = 0; j <= sys.t; ++j) {
        Rational lj = lambda_i(sys.t, sys.v, sys.k, sys.lambda, j);
        if (lj.get_den() != 1)
            throw InputError("lambda_" + std::to_string(j) + " = " + lj.get_str() + " is not integral; no design exists");
        out.lambdas.push_back(lj);
    }
    if (!out.lambdas[0].get_num().fits_slong_p()) throw GuardError("lambda_0 too large to enumerate");
    const std::int64_t bound = out.lambdas[0].get_num().get_si();

    // Free unknowns are the allowed sizes without a fixed value.
    std::vector<int> free_sizes;
    for (int i : out.unknowns)
        if (!sys.fixed.count(i)) free_sizes.push_back(i);
    const std::size_t u = free_sizes.size();
    const std::size_t eqs = static_cast<std::size_t>(sys.t) + 1;

    std::vector<std::vector<Rational>> a(eqs, std::vector<Rational>(u + 1));
    for (std::size_t j = 0; j < eqs; ++j) {
        const long jj = static_cast<long>(j);
        Rational rhs = out.lambdas[j] * Rational(binomial(sys.m, jj));
        for (const auto& [i, value] : sys.fixed) rhs -= Rational(binomial(i, jj)) * Rational(value);
        for (std::size_t c = 0; c < u; ++c) a[j][c] = Rational(binomial(free_sizes[c], jj));
        a[j][u] = rhs;
    }
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(u, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < u && rank < eqs; ++col) {
        std::size_t piv = rank;
        while (piv < eqs && sgn(a[piv][col]) == 0) ++piv;
        if (piv == eqs) continue;
        std::swap(a[rank], a[piv]);
        const Rational inv = 1 / a[rank][col];
        for (auto& x : a[rank]) x *= inv;
        for (std::size_t r = 0; r < eqs; ++r) {
            if (r == rank || sgn(a[r][col]) == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c <= u; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }
    for (std::size_t r = rank; r < eqs; ++r)
        if (sgn(a[r][u]) != 0) return out;  // inconsistent

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < u; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    long double space = 1;
    for (std::size_t i = 0; i < free_cols.size(); ++i) space *= static_cast<long double>(bound + 1);
    if (space > static_cast<long double>(enumeration_cap))
        throw GuardError("Mendelsohn enumeration space exceeds the cap of " + std::to_string(enumeration_cap));

    for (const auto& [i, value] : sys.fixed)
        if (value > bound) return out;

    std::vector<std::int64_t> assign(free_cols.size(), 0);
    std::vector<std::int64_t> x(u);
    for (;;) {
        for (std::size_t f = 0; f < free_cols.size(); ++f) x[free_cols[f]] = assign[f];
        bool ok = true;
        for (std::size_t r = 0; r < rank && ok; ++r) {
            Rational val = a[r][u];
            for (std::size_t f = 0; f < free_cols.size(); ++f) val -= a[r][free_cols[f]] * assign[f];
            if (val.get_den() != 1 || sgn(val) < 0 || val > bound) {
                ok = false;
                break;
            }
            x[pivot_col[r]] = val.get_num().get_si();
        }
        if (ok) {
            std::vector<std::int64_t> sol;
            std::size_t fc = 0;
            for (int i : out.unknowns) {
                auto it = sys.fixed.find(i);
                sol.push_back(it != sys.fixed.end() ? it->second : x[fc++]);
            }
            out.solutions.push_back(std::move(sol));
        }
        std::size_t f = 0;
        while (f < assign.size() && ++assign[f] > bound) assign[f++] = 0;
        if (f == assign.size()) break;
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

Design design_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
        throw InputError("design JSON needs fields \"v\" and \"blocks\"");
    if (!j["v"].is_number_integer() || !j["blocks"].is_array()) throw InputError("malformed design JSON");
    const int v = j["v"].get<int>();
    if (v < 1 || v > kMaxLength) throw InputError("design point count must be in 1.." + std::to_string(kMaxLength));
    std::vector<Word> blocks;
    int k = -1;
    for (const auto& b : j["blocks"]) {
        if (!b.is_array()) throw InputError("each block must be an array of point labels");
        std::vector<int> pts;
        for (const auto& p : b) {
            if (!p.is_number_integer()) throw InputError("point labels must be integers");
            pts.push_back(p.get<int>());
        }
        const Word w = from_points(pts, v);
        if (k < 0) k = weight(w);
        blocks.push_back(w);
    }
    if (k < 0) {
        if (!j.contains("k")) throw InputError("design with no blocks must state its block size \"k\"");
        k = j["k"].get<int>();
    }
    return Design(v, k, std::move(blocks));
}

nlohmann::json design_to_json(const Design& d) {
    nlohmann::json blocks = nlohmann::json::array();
    for (Word b : d.blocks()) blocks.push_back(to_points(b));
    nlohmann::json j{{"v", d.points()}, {"blocks", std::move(blocks)}};
    if (d.block_count() == 0) j["k"] = d.block_size();
    return j;
}

Design read_design(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open design file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("design file is not valid JSON: " + std::string(e.what()));
    }
    return design_from_json(j);
}

void write_design(const std::string& path, const Design& d) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write design file: " + path);
    out << design_to_json(d).dump() << '\n';
}

}  // namespace amdesign
