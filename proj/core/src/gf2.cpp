#include "amdesign/gf2.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "amdesign/parallel.hpp"

namespace amdesign {

std::string to_bitstring(Word w, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((w >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Word parse_bitstring(std::string_view text) {
    if (text.empty() || text.size() > kMaxLength)
        throw InputError("bit string length must be in 1.." + std::to_string(kMaxLength));
    Word w = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            w |= Word{1} << i;
        else if (text[i] != '0')
            throw InputError("bit string contains a character other than '0'/'1'");
    }
    return w;
}

BinaryCode BinaryCode::from_rows(std::span<const Word> rows, int n) {
    if (n <= 0) throw InputError("code length must be positive");
    if (n > kMaxLength) throw InputError("code length above " + std::to_string(kMaxLength) + " is unsupported");
    const Word mask = full_mask(n);
    std::vector<Word> m;
    m.reserve(rows.size());
    for (Word r : rows) {
        if (r & ~mask) throw InputError("row has bits beyond the code length");
        if (r) m.push_back(r);
    }
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < m.size(); ++col) {
        const Word bit = Word{1} << col;
        auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                               [bit](Word r) { return (r & bit) != 0; });
        if (it == m.end()) continue;
        std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), it);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != rank && (m[i] & bit)) m[i] ^= m[rank];
        ++rank;
    }
    m.resize(rank);
    return BinaryCode(n, std::move(m));
}

BinaryCode BinaryCode::zero(int n) { return from_rows({}, n); }

BinaryCode BinaryCode::whole_space(int n) {
    std::vector<Word> rows;
    for (int i = 0; i < n; ++i) rows.push_back(Word{1} << i);
    return from_rows(rows, n);
}

std::vector<int> BinaryCode::pivots() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (Word r : rows_) p.push_back(std::countr_zero(r));
    return p;
}

Word BinaryCode::reduce(Word w) const {
    for (Word r : rows_)
        if (w & (r & -r)) w ^= r;
    return w;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t s = 0;
    for (auto a : counts) s += a;
    return s;
}

int WeightDistribution::minimum_nonzero_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return static_cast<int>(w);
    return -1;
}

std::string_view to_string(Extremality e) {
    switch (e) {
        case Extremality::extremal: return "extremal";
        case Extremality::near_extremal: return "near_extremal";
        case Extremality::neither: return "neither";
        case Extremality::not_applicable: return "not_applicable";
    }
    return "?";
}

BinaryCode dual(const BinaryCode& c) {
    const int n = c.length();
    const auto rows = c.basis();
    const auto piv = c.pivots();
    Word pivot_mask = 0;
    for (int p : piv) pivot_mask |= Word{1} << p;
    std::vector<Word> out;
    for (int f = 0; f < n; ++f) {
        if ((pivot_mask >> f) & 1u) continue;
        Word v = Word{1} << f;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> f) & 1u) v |= Word{1} << piv[i];
        out.push_back(v);
    }
    return BinaryCode::from_rows(out, n);
}

void check_enumeration_guard(const BinaryCode& c) {
    if (c.dimension() > kEnumerationGuard)
        throw GuardError("dimension " + std::to_string(c.dimension()) + " exceeds the enumeration guard k <= " +
                         std::to_string(kEnumerationGuard));
}

std::uint64_t codeword_count(const BinaryCode& c) {
    check_enumeration_guard(c);
    return std::uint64_t{1} << c.dimension();
}

WeightDistribution weight_distribution(const BinaryCode& c) {
    const std::uint64_t total = codeword_count(c);
    const int n = c.length();
    std::vector<std::vector<std::uint64_t>> partial(chunk_count(total),
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1));
    parallel_chunks(total, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        auto& acc = partial[chunk];
        enumerate_codewords(c, begin, end, [&acc](Word w) { ++acc[static_cast<std::size_t>(weight(w))]; });
    });
    WeightDistribution wd{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1)};
    for (const auto& p : partial)
        for (std::size_t w = 0; w < p.size(); ++w) wd.counts[w] += p[w];
    return wd;
}

int minimum_distance(const BinaryCode& c) {
    if (c.dimension() == 0) throw InputError("the zero code has no nonzero codeword");
    return weight_distribution(c).minimum_nonzero_weight();
}

Extremality mallows_sloane(int n, int d) {
    if (n <= 0 || n % 2 != 0) throw InputError("Mallows-Sloane bound needs an even positive length");
    if (d <= 0 || d % 2 != 0) throw InputError("Mallows-Sloane bound needs an even positive minimum distance");
    const int bound = 2 * (n / 8) + 2;
    if (d > bound)
        throw InputError("d = " + std::to_string(d) + " exceeds the bound " + std::to_string(bound) +
                         "; not an even formally self-dual code");
    if (d == bound) return Extremality::extremal;
    if (d == bound - 2) return Extremality::near_extremal;
    return Extremality::neither;
}

CodeClass classify(const BinaryCode& c) {
    CodeClass cls;
    const auto rows = c.basis();
    cls.even = std::all_of(rows.begin(), rows.end(), [](Word r) { return weight(r) % 2 == 0; });
    cls.self_orthogonal = cls.even;
    for (std::size_t i = 0; i < rows.size() && cls.self_orthogonal; ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (inner_product(rows[i], rows[j])) {
                cls.self_orthogonal = false;
                break;
            }
    const auto wd = weight_distribution(c);
    cls.doubly_even = true;
    for (int w = 0; w <= c.length(); ++w)
        if (wd[w] && w % 4 != 0) cls.doubly_even = false;
    cls.self_dual = cls.self_orthogonal && 2 * c.dimension() == c.length();
    cls.formally_self_dual = 2 * c.dimension() == c.length() && wd == weight_distribution(dual(c));
    cls.type_one = cls.self_dual && !cls.doubly_even;
    cls.type_two = cls.self_dual && cls.doubly_even;
    if (cls.even && cls.formally_self_dual && c.dimension() > 0) {
        try {
            cls.extremality = mallows_sloane(c.length(), wd.minimum_nonzero_weight());
        } catch (const InputError&) {
            cls.extremality = Extremality::neither;
        }
    }
    return cls;
}

BinaryCode doubly_even_subcode(const BinaryCode& c) {
    if (!classify(c).even) throw PreconditionError("doubly-even subcode requires an even code");
    std::vector<Word> words;
    const std::uint64_t total = codeword_count(c);
    enumerate_codewords(c, 0, total, [&words](Word w) {
        if (weight(w) % 4 == 0) words.push_back(w);
    });
    BinaryCode sub = BinaryCode::from_rows(words, c.length());
    if (codeword_count(sub) != words.size())
        throw PreconditionError("the doubly-even codewords of this code do not form a subspace");
    return sub;
}

std::vector<Word> codewords_of_weight(const BinaryCode& c, int w) {
    if (w < 0 || w > c.length()) throw InputError("weight out of range");
    const std::uint64_t total = codeword_count(c);
    std::vector<std::vector<Word>> partial(chunk_count(total));
    parallel_chunks(total, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        auto& out = partial[chunk];
        enumerate_codewords(c, begin, end, [&out, w](Word x) {
            if (weight(x) == w) out.push_back(x);
        });
    });
    std::vector<Word> all;
    for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

BinaryCode parse_generator_matrix(std::istream& in) {
    std::vector<Word> rows;
    int n = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string_view body(line);
        body.remove_prefix(start);
        const int len = static_cast<int>(body.size());
        if (n < 0)
            n = len;
        else if (len != n)
            throw InputError("ragged generator matrix at line " + std::to_string(lineno));
        rows.push_back(parse_bitstring(body));
    }
    if (n <= 0) throw InputError("generator matrix has no rows");
    return BinaryCode::from_rows(rows, n);
}

BinaryCode read_generator_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open generator matrix file: " + path);
    return parse_generator_matrix(in);
}

std::string format_generator_matrix(const BinaryCode& c) {
    std::ostringstream out;
    out << "# [" << c.length() << "," << c.dimension() << "] binary code, reduced row-echelon basis\n";
    for (Word r : c.basis()) out << to_bitstring(r, c.length()) << '\n';
    if (c.dimension() == 0) out << to_bitstring(0, c.length()) << '\n';
    return out.str();
}

void write_generator_matrix(const std::string& path, const BinaryCode& c) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write generator matrix file: " + path);
    out << format_generator_matrix(c);
}

}  // namespace amdesign
