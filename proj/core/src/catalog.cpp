#include "amdesign/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "amdesign/rational.hpp"
#include "amdesign/subsets.hpp"

#ifndef AMDESIGN_DEFAULT_DATA_DIR
#define AMDESIGN_DEFAULT_DATA_DIR "data/codes"
#endif

namespace amdesign::catalog {

namespace {

BinaryCode base_code(const std::string& name) {
    if (name == "i2") return BinaryCode::from_rows(std::vector<Word>{parse_bitstring("11")}, 2);
    if (name == "d4") {
        const std::vector<Word> rows{parse_bitstring("1100"), parse_bitstring("0011")};
        return BinaryCode::from_rows(rows, 4);
    }
    if (name == "e8") {
        const std::vector<Word> rows{parse_bitstring("11110000"), parse_bitstring("00111100"),
                                     parse_bitstring("00001111"), parse_bitstring("01010101")};
        return BinaryCode::from_rows(rows, 8);
    }
    throw InputError("unknown builtin code: " + name);
}

// Index in [0, n) from the raw engine output, identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }


bool min_distance_is(const BinaryCode& c, int d) {
    const auto wd = weight_distribution(c);
    return wd.minimum_nonzero_weight() == d;
}

}  // namespace

BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b) {
    const int n = a.length() + b.length();
    if (n > kMaxLength) throw InputError("direct sum longer than " + std::to_string(kMaxLength));
    std::vector<Word> rows(a.basis().begin(), a.basis().end());
    for (Word r : b.basis()) rows.push_back(r << a.length());
    return BinaryCode::from_rows(rows, n);
}

BinaryCode builtin(const std::string& name) {
    if (!name.empty() && name.back() == '+') throw InputError("empty component in builtin code name: " + name);
    std::optional<BinaryCode> acc;
    std::stringstream parts(name);
    std::string part;
    while (std::getline(parts, part, '+')) {
        BinaryCode c = base_code(part);
        acc = acc ? direct_sum(*acc, c) : c;
    }
    if (!acc) throw InputError("empty builtin code name");
    return *acc;
}

SearchResult search_type_i_16(const SearchConfig& cfg) {
    constexpr int half = 8;
    std::mt19937_64 rng(cfg.seed);
    std::vector<Word> odd_rows;
    for (Word a = 0; a < (Word{1} << half); ++a)
        if (weight(a) % 2 == 1) odd_rows.push_back(a);

    for (std::uint64_t iter = 1; iter <= cfg.max_iterations; ++iter) {
        // Rows of A: odd weight (a.a = 1) and pairwise orthogonal, so A A^T = I.
        std::vector<Word> a;
        std::vector<Word> candidates;
        for (int i = 0; i < half; ++i) {
            candidates.clear();
            for (Word r : odd_rows)
                if (std::none_of(a.begin(), a.end(), [r](Word p) { return inner_product(p, r); }))
                    candidates.push_back(r);
            if (candidates.empty()) break;
            a.push_back(candidates[draw(rng, candidates.size())]);
        }
        if (static_cast<int>(a.size()) != half) continue;
        std::vector<Word> rows;
        for (int i = 0; i < half; ++i) rows.push_back((Word{1} << i) | (a[static_cast<std::size_t>(i)] << half));
        BinaryCode c = BinaryCode::from_rows(rows, 2 * half);
        if (c.dimension() != half || !min_distance_is(c, 4)) continue;
        const auto wd = weight_distribution(c);
        bool doubly_even = true;
        for (int w = 0; w <= 2 * half; ++w)
            if (wd[w] && w % 4) doubly_even = false;
        if (doubly_even) continue;
        return {std::move(c), iter};
    }
    throw GuardError("Type I [16,8,4] search exhausted " + std::to_string(cfg.max_iterations) + " iterations");
}

SearchResult search_even_fsd(int n, int d, const SearchConfig& cfg) {
    if (n <= 0 || n % 2 != 0) throw InputError("formally self-dual search needs an even length");
    const int k = n / 2;
    if (k > kEnumerationGuard || n > kMaxLength) throw GuardError("length too large for the formally self-dual search");
    if (d < 2 || d % 2) throw InputError("minimum distance of an even code must be even and positive");
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t iter = 1; iter <= cfg.max_iterations; ++iter) {
        // Systematic [I | B] with every row and column of B of odd weight:
        // rows give an even code, columns give an even dual.
        std::vector<Word> b(static_cast<std::size_t>(k), 0);
        for (int i = 0; i + 1 < k; ++i) b[static_cast<std::size_t>(i)] = draw(rng, Word{1} << (k - 1));
        Word column_parity = 0;
        for (int i = 0; i + 1 < k; ++i) {
            Word& row = b[static_cast<std::size_t>(i)];
            if (weight(row) % 2 == 0) row |= Word{1} << (k - 1);
            column_parity ^= row;
        }
        b[static_cast<std::size_t>(k - 1)] = ~column_parity & full_mask(k);
        std::vector<Word> rows;
        for (int i = 0; i < k; ++i) rows.push_back((Word{1} << i) | (b[static_cast<std::size_t>(i)] << k));
        BinaryCode c = BinaryCode::from_rows(rows, n);
        const auto wd = weight_distribution(c);
        if (wd.minimum_nonzero_weight() != d) continue;
        const BinaryCode cd = dual(c);
        if (c == cd || weight_distribution(cd) != wd) continue;
        return {std::move(c), iter};
    }
    throw GuardError("formally self-dual search exhausted " + std::to_string(cfg.max_iterations) + " iterations");
}

std::vector<Trade> find_trades(const Design& d) {
    const int v = d.points();
    const int k = d.block_size();
    std::vector<Word> sorted = d.sorted_blocks();
    auto has = [&](Word blk) { return std::binary_search(sorted.begin(), sorted.end(), blk); };
    std::vector<Trade> trades;
    if (k < 3) return trades;
    for (Word blk : sorted) {
        // Split the block as S + {a1, a2, a3}; a1 is the lowest of the three
        // to avoid listing a trade once per ordering.
        for (Word s : all_subsets(k, k - 3)) {
            Word base = 0, rest = 0;
            int idx = 0;
            for (Word r = blk; r; r &= r - 1, ++idx) {
                const Word bit = r & -r;
                ((s >> idx) & 1 ? base : rest) |= bit;
            }
            int a[3], n_a = 0;
            for (Word r = rest; r; r &= r - 1) a[n_a++] = std::countr_zero(r);
            const Word outside = full_mask(v) & ~blk;
            for (Word r1 = outside; r1; r1 &= r1 - 1)
                for (Word r2 = outside & ~(r1 & -r1); r2; r2 &= r2 - 1)
                    for (Word r3 = outside & ~(r1 & -r1) & ~(r2 & -r2); r3; r3 &= r3 - 1) {
                        const Word pa[3] = {Word{1} << a[0], Word{1} << a[1], Word{1} << a[2]};
                        const Word pb[3] = {r1 & -r1, r2 & -r2, r3 & -r3};
                        Trade t;
                        bool ok = true;
                        for (int mask = 0; mask < 8 && ok; ++mask) {
                            Word cand = base;
                            for (int i = 0; i < 3; ++i) cand |= (mask >> i & 1) ? pb[i] : pa[i];
                            const bool even = std::popcount(static_cast<unsigned>(mask)) % 2 == 0;
                            if (has(cand) != even) ok = false;
                            (even ? t.removed : t.added).push_back(cand);
                        }
                        if (!ok) continue;
                        std::sort(t.removed.begin(), t.removed.end());
                        std::sort(t.added.begin(), t.added.end());
                        trades.push_back(std::move(t));
                    }
        }
    }
    std::sort(trades.begin(), trades.end(), [](const Trade& x, const Trade& y) { return x.removed < y.removed || (x.removed == y.removed && x.added < y.added); });
    trades.erase(std::unique(trades.begin(), trades.end(), [](const Trade& x, const Trade& y) { return x.removed == y.removed && x.added == y.added; }), trades.end());
    return trades;
}

Design apply_trade(const Design& d, const Trade& t) {
    std::vector<Word> blocks;
    for (Word blk : d.blocks())
        if (std::find(t.removed.begin(), t.removed.end(), blk) == t.removed.end()) blocks.push_back(blk);
    blocks.insert(blocks.end(), t.added.begin(), t.added.end());
    return Design(d.points(), d.block_size(), std::move(blocks));
}

Design search_non_self_orthogonal_2_design(const Design& start, const SearchConfig& cfg) {
    const auto lambda = is_t_design(start, 2);
    if (!lambda) throw InputError("starting design is not a 2-design");
    std::mt19937_64 rng(cfg.seed);
    Design current = start;
    for (std::uint64_t iter = 0; iter < cfg.max_iterations; ++iter) {
        const auto trades = find_trades(current);
        if (trades.empty()) break;
        current = apply_trade(current, trades[draw(rng, trades.size())]);
        if (!is_self_orthogonal_design(current)) {
            if (is_t_design(current, 2) != lambda) throw Error("trade switch broke the 2-design property");
            return current;
        }
    }
    throw GuardError("2-design search exhausted " + std::to_string(cfg.max_iterations) + " trade switches");
}

CodeDatabase::CodeDatabase(std::filesystem::path dir) : dir_(std::move(dir)) {}

CodeDatabase CodeDatabase::open_default() {
    if (const char* env = std::getenv("AMDESIGN_DATA"); env && *env) return CodeDatabase(env);
    return CodeDatabase(AMDESIGN_DEFAULT_DATA_DIR);
}

nlohmann::json CodeDatabase::read_index() const {
    std::ifstream in(dir_ / "index.json");
    if (!in) return nlohmann::json::object();
    try {
        nlohmann::json j;
        in >> j;
        return j.is_object() ? j : nlohmann::json::object();
    } catch (const nlohmann::json::exception& e) {
        throw InputError("corrupt code index " + (dir_ / "index.json").string() + ": " + e.what());
    }
}

bool CodeDatabase::contains(const std::string& name) const {
    const auto idx = read_index();
    return idx.contains(name) && std::filesystem::exists(dir_ / idx[name].value("file", name + ".gm"));
}

BinaryCode CodeDatabase::load(const std::string& name) const {
    const auto idx = read_index();
    if (!idx.contains(name)) throw InputError("code '" + name + "' is not in the database at " + dir_.string());
    return read_generator_matrix((dir_ / idx[name].value("file", name + ".gm")).string());
}

std::optional<nlohmann::json> CodeDatabase::provenance(const std::string& name) const {
    const auto idx = read_index();
    if (!idx.contains(name)) return std::nullopt;
    return std::optional<nlohmann::json>(std::in_place, idx[name]);
}

void CodeDatabase::store(const std::string& name, const BinaryCode& code, const nlohmann::json& provenance) {
    std::filesystem::create_directories(dir_);
    const std::string file = name + ".gm";
    write_generator_matrix((dir_ / file).string(), code);
    auto idx = read_index();
    nlohmann::json entry = provenance;
    entry["file"] = file;
    entry["n"] = code.length();
    entry["k"] = code.dimension();
    idx[name] = entry;
    std::ofstream out(dir_ / "index.json");
    if (!out) throw InputError("cannot write code index in " + dir_.string());
    out << idx.dump(2) << '\n';
}

namespace {

template <class Search>
BinaryCode load_or_derive(CodeDatabase& db, const std::string& name, const SearchConfig& cfg, Search&& search,
                          const char* what) {
    if (db.contains(name)) return db.load(name);
    SearchResult r = search(cfg);
    try {
        db.store(name, r.code,
                 {{"provenance", "search"}, {"search", what}, {"seed", cfg.seed}, {"iterations", r.iterations}});
    } catch (const std::exception&) {
        // Read-only database: the derived code is still valid for this run.
    }
    return r.code;
}

}  // namespace

BinaryCode load_type_i_16(CodeDatabase& db, const SearchConfig& cfg) {
    return load_or_derive(db, "type1_16", cfg, search_type_i_16, "type1-16");
}

BinaryCode load_even_fsd_16(CodeDatabase& db, const SearchConfig& cfg) {
    return load_or_derive(db, "fsd16", cfg, [](const SearchConfig& c) { return search_even_fsd(16, 4, c); }, "fsd");
}

}  // namespace amdesign::catalog
