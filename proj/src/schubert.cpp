#include "chowfano/schubert.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace chowfano {

GrassContext::GrassContext(int k_, int n_) : k(k_), n(n_) {
    if (k < 1 || n <= k) throw std::invalid_argument("GrassContext: need 1 <= k < n");
}

Partition GrassContext::top() const { return Partition(std::vector<int>(k, n - k)); }

std::string GrassContext::name() const {
    return "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson expansion.
//
// c^nu_{lambda,mu} counts semistandard skew tableaux of shape nu/lambda with
// content mu whose reverse reading word (rows right-to-left, top-to-bottom) is
// a ballot sequence. Cells are filled in exactly that reading order, so the
// ballot condition is checked incrementally.
// ---------------------------------------------------------------------------

namespace {

struct Cell {
    int row;
    int col;
    bool has_right;  // cell (row, col+1) lies in the skew shape
    bool has_above;  // cell (row-1, col) lies in the skew shape
};

long long count_lr_tableaux(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (!nu.contains(lambda)) return 0;
    const int total = nu.weight() - lambda.weight();
    if (total != mu.weight()) return 0;
    if (total == 0) return 1;
    const int values = static_cast<int>(mu.length());

    std::vector<Cell> cells;
    const int rows = static_cast<int>(nu.length());
    for (int r = 0; r < rows; ++r) {
        const int lo = lambda.part(r), hi = nu.part(r);
        for (int c = hi - 1; c >= lo; --c) {
            Cell cell{r, c, false, false};
            cell.has_right = c + 1 < hi;
            cell.has_above = r > 0 && c >= lambda.part(r - 1) && c < nu.part(r - 1);
            cells.push_back(cell);
        }
    }

    // board[r][c] holds the entry, 0 = unfilled
    std::vector<std::vector<int>> board(rows);
    for (int r = 0; r < rows; ++r) board[r].assign(nu.part(r), 0);
    std::vector<int> count(values + 1, 0);

    long long found = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++found;
            return;
        }
        const Cell& cell = cells[idx];
        int vmax = cell.has_right ? board[cell.row][cell.col + 1] : values;
        int vmin = cell.has_above ? board[cell.row - 1][cell.col] + 1 : 1;
        for (int v = vmin; v <= vmax; ++v) {
            if (count[v] >= mu.part(v - 1)) continue;                    // content bound
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;          // ballot
            count[v]++;
            board[cell.row][cell.col] = v;
            rec(idx + 1);
            board[cell.row][cell.col] = 0;
            count[v]--;
        }
    };
    rec(0);
    return found;
}

std::vector<Partition> product_candidates(const Partition& lambda, const Partition& mu) {
    const int total = lambda.weight() + mu.weight();
    const int max_rows = static_cast<int>(lambda.length() + mu.length());
    const int max_first = lambda.part(0) + mu.part(0);
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int row, int maxpart, int remaining) {
        if (remaining == 0) {
            // pad check: lambda must fit below as well
            Partition nu(cur);
            if (nu.contains(lambda)) out.push_back(std::move(nu));
            return;
        }
        if (row >= max_rows) return;
        const int lo = std::max(lambda.part(row), 1);
        for (int p = std::min(maxpart, remaining); p >= lo; --p) {
            cur.push_back(p);
            rec(row + 1, p, remaining - p);
            cur.pop_back();
        }
        // cannot stop early: remaining > 0 needs more rows
    };
    if (total == 0) {
        out.emplace_back();
        return out;
    }
    rec(0, max_first, total);
    return out;
}

using Expansion = std::map<Partition, long long>;

struct LrCache {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, Partition>, std::shared_ptr<const Expansion>> table;
};

LrCache& lr_cache() {
    static LrCache cache;
    return cache;
}

std::pair<Partition, Partition> canonical_key(const Partition& a, const Partition& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

const Expansion& lr_expand(const Partition& lambda, const Partition& mu) {
    auto key = canonical_key(lambda, mu);
    auto& cache = lr_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return *it->second;
    }
    auto result = std::make_shared<Expansion>();
    for (const auto& nu : product_candidates(key.first, key.second)) {
        long long c = count_lr_tableaux(nu, key.first, key.second);
        if (c) result->emplace(nu, c);
    }
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.table.emplace(key, std::move(result));
    return *it->second;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    const auto& exp = lr_expand(lambda, mu);
    auto it = exp.find(nu);
    return it == exp.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// cache persistence: length-prefixed binary records
// ---------------------------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'C', 'F', 'L', 'R'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void write_i64(std::ostream& os, std::int64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); }

bool read_u32(std::istream& is, std::uint32_t& v) {
    return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), 4));
}
bool read_i64(std::istream& is, std::int64_t& v) {
    return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), 8));
}

void write_partition(std::ostream& os, const Partition& p) {
    write_u32(os, static_cast<std::uint32_t>(p.length()));
    for (int x : p.parts()) write_u32(os, static_cast<std::uint32_t>(x));
}

bool read_partition(std::istream& is, Partition& p) {
    std::uint32_t len;
    if (!read_u32(is, len) || len > 64) return false;
    std::vector<int> parts(len);
    for (auto& x : parts) {
        std::uint32_t v;
        if (!read_u32(is, v) || v > 1u << 20) return false;
        x = static_cast<int>(v);
    }
    try {
        p = Partition(std::move(parts));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

std::size_t lr_cache_load(const std::string& path, std::string* warning) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return 0;
    char magic[4];
    std::uint32_t version = 0;
    std::int64_t records = 0;
    if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0 || !read_u32(is, version) ||
        version != kVersion || !read_i64(is, records) || records < 0) {
        if (warning) *warning = "lr cache header invalid, ignoring " + path;
        return 0;
    }
    std::map<std::pair<Partition, Partition>, std::shared_ptr<const Expansion>> loaded;
    for (std::int64_t r = 0; r < records; ++r) {
        Partition lambda, mu;
        std::int64_t entries = 0;
        if (!read_partition(is, lambda) || !read_partition(is, mu) || !read_i64(is, entries) ||
            entries < 0 || entries > 1 << 24) {
            if (warning) *warning = "lr cache truncated or corrupt, ignoring " + path;
            return 0;
        }
        auto exp = std::make_shared<Expansion>();
        for (std::int64_t e = 0; e < entries; ++e) {
            Partition nu;
            std::int64_t coeff = 0;
            if (!read_partition(is, nu) || !read_i64(is, coeff) || coeff <= 0) {
                if (warning) *warning = "lr cache truncated or corrupt, ignoring " + path;
                return 0;
            }
            exp->emplace(nu, coeff);
        }
        loaded.emplace(canonical_key(lambda, mu), std::move(exp));
    }
    auto& cache = lr_cache();
    std::unique_lock lock(cache.mutex);
    for (auto& [k, v] : loaded) cache.table.emplace(k, v);
    return loaded.size();
}

std::size_t lr_cache_save(const std::string& path) {
    auto& cache = lr_cache();
    std::shared_lock lock(cache.mutex);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) return 0;
    os.write(kMagic, 4);
    write_u32(os, kVersion);
    write_i64(os, static_cast<std::int64_t>(cache.table.size()));
    for (const auto& [key, exp] : cache.table) {
        write_partition(os, key.first);
        write_partition(os, key.second);
        write_i64(os, static_cast<std::int64_t>(exp->size()));
        for (const auto& [nu, c] : *exp) {
            write_partition(os, nu);
            write_i64(os, c);
        }
    }
    return cache.table.size();
}

std::size_t lr_cache_size() {
    auto& cache = lr_cache();
    std::shared_lock lock(cache.mutex);
    return cache.table.size();
}

void lr_cache_clear() {
    auto& cache = lr_cache();
    std::unique_lock lock(cache.mutex);
    cache.table.clear();
}

// ---------------------------------------------------------------------------
// ChowClass
// ---------------------------------------------------------------------------

ChowClass ChowClass::sigma(GrassContext ctx, const Partition& lambda, const Rat& coeff) {
    if (!lambda.fits_box(ctx.box_rows(), ctx.box_cols()))
        throw std::invalid_argument("sigma: partition " + lambda.bracket() + " exceeds the " +
                                    ctx.name() + " box");
    ChowClass c(ctx);
    c.add(lambda, coeff);
    return c;
}

Rat ChowClass::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rat(0) : it->second;
}

void ChowClass::add(const Partition& p, const Rat& c) {
    if (c == 0) return;
    if (!p.fits_box(ctx_.box_rows(), ctx_.box_cols())) return;  // box truncation
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("ChowClass +: context mismatch");
    ChowClass c = *this;
    for (const auto& [p, v] : o.terms_) c.add(p, v);
    return c;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("ChowClass -: context mismatch");
    ChowClass c = *this;
    for (const auto& [p, v] : o.terms_) c.add(p, -v);
    return c;
}

ChowClass ChowClass::operator-() const {
    ChowClass c(ctx_);
    for (const auto& [p, v] : terms_) c.terms_.emplace(p, -v);
    return c;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("ChowClass *: context mismatch");
    ChowClass c(ctx_);
    for (const auto& [pa, va] : terms_)
        for (const auto& [pb, vb] : o.terms_) {
            const Rat coeff = va * vb;
            for (const auto& [nu, mult] : lr_expand(pa, pb)) c.add(nu, coeff * mult);
        }
    return c;
}

ChowClass ChowClass::scaled(const Rat& s) const {
    ChowClass c(ctx_);
    if (s == 0) return c;
    for (const auto& [p, v] : terms_) c.terms_.emplace(p, v * s);
    return c;
}

ChowClass ChowClass::graded_piece(int d) const {
    ChowClass c(ctx_);
    for (const auto& [p, v] : terms_)
        if (p.weight() == d) c.terms_.emplace(p, v);
    return c;
}

int ChowClass::max_degree() const {
    int d = -1;
    for (const auto& [p, v] : terms_) d = std::max(d, p.weight());
    return d;
}

bool ChowClass::is_homogeneous(int d) const {
    for (const auto& [p, v] : terms_)
        if (p.weight() != d) return false;
    return true;
}

Rat ChowClass::integral() const { return coeff(ctx_.top()); }

std::string ChowClass::str() const {
    if (terms_.empty()) return "0";
    // printed in descending partition order, the usual presentation
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, v] = *it;
        if (!first) out += v < 0 ? " - " : " + ";
        const Rat mag = (!first && v < 0) ? Rat(-v) : v;
        first = false;
        if (mag == 1 && !p.empty())
            out += p.bracket();
        else if (p.empty())
            out += rat_to_string(mag);
        else
            out += rat_to_string(mag) + "*" + p.bracket();
    }
    return out;
}

Partition dual_partner(const Partition& lambda, const GrassContext& ctx) {
    return lambda.complement(ctx.box_rows(), ctx.box_cols());
}

FormalBundle<ChowClass> tautological_chern(const GrassContext& ctx, Tautological which) {
    if (ctx.k > ctx.n - ctx.k)
        throw std::invalid_argument("tautological_chern: labeling needs k <= n-k on " + ctx.name());
    // On a square box the basis is printed in the transposed convention
    // (c_i(T*) = sigma_i); off the square box only the column assignment
    // c_i(T*) = sigma_{1^i} is consistent with rank bounds. The two agree up
    // to the transpose automorphism, so every integral is labeling-stable.
    // See docs/conventions.md.
    const bool square = ctx.k == ctx.n - ctx.k;
    ChowClass dual_total = ChowClass::one(ctx);
    for (int i = 1; i <= ctx.k; ++i) {
        Partition idx = square ? Partition{i} : Partition(std::vector<int>(i, 1));
        dual_total = dual_total + ChowClass::sigma(ctx, idx);
    }
    FormalBundle<ChowClass> dual_sub{ctx.k, dual_total};
    switch (which) {
        case Tautological::dual_sub:
            return dual_sub;
        case Tautological::sub:
            return dual(dual_sub);
        case Tautological::quotient:
            return {ctx.n - ctx.k, inverse_total(dual(dual_sub).total)};
    }
    throw std::logic_error("tautological_chern: bad selector");
}

FormalBundle<ChowClass> tangent_bundle(const GrassContext& ctx) {
    return chern_class_of_hom(tautological_chern(ctx, Tautological::sub),
                              tautological_chern(ctx, Tautological::quotient));
}

ChowClass giambelli(const GrassContext& ctx, const Partition& lambda) {
    const int m = static_cast<int>(lambda.length());
    if (m == 0) return ChowClass::one(ctx);
    // det of the m x m matrix with entries sigma_{(lambda_i + j - i)}
    // expanded by permutations; rows are short, so brute force is fine
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    ChowClass result = ChowClass::zero(ctx);
    int parity = 0;
    // iterate over all permutations with parity tracking
    std::vector<std::vector<ChowClass>> entry(m, std::vector<ChowClass>(m, ChowClass::zero(ctx)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int idx = lambda.part(i) + j - i;
            if (idx < 0)
                entry[i][j] = ChowClass::zero(ctx);
            else if (idx == 0)
                entry[i][j] = ChowClass::one(ctx);
            else if (idx <= ctx.box_cols())
                entry[i][j] = ChowClass::sigma(ctx, Partition{idx});
            else
                entry[i][j] = ChowClass::zero(ctx);  // single row longer than the box
        }
    std::sort(perm.begin(), perm.end());
    do {
        // permutation sign
        parity = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++parity;
        ChowClass term = ChowClass::one(ctx);
        bool zero = false;
        for (int i = 0; i < m && !zero; ++i) {
            if (entry[i][perm[i]].is_zero()) zero = true;
            else term = term * entry[i][perm[i]];
        }
        if (!zero) result = (parity % 2 == 0) ? result + term : result - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

}  // namespace chowfano
