#include "chowfano/bundle.hpp"

#include <functional>
#include <mutex>
#include <sstream>

#include "chowfano/poly.hpp"

namespace chowfano {

long long sym_rank(long long rank, int d) {
    return binomial(rank + d - 1, d).convert_to<long long>();
}

long long wedge_rank(long long rank, int d) { return binomial(rank, d).convert_to<long long>(); }

namespace {

// roots of the constructed bundle, each a vector of root multiplicities over
// the underlying variables
std::vector<std::vector<int>> multiset_sums(int rank, int d) {
    std::vector<std::vector<int>> roots;
    std::vector<int> pick(rank, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == rank - 1) {
            pick[var] = left;
            roots.push_back(pick);
            return;
        }
        for (int t = 0; t <= left; ++t) {
            pick[var] = t;
            rec(var + 1, left - t);
        }
    };
    rec(0, d);
    return roots;
}

std::vector<std::vector<int>> subset_sums(int rank, int d) {
    std::vector<std::vector<int>> roots;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::vector<int> pick(rank, 0);
        for (int i : idx) pick[i] = 1;
        roots.push_back(pick);
        int i = d - 1;
        while (i >= 0 && idx[i] == rank - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return roots;
}

Poly product_of_root_factors(int nvars, const std::vector<std::vector<int>>& roots, int maxdeg) {
    Poly total = Poly::constant(nvars, 1);
    for (const auto& root : roots) {
        Poly factor = Poly::constant(nvars, 1);
        for (int v = 0; v < nvars; ++v)
            if (root[v]) factor = factor + Poly::variable(nvars, v).scaled(root[v]);
        total = total.mul_truncated(factor, maxdeg);
    }
    return total;
}

UniversalPoly reduce_single_group(const Poly& p, int r) {
    UniversalPoly out;
    for (const auto& [kexp, cof] : symmetric_reduce(p, 0, r)) {
        if (cof.is_zero()) continue;
        // cof must be a constant here
        Rat c = cof.coeff(Poly::Expo(p.nvars(), 0));
        if (c != 0) out.emplace(kexp, c);
    }
    return out;
}

// two blocks: group terms by the B-monomial, reduce the symmetric A-part of
// each, regroup by A-exponent and reduce the (symmetric) B-parts
UniversalPoly reduce_two_groups(const Poly& p, int ra, int rb) {
    const int nvars = ra + rb;
    std::map<std::vector<int>, Poly> by_b;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> bpart(e.begin() + ra, e.end());
        Poly::Expo apart = e;
        for (int j = 0; j < rb; ++j) apart[ra + j] = 0;
        auto [it, inserted] = by_b.emplace(bpart, Poly(nvars));
        it->second.add_term(apart, c);
    }
    std::map<std::vector<int>, Poly> by_ak;  // a-exponent -> poly in b-vars
    for (const auto& [bpart, apoly] : by_b) {
        Poly::Expo bexpo(nvars, 0);
        for (int j = 0; j < rb; ++j) bexpo[ra + j] = bpart[j];
        for (const auto& [ak, cof] : symmetric_reduce(apoly, 0, ra)) {
            Rat c = cof.coeff(Poly::Expo(nvars, 0));
            if (c == 0) continue;
            auto [it, inserted] = by_ak.emplace(ak, Poly(nvars));
            it->second.add_term(bexpo, c);
        }
    }
    UniversalPoly out;
    for (const auto& [ak, bpoly] : by_ak) {
        for (const auto& [bk, cof] : symmetric_reduce(bpoly, ra, rb)) {
            Rat c = cof.coeff(Poly::Expo(nvars, 0));
            if (c == 0) continue;
            std::vector<int> key = ak;
            key.insert(key.end(), bk.begin(), bk.end());
            out.emplace(std::move(key), c);
        }
    }
    return out;
}

struct UniversalCache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const UniversalPoly>> table;
};

UniversalCache& universal_cache() {
    static UniversalCache c;
    return c;
}

const UniversalPoly& cached(const std::string& key, const std::function<UniversalPoly()>& make) {
    auto& cache = universal_cache();
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it == cache.table.end())
        it = cache.table.emplace(key, std::make_shared<UniversalPoly>(make())).first;
    return *it->second;
}

std::string cache_key(const char* kind, int a, int b, int maxdeg) {
    std::ostringstream os;
    os << kind << ':' << a << ':' << b << ':' << maxdeg;
    return os.str();
}

}  // namespace

const UniversalPoly& universal_sym(int rank, int d, int maxdeg) {
    return cached(cache_key("sym", rank, d, maxdeg), [&] {
        Poly p = product_of_root_factors(rank, multiset_sums(rank, d), maxdeg);
        return reduce_single_group(p, rank);
    });
}

const UniversalPoly& universal_wedge(int rank, int d, int maxdeg) {
    return cached(cache_key("wedge", rank, d, maxdeg), [&] {
        Poly p = product_of_root_factors(rank, subset_sums(rank, d), maxdeg);
        return reduce_single_group(p, rank);
    });
}

const UniversalPoly& universal_tensor(int rank_a, int rank_b, int maxdeg) {
    return cached(cache_key("tensor", rank_a, rank_b, maxdeg), [&] {
        const int nvars = rank_a + rank_b;
        std::vector<std::vector<int>> roots;
        for (int i = 0; i < rank_a; ++i)
            for (int j = 0; j < rank_b; ++j) {
                std::vector<int> pick(nvars, 0);
                pick[i] = 1;
                pick[rank_a + j] = 1;
                roots.push_back(std::move(pick));
            }
        Poly p = product_of_root_factors(nvars, roots, maxdeg);
        return reduce_two_groups(p, rank_a, rank_b);
    });
}

}  // namespace chowfano
