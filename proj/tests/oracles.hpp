#pragma once

// Test-only oracles, deliberately independent of the production algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "chowfano/freering.hpp"
#include "chowfano/partition.hpp"
#include "chowfano/poly.hpp"

namespace oracles {

using chowfano::FormalBundle;
using chowfano::FreeElement;
using chowfano::Partition;
using chowfano::Poly;
using chowfano::Rat;

// ---------------------------------------------------------------------------
// naive Littlewood-Richardson count: place every permutation of the content
// into the skew cells and test the tableau conditions afterwards
// ---------------------------------------------------------------------------

inline bool is_lattice_word(const std::vector<int>& word) {
    std::map<int, int> count;
    for (int v : word) {
        count[v]++;
        if (v > 1 && count[v] > count[v - 1]) return false;
    }
    return true;
}

inline long long naive_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!nu.contains(lambda)) return 0;
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;

    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(nu.length()); ++r)
        for (int c = lambda.part(r); c < nu.part(r); ++c) cells.emplace_back(r, c);

    std::vector<int> content;
    for (int i = 0; i < static_cast<int>(mu.length()); ++i)
        for (int j = 0; j < mu.part(i); ++j) content.push_back(i + 1);
    if (content.size() != cells.size()) return 0;
    if (content.empty()) return 1;

    std::sort(content.begin(), content.end());
    long long found = 0;
    do {
        std::map<std::pair<int, int>, int> board;
        for (std::size_t i = 0; i < cells.size(); ++i) board[cells[i]] = content[i];
        bool ok = true;
        for (const auto& [cell, v] : board) {
            auto [r, c] = cell;
            auto left = board.find({r, c - 1});
            if (left != board.end() && left->second > v) ok = false;
            auto up = board.find({r - 1, c});
            if (up != board.end() && up->second >= v) ok = false;
        }
        if (!ok) continue;
        // reverse reading word: rows right to left, top to bottom
        std::vector<int> word;
        for (int r = 0; r < static_cast<int>(nu.length()); ++r)
            for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) word.push_back(board[{r, c}]);
        if (is_lattice_word(word)) ++found;
    } while (std::next_permutation(content.begin(), content.end()));
    return found;
}

// ---------------------------------------------------------------------------
// Schur polynomials in a small number of variables via semistandard tableau
// enumeration, and Schur-basis expansion of products
// ---------------------------------------------------------------------------

inline Poly schur_poly(const Partition& shape, int nvars) {
    Poly out(nvars);
    if (static_cast<int>(shape.length()) > nvars) return out;
    if (shape.empty()) return Poly::constant(nvars, 1);

    std::vector<std::vector<int>> t(shape.length());
    for (std::size_t r = 0; r < shape.length(); ++r) t[r].assign(shape.part(static_cast<int>(r)), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == t.size()) {
            Poly::Expo e(nvars, 0);
            for (const auto& row : t)
                for (int v : row) ++e[v - 1];
            out.add_term(e, 1);
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc >= t[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= nvars; ++v) {
            t[r][c] = v;
            rec(nr, nc);
        }
        t[r][c] = 0;
    };
    rec(0, 0);
    return out;
}

// expand a symmetric polynomial in the Schur basis by repeatedly stripping the
// lex-leading monomial
inline std::map<Partition, Rat> schur_expand(Poly p, int nvars) {
    std::map<Partition, Rat> out;
    std::map<Partition, Poly> cache;
    while (!p.is_zero()) {
        auto lead = p.terms().rbegin();
        std::vector<int> expo = lead->first;
        Partition shape(expo);
        Rat coeff = lead->second;
        auto it = cache.find(shape);
        if (it == cache.end()) it = cache.emplace(shape, schur_poly(shape, nvars)).first;
        p = p - it->second.scaled(coeff);
        out[shape] += coeff;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// symmetric/exterior powers through power sums (Newton bookkeeping); the
// second, independent route the root-expansion engine is checked against
// ---------------------------------------------------------------------------

inline chowfano::BigInt BigIntPow2(int k) {
    chowfano::BigInt b = 1;
    return b << k;
}
inline chowfano::BigInt BigIntPow3(int k) {
    chowfano::BigInt b = 1;
    for (int i = 0; i < k; ++i) b *= 3;
    return b;
}

struct PowerSums {
    // p_0 = rank; p_k for k = 1..n derived from Chern classes via Newton
    std::vector<FreeElement> p;
};

inline PowerSums power_sums(const FormalBundle<FreeElement>& e, int upto) {
    PowerSums out;
    const FreeElement one = e.total.ring_one();
    out.p.push_back(one.scaled(Rat(e.rank)));
    for (int k = 1; k <= upto; ++k) {
        // p_k = c1 p_{k-1} - c2 p_{k-2} + ... + (-1)^{k-1} k c_k
        FreeElement acc = one - one;
        for (int i = 1; i < k; ++i) {
            FreeElement ci = e.chern(i);
            if (ci.is_zero()) continue;
            FreeElement term = ci * out.p[k - i];
            acc = i % 2 == 1 ? acc + term : acc - term;
        }
        FreeElement ck = e.chern(k).scaled(Rat(k));
        acc = k % 2 == 1 ? acc + ck : acc - ck;
        out.p.push_back(acc);
    }
    return out;
}

// total Chern class from power sums: k c_k = sum_{i=1..k} (-1)^{i-1} p_i c_{k-i}
inline FreeElement chern_from_power_sums(const std::vector<FreeElement>& p, int upto,
                                         const FreeElement& one) {
    std::vector<FreeElement> c = {one};
    FreeElement total = one;
    for (int k = 1; k <= upto; ++k) {
        FreeElement acc = one - one;
        for (int i = 1; i <= k; ++i) {
            FreeElement term = p[i] * c[k - i];
            acc = i % 2 == 1 ? acc + term : acc - term;
        }
        c.push_back(acc.scaled(Rat(1) / k));
        total = total + c.back();
    }
    return total;
}

// power sums of Sym^d and Wedge^d for d <= 3, from the cycle index of S_d
inline FormalBundle<FreeElement> sym_power_newton(const FormalBundle<FreeElement>& e, int d,
                                                  int upto) {
    const FreeElement one = e.total.ring_one();
    auto ps = power_sums(e, upto);
    auto P = [&](int k) { return ps.p[k]; };
    auto binom_c = [&](const Rat& r) { return one.scaled(r); };
    std::vector<FreeElement> q;  // power sums of the constructed bundle
    q.push_back(one.scaled(Rat(chowfano::sym_rank(e.rank, d))));
    for (int k = 1; k <= upto; ++k) {
        FreeElement acc = one - one;
        if (d == 2) {
            // (1/2)(2^k p_k + sum_m C(k,m) p_m p_{k-m})
            acc = P(k).scaled(Rat(BigIntPow2(k)));
            for (int m = 0; m <= k; ++m)
                acc = acc + P(m) * P(k - m) * binom_c(Rat(chowfano::binomial(k, m)));
            acc = acc.scaled(Rat(1, 2));
        } else if (d == 3) {
            // (1/6)(A + 3B + 2C) over ordered triple/pair/single sums
            FreeElement a = one - one;
            for (int x = 0; x <= k; ++x)
                for (int y = 0; x + y <= k; ++y) {
                    int z = k - x - y;
                    Rat multinom = Rat(chowfano::binomial(k, x)) * Rat(chowfano::binomial(k - x, y));
                    a = a + P(x) * P(y) * P(z) * binom_c(multinom);
                }
            FreeElement b = one - one;
            for (int m = 0; m <= k; ++m)
                b = b + P(m).scaled(Rat(BigIntPow2(m)) * Rat(chowfano::binomial(k, m))) * P(k - m);
            FreeElement cterm = P(k).scaled(Rat(BigIntPow3(k)));
            acc = (a + b.scaled(3) + cterm.scaled(2)).scaled(Rat(1, 6));
        } else {
            throw std::invalid_argument("sym_power_newton: d <= 3 only");
        }
        q.push_back(acc);
    }
    return {chowfano::sym_rank(e.rank, d), chern_from_power_sums(q, upto, one)};
}

inline FormalBundle<FreeElement> wedge_power_newton(const FormalBundle<FreeElement>& e, int d,
                                                    int upto) {
    const FreeElement one = e.total.ring_one();
    auto ps = power_sums(e, upto);
    auto P = [&](int k) { return ps.p[k]; };
    std::vector<FreeElement> q;
    q.push_back(one.scaled(Rat(chowfano::wedge_rank(e.rank, d))));
    for (int k = 1; k <= upto; ++k) {
        FreeElement acc = one - one;
        if (d == 2) {
            // (1/2)(sum_m C(k,m) p_m p_{k-m} - 2^k p_k)
            for (int m = 0; m <= k; ++m)
                acc = acc + P(m) * P(k - m) * one.scaled(Rat(chowfano::binomial(k, m)));
            acc = (acc - P(k).scaled(Rat(BigIntPow2(k)))).scaled(Rat(1, 2));
        } else if (d == 3) {
            // (1/6)(A - 3B + 2C)
            FreeElement a = one - one;
            for (int x = 0; x <= k; ++x)
                for (int y = 0; x + y <= k; ++y) {
                    int z = k - x - y;
                    Rat multinom = Rat(chowfano::binomial(k, x)) * Rat(chowfano::binomial(k - x, y));
                    a = a + P(x) * P(y) * P(z) * one.scaled(multinom);
                }
            FreeElement b = one - one;
            for (int m = 0; m <= k; ++m)
                b = b + P(m).scaled(Rat(BigIntPow2(m)) * Rat(chowfano::binomial(k, m))) * P(k - m);
            FreeElement cterm = P(k).scaled(Rat(BigIntPow3(k)));
            acc = (a - b.scaled(3) + cterm.scaled(2)).scaled(Rat(1, 6));
        } else {
            throw std::invalid_argument("wedge_power_newton: d <= 3 only");
        }
        q.push_back(acc);
    }
    return {chowfano::wedge_rank(e.rank, d), chern_from_power_sums(q, upto, one)};
}

}  // namespace oracles
