#pragma once

#include <concepts>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "chowfano/rational.hpp"

namespace chowfano {

template <typename R>
concept GradedRingElement = requires(const R& a, const R& b, const Rat& s, int d) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a.scaled(s) } -> std::convertible_to<R>;
    { a.graded_piece(d) } -> std::convertible_to<R>;
    { a.ring_one() } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.ring_dimension() } -> std::convertible_to<int>;
    { a.max_degree() } -> std::convertible_to<int>;
    { a == b } -> std::convertible_to<bool>;
};

// rank plus total Chern class; c_0 = 1 is part of `total`
template <GradedRingElement R>
struct FormalBundle {
    long long rank = 0;
    R total;

    R chern(int i) const { return total.graded_piece(i); }
    std::vector<R> chern_list() const {
        std::vector<R> c;
        for (int i = 1; i <= total.ring_dimension(); ++i) c.push_back(total.graded_piece(i));
        return c;
    }
};

template <GradedRingElement R>
FormalBundle<R> trivial_bundle(const R& one_of_ring, long long rank) {
    return {rank, one_of_ring.ring_one()};
}

// inverse of a total class with constant term 1, truncated at the ring dimension
template <GradedRingElement R>
R inverse_total(const R& u) {
    const R one = u.ring_one();
    if (!(u.graded_piece(0) == one))
        throw std::invalid_argument("inverse_total: constant term must be 1");
    const int dim = u.ring_dimension();
    std::vector<R> v;
    v.push_back(one);
    R acc = one;
    for (int n = 1; n <= dim; ++n) {
        R piece = one - one;  // zero
        for (int i = 1; i <= n; ++i) {
            R ui = u.graded_piece(i);
            if (ui.is_zero()) continue;
            piece = piece - ui * v[n - i];
        }
        v.push_back(piece);
        acc = acc + piece;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// RootWorkspace: universal Chern-class formulas by formal-root expansion.
//
// A universal polynomial maps elementary-symmetric exponents (one block per
// bundle argument) to rational coefficients; substitution evaluates it on the
// actual Chern classes in any graded ring. Workspaces are created per call;
// computed universals are cached behind a mutex.
// ---------------------------------------------------------------------------

// key: exponents of e_1..e_r of group A, then e_1..e_s of group B
using UniversalPoly = std::map<std::vector<int>, Rat>;

const UniversalPoly& universal_sym(int rank, int d, int maxdeg);
const UniversalPoly& universal_wedge(int rank, int d, int maxdeg);
const UniversalPoly& universal_tensor(int rank_a, int rank_b, int maxdeg);

long long sym_rank(long long rank, int d);
long long wedge_rank(long long rank, int d);

template <GradedRingElement R>
R substitute_universal(const UniversalPoly& u, const std::vector<R>& ca, const std::vector<R>& cb,
                       const R& one) {
    const std::size_t ra = ca.size(), rb = cb.size();
    // lazily cached powers of each class
    std::vector<std::vector<R>> pow_a(ra, {one}), pow_b(rb, {one});
    auto power = [&](std::vector<R>& powers, const R& base, int k) -> const R& {
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * base);
        return powers[k];
    };
    R acc = one - one;
    for (const auto& [expo, coeff] : u) {
        if (expo.size() != ra + rb) throw std::invalid_argument("substitute_universal: bad arity");
        R term = one.scaled(coeff);
        for (std::size_t i = 0; i < ra; ++i)
            if (expo[i]) term = term * power(pow_a[i], ca[i], expo[i]);
        for (std::size_t j = 0; j < rb; ++j)
            if (expo[ra + j]) term = term * power(pow_b[j], cb[j], expo[ra + j]);
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// bundle constructions
// ---------------------------------------------------------------------------

template <GradedRingElement R>
FormalBundle<R> whitney_sum(const FormalBundle<R>& e, const FormalBundle<R>& f) {
    return {e.rank + f.rank, e.total * f.total};
}

template <GradedRingElement R>
FormalBundle<R> dual(const FormalBundle<R>& e) {
    R total = e.total.graded_piece(0);
    for (int i = 1; i <= e.total.ring_dimension(); ++i) {
        R ci = e.total.graded_piece(i);
        if (ci.is_zero()) continue;
        total = (i % 2 == 0) ? total + ci : total - ci;
    }
    return {e.rank, total};
}

template <GradedRingElement R>
FormalBundle<R> tensor_line(const FormalBundle<R>& e, const R& h) {
    if (!h.is_zero() && !h.is_homogeneous(1))
        throw std::invalid_argument("tensor_line: twist class must be homogeneous of degree 1");
    const R one = e.total.ring_one();
    const int r = static_cast<int>(e.rank);
    const auto& u = universal_tensor(r, 1, e.total.ring_dimension());
    std::vector<R> ca;
    for (int i = 1; i <= r; ++i) ca.push_back(e.total.graded_piece(i));
    return {e.rank, substitute_universal(u, ca, {h}, one)};
}

template <GradedRingElement R>
FormalBundle<R> sym_power(const FormalBundle<R>& e, int d) {
    if (d < 1) throw std::invalid_argument("sym_power: d must be positive");
    if (d == 1) return e;
    const R one = e.total.ring_one();
    const int r = static_cast<int>(e.rank);
    const auto& u = universal_sym(r, d, e.total.ring_dimension());
    std::vector<R> ca;
    for (int i = 1; i <= r; ++i) ca.push_back(e.total.graded_piece(i));
    return {sym_rank(e.rank, d), substitute_universal(u, ca, {}, one)};
}

template <GradedRingElement R>
FormalBundle<R> wedge_power(const FormalBundle<R>& e, int d) {
    if (d < 1) throw std::invalid_argument("wedge_power: d must be positive");
    if (d > e.rank) throw std::invalid_argument("wedge_power: d exceeds rank");
    if (d == 1) return e;
    const R one = e.total.ring_one();
    const int r = static_cast<int>(e.rank);
    const auto& u = universal_wedge(r, d, e.total.ring_dimension());
    std::vector<R> ca;
    for (int i = 1; i <= r; ++i) ca.push_back(e.total.graded_piece(i));
    return {wedge_rank(e.rank, d), substitute_universal(u, ca, {}, one)};
}

// s(E) = c(E^v)^{-1}; the sign convention making s_k(T*) = sigma_{1^k} on the
// Grassmannian and matching the projective-bundle pushforward calibration
template <GradedRingElement R>
R segre(const FormalBundle<R>& e) {
    return inverse_total(dual(e).total);
}

template <GradedRingElement R>
FormalBundle<R> chern_class_of_hom(const FormalBundle<R>& e, const FormalBundle<R>& f) {
    if (e.rank * f.rank > 16)
        throw std::invalid_argument("chern_class_of_hom: rank product above supported envelope");
    const R one = e.total.ring_one();
    FormalBundle<R> ed = dual(e);
    const auto& u = universal_tensor(static_cast<int>(e.rank), static_cast<int>(f.rank),
                                     e.total.ring_dimension());
    std::vector<R> ca, cb;
    for (int i = 1; i <= e.rank; ++i) ca.push_back(ed.total.graded_piece(i));
    for (int j = 1; j <= f.rank; ++j) cb.push_back(f.total.graded_piece(j));
    return {e.rank * f.rank, substitute_universal(u, ca, cb, one)};
}

}  // namespace chowfano
