#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowfano/bundle.hpp"
#include "chowfano/schubert.hpp"

namespace chowfano {

// Chow ring of P(E) over a base ring: free base-module on 1, h, ..., h^{r-1}
// with the relation sum_{i=0..r} c_i(E) h^{r-i} = 0. Pushforward of h^{r-1+k}
// is the degree-k piece of c(E)^{-1}; this is the unique convention consistent
// with the relation, and is pinned by the supporting-plane calibration below.
template <GradedRingElement B>
struct PBRingT {
    B base_one;
    int rank = 0;
    std::vector<B> chern;  // c_1..c_rank of E over the base
    int dim = 0;           // base dimension + rank - 1
    std::string label;
    std::vector<std::vector<B>> hpow;  // normal forms of h^m, m <= 2(rank-1)
    std::vector<B> pushforward_class;  // [c(E)^{-1}]_k, k = 0..dim

    bool same_as(const PBRingT& o) const {
        return rank == o.rank && dim == o.dim && chern == o.chern;
    }
};

template <GradedRingElement B>
using PBRingPtr = std::shared_ptr<const PBRingT<B>>;

template <GradedRingElement B>
class PBElemT {
public:
    PBElemT() = default;
    PBElemT(PBRingPtr<B> ring, std::vector<B> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != ring_->rank)
            throw std::invalid_argument("PBElemT: coefficient vector length != rank");
    }

    static PBElemT zero(const PBRingPtr<B>& ring) {
        const B z = ring->base_one - ring->base_one;
        return PBElemT(ring, std::vector<B>(ring->rank, z));
    }
    static PBElemT lift(const PBRingPtr<B>& ring, const B& base_elem) {
        PBElemT e = zero(ring);
        e.coeffs_[0] = base_elem;
        return e;
    }
    static PBElemT one(const PBRingPtr<B>& ring) { return lift(ring, ring->base_one); }
    // normal form of h^m for any m >= 0
    static PBElemT h_power(const PBRingPtr<B>& ring, int m);
    static PBElemT hyperplane(const PBRingPtr<B>& ring) { return h_power(ring, 1); }

    const PBRingPtr<B>& ring() const { return ring_; }
    const std::vector<B>& coeffs() const { return coeffs_; }
    const B& coeff(int j) const { return coeffs_.at(j); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    int ring_dimension() const { return ring_->dim; }
    PBElemT ring_one() const { return one(ring_); }
    PBElemT ring_zero() const { return zero(ring_); }

    PBElemT operator+(const PBElemT& o) const {
        check(o);
        std::vector<B> c = coeffs_;
        for (int j = 0; j < ring_->rank; ++j) c[j] = c[j] + o.coeffs_[j];
        return PBElemT(ring_, std::move(c));
    }
    PBElemT operator-(const PBElemT& o) const {
        check(o);
        std::vector<B> c = coeffs_;
        for (int j = 0; j < ring_->rank; ++j) c[j] = c[j] - o.coeffs_[j];
        return PBElemT(ring_, std::move(c));
    }
    PBElemT operator-() const {
        std::vector<B> c = coeffs_;
        for (auto& x : c) x = -x;
        return PBElemT(ring_, std::move(c));
    }
    PBElemT scaled(const Rat& s) const {
        std::vector<B> c = coeffs_;
        for (auto& x : c) x = x.scaled(s);
        return PBElemT(ring_, std::move(c));
    }

    PBElemT operator*(const PBElemT& o) const {
        check(o);
        const int r = ring_->rank;
        const B z = ring_->base_one - ring_->base_one;
        // convolve, then rewrite h^m for m >= r through the ring's table
        std::vector<B> conv(2 * r - 1, z);
        for (int i = 0; i < r; ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (int j = 0; j < r; ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                conv[i + j] = conv[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        std::vector<B> out(r, z);
        for (int m = 0; m < 2 * r - 1; ++m) {
            if (conv[m].is_zero()) continue;
            for (int t = 0; t < r; ++t) {
                if (ring_->hpow[m][t].is_zero()) continue;
                out[t] = out[t] + conv[m] * ring_->hpow[m][t];
            }
        }
        return PBElemT(ring_, std::move(out));
    }

    bool operator==(const PBElemT& o) const {
        return ring_->same_as(*o.ring_) && coeffs_ == o.coeffs_;
    }

    PBElemT graded_piece(int d) const {
        std::vector<B> c;
        c.reserve(ring_->rank);
        for (int j = 0; j < ring_->rank; ++j)
            c.push_back(d - j >= 0 ? coeffs_[j].graded_piece(d - j) : coeffs_[j] - coeffs_[j]);
        return PBElemT(ring_, std::move(c));
    }

    int max_degree() const {
        int best = -1;
        for (int j = 0; j < ring_->rank; ++j) {
            int md = coeffs_[j].max_degree();
            if (md >= 0) best = std::max(best, md + j);
        }
        return best;
    }

    bool is_homogeneous(int d) const {
        for (int j = 0; j < ring_->rank; ++j)
            if (!coeffs_[j].is_homogeneous(d - j) && !coeffs_[j].is_zero()) return false;
        return true;
    }

    // pi_*: drops h^j for j < r-1, h^{r-1} maps to 1
    B pushforward() const { return coeffs_[ring_->rank - 1]; }
    Rat integral() const { return pushforward().integral(); }

    std::string str(const std::string& hname = "h") const;

private:
    void check(const PBElemT& o) const {
        if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("PBElemT: ring mismatch");
    }
    PBRingPtr<B> ring_;
    std::vector<B> coeffs_;
};

template <GradedRingElement B>
PBRingPtr<B> make_proj_bundle_ring(const B& base_one, int rank, std::vector<B> chern,
                                   std::string label) {
    if (rank < 1) throw std::invalid_argument("make_proj_bundle_ring: rank must be >= 1");
    auto ring = std::make_shared<PBRingT<B>>();
    ring->base_one = base_one;
    ring->rank = rank;
    ring->chern = std::move(chern);
    ring->dim = base_one.ring_dimension() + rank - 1;
    ring->label = std::move(label);
    const B zero = base_one - base_one;
    while (static_cast<int>(ring->chern.size()) < rank) ring->chern.push_back(zero);

    // h^m in normal form, m = 0 .. 2(rank-1)
    ring->hpow.assign(2 * rank - 1, std::vector<B>(rank, zero));
    for (int m = 0; m < rank; ++m) ring->hpow[m][m] = base_one;
    for (int m = rank; m < 2 * rank - 1; ++m) {
        // shift h^{m-1} by one power of h, rewriting the overflow via
        // h^rank = -(c_1 h^{rank-1} + ... + c_rank)
        const auto& prev = ring->hpow[m - 1];
        std::vector<B> cur(rank, zero);
        for (int t = 0; t + 1 < rank; ++t) cur[t + 1] = prev[t];
        const B& top = prev[rank - 1];
        if (!top.is_zero())
            for (int i = 1; i <= rank; ++i)
                cur[rank - i] = cur[rank - i] - top * ring->chern[i - 1];
        ring->hpow[m] = std::move(cur);
    }

    // [c(E)^{-1}]_k up to the total dimension
    ring->pushforward_class.assign(ring->dim + 1, zero);
    ring->pushforward_class[0] = base_one;
    for (int n = 1; n <= ring->dim; ++n) {
        B piece = zero;
        for (int i = 1; i <= std::min(n, rank); ++i) {
            if (ring->chern[i - 1].is_zero()) continue;
            piece = piece - ring->chern[i - 1] * ring->pushforward_class[n - i];
        }
        ring->pushforward_class[n] = piece;
    }
    return ring;
}

template <GradedRingElement B>
PBElemT<B> PBElemT<B>::h_power(const PBRingPtr<B>& ring, int m) {
    if (m < 0) throw std::invalid_argument("h_power: negative exponent");
    if (m < ring->rank) {
        PBElemT e = zero(ring);
        e.coeffs_[m] = ring->base_one;
        return e;
    }
    if (m <= 2 * ring->rank - 2) return PBElemT(ring, ring->hpow[m]);
    PBElemT h = hyperplane(ring);
    PBElemT acc = PBElemT(ring, ring->hpow[2 * ring->rank - 2]);
    for (int t = 2 * ring->rank - 2; t < m; ++t) acc = acc * h;
    return acc;
}

// pi_*(h^m) for any m, via the ring's inverse-total-class table
template <GradedRingElement B>
B pushforward_h_power(const PBRingPtr<B>& ring, int m) {
    const B zero = ring->base_one - ring->base_one;
    if (m < ring->rank - 1) return zero;
    int k = m - (ring->rank - 1);
    if (k > ring->dim) return zero;
    return ring->pushforward_class[k];
}

template <GradedRingElement B>
PBElemT<B> lift_bundle_class(const PBRingPtr<B>& ring, const B& c) {
    return PBElemT<B>::lift(ring, c);
}

template <GradedRingElement B>
FormalBundle<PBElemT<B>> lift_bundle(const PBRingPtr<B>& ring, const FormalBundle<B>& e) {
    return {e.rank, PBElemT<B>::lift(ring, e.total)};
}

template <GradedRingElement B>
std::string PBElemT<B>::str(const std::string& hname) const {
    int nonzero = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) ++nonzero;
    std::string out;
    for (int j = 0; j < ring_->rank; ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs_[j].str();
        const bool compound = c.find(' ') != std::string::npos;
        const std::string hpart = j == 0 ? "" : (j == 1 ? hname : hname + "^" + std::to_string(j));
        if (j == 0)
            out += compound && nonzero > 1 ? "(" + c + ")" : c;
        else if (c == "1")
            out += hpart;
        else
            out += (compound ? "(" + c + ")" : c) + "*" + hpart;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// the two concrete rings of the conic parameter space
// ---------------------------------------------------------------------------

using HilbElem = PBElemT<ChowClass>;
using HilbRing = PBRingPtr<ChowClass>;
using TowerElem = PBElemT<HilbElem>;
using TowerRing = PBRingPtr<HilbElem>;

// P(S^2 T*) over G(3,6): the Hilbert scheme of conics in P^5, dimension 14
HilbRing make_conic_hilbert_ring();

struct ConicBundles {
    FormalBundle<HilbElem> Q;  // rank 5, c = c(S^2T*)/(1-h)
    FormalBundle<HilbElem> M;  // rank 7, c = c(S^3T*)/c(T*(-1))
};
ConicBundles hilbert_scheme_bundles(const HilbRing& ring);

// P(pi^* T*) over the conic Hilbert scheme (the universal supporting plane);
// construction asserts the pushforward calibration rho_* H^3 = -sigma_1,
// rho_* H^4 = sigma_11 and throws if it fails
TowerRing make_supporting_plane_tower(const HilbRing& base);

}  // namespace chowfano
