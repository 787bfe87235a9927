#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowfano/poly.hpp"
#include "chowfano/rational.hpp"

namespace chowfano {

// Free graded polynomial ring Q[g_1, ..., g_m] with prescribed generator
// degrees, truncated above max_degree. The generic base for universal Chern
// class identities ("rank 3 with free c1, c2, c3").
struct FreeRing {
    std::vector<std::string> names;
    std::vector<int> degrees;
    int max_degree = 0;

    bool operator==(const FreeRing& o) const {
        return names == o.names && degrees == o.degrees && max_degree == o.max_degree;
    }
};

using FreeRingPtr = std::shared_ptr<const FreeRing>;

inline FreeRingPtr make_free_ring(std::vector<std::string> names, std::vector<int> degrees,
                                  int max_degree) {
    if (names.size() != degrees.size()) throw std::invalid_argument("make_free_ring: size mismatch");
    auto r = std::make_shared<FreeRing>();
    r->names = std::move(names);
    r->degrees = std::move(degrees);
    r->max_degree = max_degree;
    return r;
}

// generators named c1..cr of degree 1..r
inline FreeRingPtr make_chern_ring(int r, int max_degree) {
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 1; i <= r; ++i) {
        names.push_back("c" + std::to_string(i));
        degrees.push_back(i);
    }
    return make_free_ring(std::move(names), std::move(degrees), max_degree);
}

class FreeElement {
public:
    FreeElement() = default;
    FreeElement(FreeRingPtr ring, Poly poly) : ring_(std::move(ring)), poly_(std::move(poly)) {
        poly_ = poly_.truncated(ring_->max_degree, ring_->degrees);
    }
    static FreeElement generator(const FreeRingPtr& ring, int index) {
        return FreeElement(ring, Poly::variable(static_cast<int>(ring->names.size()), index));
    }
    static FreeElement constant(const FreeRingPtr& ring, const Rat& c) {
        return FreeElement(ring, Poly::constant(static_cast<int>(ring->names.size()), c));
    }

    const FreeRingPtr& ring() const { return ring_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    int ring_dimension() const { return ring_->max_degree; }

    FreeElement ring_one() const { return constant(ring_, 1); }
    FreeElement ring_zero() const { return FreeElement(ring_, Poly(static_cast<int>(ring_->names.size()))); }

    FreeElement operator+(const FreeElement& o) const { return combined(o, poly_ + o.poly_); }
    FreeElement operator-(const FreeElement& o) const { return combined(o, poly_ - o.poly_); }
    FreeElement operator-() const { return FreeElement(ring_, -poly_); }
    FreeElement operator*(const FreeElement& o) const {
        check(o);
        return FreeElement(ring_, poly_.mul_truncated(o.poly_, ring_->max_degree, ring_->degrees));
    }
    FreeElement scaled(const Rat& s) const { return FreeElement(ring_, poly_.scaled(s)); }
    bool operator==(const FreeElement& o) const { return *ring_ == *o.ring_ && poly_ == o.poly_; }

    FreeElement graded_piece(int d) const {
        Poly p(static_cast<int>(ring_->names.size()));
        for (const auto& [e, c] : poly_.terms()) {
            int deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * ring_->degrees[i];
            if (deg == d) p.add_term(e, c);
        }
        return FreeElement(ring_, std::move(p));
    }

    int max_degree() const {
        int best = -1;
        for (const auto& [e, c] : poly_.terms()) {
            int deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * ring_->degrees[i];
            best = std::max(best, deg);
        }
        return best;
    }

    bool is_homogeneous(int d) const {
        for (const auto& [e, c] : poly_.terms()) {
            int deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * ring_->degrees[i];
            if (deg != d) return false;
        }
        return true;
    }

    std::string str() const { return poly_.str(ring_->names); }

private:
    void check(const FreeElement& o) const {
        if (!(*ring_ == *o.ring_)) throw std::invalid_argument("FreeElement: ring mismatch");
    }
    FreeElement combined(const FreeElement& o, Poly p) const {
        check(o);
        return FreeElement(ring_, std::move(p));
    }

    FreeRingPtr ring_;
    Poly poly_;
};

}  // namespace chowfano
