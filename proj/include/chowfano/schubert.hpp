#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "chowfano/partition.hpp"
#include "chowfano/rational.hpp"

namespace chowfano {

// A(G(k,n)) in the sigma-basis with c_i(T*) = sigma_i. Internally sigma_lambda
// is the Giambelli determinant det(c_{lambda_i+j-i}(T*)); see
// docs/conventions.md, this is the transpose of the usual textbook labels.
struct GrassContext {
    int k = 0;  // rank of the tautological subbundle T
    int n = 0;  // ambient dimension

    GrassContext() = default;
    GrassContext(int k_, int n_);

    int box_rows() const { return k; }
    int box_cols() const { return n - k; }
    int dimension() const { return k * (n - k); }
    Partition top() const;  // (n-k)^k

    bool operator==(const GrassContext& o) const { return k == o.k && n == o.n; }
    bool operator!=(const GrassContext& o) const { return !(*this == o); }
    std::string name() const;
};

// Littlewood-Richardson coefficient c^nu_{lambda,mu}, box-free.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Full product expansion s_lambda * s_mu = sum c^nu s_nu over all nu (no box
// truncation); memoized, safe for concurrent use.
const std::map<Partition, long long>& lr_expand(const Partition& lambda, const Partition& mu);

// Memo cache persistence (the CLI owns the file policy). A corrupt or
// unreadable file is ignored; returns number of records loaded/saved.
std::size_t lr_cache_load(const std::string& path, std::string* warning = nullptr);
std::size_t lr_cache_save(const std::string& path);
std::size_t lr_cache_size();
void lr_cache_clear();

class ChowClass {
public:
    ChowClass() = default;
    explicit ChowClass(GrassContext ctx) : ctx_(ctx) {}
    static ChowClass sigma(GrassContext ctx, const Partition& lambda, const Rat& coeff = 1);
    static ChowClass one(GrassContext ctx) { return sigma(ctx, {}); }
    static ChowClass zero(GrassContext ctx) { return ChowClass(ctx); }

    const GrassContext& context() const { return ctx_; }
    int ring_dimension() const { return ctx_.dimension(); }
    ChowClass ring_one() const { return one(ctx_); }
    ChowClass ring_zero() const { return zero(ctx_); }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    Rat coeff(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator-() const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass scaled(const Rat& s) const;
    bool operator==(const ChowClass& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

    ChowClass graded_piece(int d) const;
    int max_degree() const;  // -1 when zero
    bool is_homogeneous(int d) const;

    // coefficient of the top class sigma_{(n-k)^k}
    Rat integral() const;

    std::string str() const;  // "15840*s[3,3,3] + ..."

private:
    void add(const Partition& p, const Rat& c);
    GrassContext ctx_;
    std::map<Partition, Rat> terms_;
    friend ChowClass multiply(const ChowClass&, const ChowClass&);
};

inline ChowClass multiply(const ChowClass& a, const ChowClass& b) { return a * b; }
inline Rat integrate(const ChowClass& a) { return a.integral(); }

// reversed complement in the k x (n-k) box
Partition dual_partner(const Partition& lambda, const GrassContext& ctx);

// Giambelli determinant det(sigma_{lambda_i + j - i}) evaluated in the ring
ChowClass giambelli(const GrassContext& ctx, const Partition& lambda);

enum class Tautological { dual_sub, sub, quotient };

}  // namespace chowfano

#include "chowfano/bundle.hpp"

namespace chowfano {

// c(T*) = 1 + sigma_1 + ... + sigma_k; requires k <= n-k, where this labeling
// is consistent (all supported contexts satisfy it)
FormalBundle<ChowClass> tautological_chern(const GrassContext& ctx, Tautological which);

// tangent bundle Hom(T, Q), rank k(n-k)
FormalBundle<ChowClass> tangent_bundle(const GrassContext& ctx);

}  // namespace chowfano
