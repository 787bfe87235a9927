#include "chowfano/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chowfano {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    Expo e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(int nvars, Expo e, const Rat& c) {
    Poly p(nvars);
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("monomial: bad exponent length");
    p.add_term(e, c);
    return p;
}

Rat Poly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    Poly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
    return p;
}

Poly Poly::operator-() const {
    Poly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly Poly::operator*(const Poly& o) const { return mul_truncated(o, -1); }

Poly Poly::scaled(const Rat& s) const {
    Poly p(nvars_);
    if (s == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
    return p;
}

int Poly::wdeg(const Expo& e, const std::vector<int>& weights) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (weights.empty() ? 1 : weights[i]);
    return d;
}

Poly Poly::mul_truncated(const Poly& o, int maxdeg, const std::vector<int>& weights) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly mul: variable count mismatch");
    Poly p(nvars_);
    Expo e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            if (maxdeg >= 0 && wdeg(e, weights) > maxdeg) continue;
            p.add_term(e, ca * cb);
        }
    return p;
}

Poly Poly::truncated(int maxdeg, const std::vector<int>& weights) const {
    Poly p(nvars_);
    for (const auto& [e, c] : terms_)
        if (wdeg(e, weights) <= maxdeg) p.terms_.emplace(e, c);
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Poly Poly::substitute(int index, const Rat& value) const {
    Poly p(nvars_);
    for (const auto& [e, c] : terms_) {
        Rat f = c;
        for (int k = 0; k < e[index]; ++k) f *= value;
        Expo e2 = e;
        e2[index] = 0;
        p.add_term(e2, f);
    }
    return p;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: bad point");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += rat_to_string(c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            out += "*" + names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

Poly elementary_symmetric(int nvars, int first, int count, int k) {
    if (k < 0 || k > count) return Poly(nvars);
    Poly p(nvars);
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Poly::Expo e(nvars, 0);
        for (int i : idx) e[first + i] = 1;
        p.add_term(e, 1);
        int i = k - 1;
        while (i >= 0 && idx[i] == count - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (k == 0) p.add_term(Poly::Expo(nvars, 0), 1);
    return p;
}

namespace {

std::vector<int> block_expo(const Poly::Expo& e, int first, int count) {
    return std::vector<int>(e.begin() + first, e.begin() + first + count);
}

// largest block-exponent under lex, scanning all terms
std::vector<int> block_leading(const Poly::Terms& t, int first, int count) {
    std::vector<int> best;
    for (const auto& [e, c] : t) {
        auto b = block_expo(e, first, count);
        if (best.empty() || b > best) best = std::move(b);
    }
    return best;
}

}  // namespace

std::map<std::vector<int>, Poly> symmetric_reduce(const Poly& p, int first, int count) {
    const int nvars = p.nvars();
    std::map<std::vector<int>, Poly> out;
    if (count == 0) {
        if (!p.is_zero()) out.emplace(std::vector<int>{}, p);
        return out;
    }

    std::vector<Poly> elem(count + 1);
    for (int k = 0; k <= count; ++k) elem[k] = elementary_symmetric(nvars, first, count, k);

    Poly rem = p;
    while (!rem.is_zero()) {
        std::vector<int> alpha = block_leading(rem.terms(), first, count);
        for (int i = 1; i < count; ++i)
            if (alpha[i] > alpha[i - 1])
                throw std::invalid_argument("symmetric_reduce: input not symmetric in block");

        // collect every term whose block part equals alpha: the cofactor poly
        Poly cof(nvars);
        for (const auto& [e, c] : rem.terms()) {
            if (block_expo(e, first, count) != alpha) continue;
            Poly::Expo rest = e;
            for (int i = 0; i < count; ++i) rest[first + i] = 0;
            cof.add_term(rest, c);
        }

        // e-exponent: k_i = alpha_i - alpha_{i+1}
        std::vector<int> kexp(count);
        for (int i = 0; i < count; ++i)
            kexp[i] = alpha[i] - (i + 1 < count ? alpha[i + 1] : 0);

        Poly replacement = Poly::constant(nvars, 1);
        for (int i = 0; i < count; ++i)
            for (int rep = 0; rep < kexp[i]; ++rep) replacement = replacement * elem[i + 1];

        rem = rem - cof * replacement;
        auto [it, inserted] = out.emplace(kexp, cof);
        if (!inserted) it->second = it->second + cof;
    }

    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

}  // namespace chowfano
