#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowfano/rational.hpp"

namespace chowfano {

// Sparse multivariate polynomial over Q. Exponent vectors all have length
// nvars; the map's lex key order doubles as the term order used by the
// symmetric reduction.
class Poly {
public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, Rat>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int index);
    static Poly monomial(int nvars, Expo e, const Rat& c);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Expo& e) const;

    void add_term(const Expo& e, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& s) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // product dropping terms of weighted degree > maxdeg (weights empty = all 1)
    Poly mul_truncated(const Poly& o, int maxdeg, const std::vector<int>& weights = {}) const;
    Poly truncated(int maxdeg, const std::vector<int>& weights = {}) const;

    int total_degree() const;  // max over terms, -1 for zero
    Poly substitute(int index, const Rat& value) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    static int wdeg(const Expo& e, const std::vector<int>& weights);
    int nvars_ = 0;
    Terms terms_;
};

// elementary symmetric polynomial e_k in variables [first, first+count) of an
// nvars-variable ring
Poly elementary_symmetric(int nvars, int first, int count, int k);

// Rewrites a polynomial symmetric in variables [first, first+count) as a
// polynomial in e_1..e_count of those variables; keys are the e-exponent
// vectors (length count), values keep the remaining variables untouched.
// Throws if the input is not symmetric in that block.
std::map<std::vector<int>, Poly> symmetric_reduce(const Poly& p, int first, int count);

}  // namespace chowfano
