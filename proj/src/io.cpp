#include "chowfano/io.hpp"

#include <stdexcept>

namespace chowfano {

using json = nlohmann::ordered_json;

json partition_to_json(const Partition& p) {
    json arr = json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

json chow_to_json(const ChowClass& c) {
    json arr = json::array();
    for (const auto& [p, v] : c.terms()) {
        json term;
        term["partition"] = partition_to_json(p);
        term["coeff"] = rat_to_string(v);
        arr.push_back(std::move(term));
    }
    return arr;
}

ChowClass chow_from_json(const GrassContext& ctx, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("chow class: expected an array of terms");
    ChowClass c = ChowClass::zero(ctx);
    for (const auto& term : j) {
        auto p = partition_from_json(term.at("partition"));
        auto v = rat_from_string(term.at("coeff").get<std::string>());
        if (!v) throw std::invalid_argument("chow class: bad rational string");
        c = c + ChowClass::sigma(ctx, p, *v);
    }
    return c;
}

json pbelement_to_json(const HilbElem& e) {
    json arr = json::array();
    for (const auto& c : e.coeffs()) arr.push_back(chow_to_json(c));
    return arr;
}

HilbElem pbelement_from_json(const HilbRing& ring, const nlohmann::json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != ring->rank)
        throw std::invalid_argument("pb element: expected one coefficient per h power");
    std::vector<ChowClass> coeffs;
    for (const auto& c : j) coeffs.push_back(chow_from_json(ring->base_one.context(), c));
    return HilbElem(ring, std::move(coeffs));
}

namespace {

json poly_to_monomials(const Poly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json mono;
        mono["exponents"] = e;
        mono["coeff"] = rat_to_string(c);
        arr.push_back(std::move(mono));
    }
    return arr;
}

Poly poly_from_monomials(const nlohmann::json& j, int dim) {
    Poly p(dim);
    for (const auto& mono : j) {
        auto e = mono.at("exponents").get<std::vector<int>>();
        if (static_cast<int>(e.size()) != dim)
            throw std::invalid_argument("monomial: exponent length mismatch");
        auto c = rat_from_string(mono.at("coeff").get<std::string>());
        if (!c) throw std::invalid_argument("monomial: bad rational string");
        p.add_term(e, *c);
    }
    return p;
}

}  // namespace

json cubic_to_json(const symp::CubicForm& c) {
    json doc;
    doc["dim"] = c.dim();
    doc["monomials"] = poly_to_monomials(c.to_poly());
    return doc;
}

symp::CubicForm cubic_from_json(const nlohmann::json& j) {
    int dim = j.at("dim").get<int>();
    return symp::polarize(poly_from_monomials(j.at("monomials"), dim));
}

json quadric_to_json(const symp::QuadricForm& q) {
    json doc;
    doc["dim"] = q.dim();
    doc["monomials"] = poly_to_monomials(q.to_poly());
    return doc;
}

symp::QuadricForm quadric_from_json(const nlohmann::json& j) {
    int dim = j.at("dim").get<int>();
    return symp::QuadricForm::from_poly(poly_from_monomials(j.at("monomials"), dim));
}

json subspace_to_json(const symp::Subspace& s) {
    json doc;
    doc["ambient"] = s.ambient();
    json basis = json::array();
    for (const auto& v : s.basis()) {
        json row = json::array();
        for (const auto& x : v) row.push_back(rat_to_string(x));
        basis.push_back(std::move(row));
    }
    doc["basis"] = std::move(basis);
    return doc;
}

symp::Subspace subspace_from_json(const nlohmann::json& j) {
    int ambient = j.at("ambient").get<int>();
    std::vector<QVec> basis;
    for (const auto& row : j.at("basis")) {
        QVec v;
        for (const auto& x : row) {
            auto r = rat_from_string(x.get<std::string>());
            if (!r) throw std::invalid_argument("subspace: bad rational string");
            v.push_back(*r);
        }
        basis.push_back(std::move(v));
    }
    return symp::Subspace(ambient, std::move(basis));
}

}  // namespace chowfano
