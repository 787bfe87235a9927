#include "chowfano/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "chowfano/projbundle.hpp"

namespace chowfano {

namespace {

struct Atom {
    enum class Kind { Sigma, SmallH, BigH, ChernQ, ChernM, FY } kind;
    Partition part;   // Sigma
    int index = 0;    // ChernQ / ChernM
    std::size_t pos = 0;
};

struct Parsed {
    std::vector<Atom> atoms;
    std::string context;
    std::size_t context_pos = 0;
    bool integrate = false;
};

struct Scanner {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = i;
        bool neg = i < s.size() && s[i] == '-';
        if (neg) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError("expected an integer", start);
        return std::stoi(s.substr(start, i - start));
    }
};

Parsed parse(const std::string& input) {
    Scanner sc{input};
    Parsed out;
    bool expect_atom = true;
    while (true) {
        sc.skip_ws();
        if (sc.i >= input.size()) throw ParseError("expected a context selector '@'", sc.i);
        char c = input[sc.i];
        if (c == '@') break;
        if (!expect_atom) {
            if (c == '*') {
                ++sc.i;
                expect_atom = true;
                continue;
            }
            throw ParseError("expected '*' or '@'", sc.i);
        }
        Atom atom;
        atom.pos = sc.i;
        if (c == 's') {
            ++sc.i;
            if (!sc.eat('[')) throw ParseError("expected '[' after 's'", sc.i);
            std::vector<int> parts;
            sc.skip_ws();
            if (!sc.eat(']')) {
                while (true) {
                    parts.push_back(sc.integer());
                    if (sc.eat(']')) break;
                    if (!sc.eat(',')) throw ParseError("expected ',' or ']'", sc.i);
                }
            }
            try {
                atom.part = Partition(parts);
            } catch (const std::exception& e) {
                throw ParseError(e.what(), atom.pos);
            }
            atom.kind = Atom::Kind::Sigma;
        } else if (c == 'h') {
            ++sc.i;
            atom.kind = Atom::Kind::SmallH;
        } else if (c == 'H') {
            ++sc.i;
            atom.kind = Atom::Kind::BigH;
        } else if (c == 'F') {
            if (input.compare(sc.i, 2, "FY") != 0) throw ParseError("unknown symbol", sc.i);
            sc.i += 2;
            atom.kind = Atom::Kind::FY;
        } else if (c == 'c') {
            ++sc.i;
            atom.index = sc.integer();
            sc.skip_ws();
            if (sc.i < input.size() && input[sc.i] == 'Q')
                atom.kind = Atom::Kind::ChernQ;
            else if (sc.i < input.size() && input[sc.i] == 'M')
                atom.kind = Atom::Kind::ChernM;
            else
                throw ParseError("expected 'Q' or 'M' after the Chern index", sc.i);
            ++sc.i;
        } else {
            throw ParseError("unknown symbol", sc.i);
        }
        out.atoms.push_back(std::move(atom));
        expect_atom = false;
    }
    if (expect_atom && !out.atoms.empty()) throw ParseError("dangling '*'", sc.i);
    if (out.atoms.empty()) throw ParseError("empty expression", 0);
    ++sc.i;  // '@'
    out.context_pos = sc.i;
    sc.skip_ws();
    std::size_t start = sc.i;
    while (sc.i < input.size() && !std::isspace(static_cast<unsigned char>(input[sc.i])) &&
           input[sc.i] != '!')
        ++sc.i;
    out.context = input.substr(start, sc.i - start);
    if (out.context.empty()) throw ParseError("missing context name", start);
    sc.skip_ws();
    if (sc.i < input.size()) {
        if (input.compare(sc.i, 4, "!int") == 0) {
            out.integrate = true;
            sc.i += 4;
        } else {
            throw ParseError("trailing input (expected '!int')", sc.i);
        }
        sc.skip_ws();
        if (sc.i < input.size()) throw ParseError("trailing input", sc.i);
    }
    return out;
}

std::optional<GrassContext> grass_context(const std::string& name) {
    if (name.size() < 6 || name.compare(0, 2, "G(") != 0 || name.back() != ')') return std::nullopt;
    auto comma = name.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        int k = std::stoi(name.substr(2, comma - 2));
        int n = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
        return GrassContext(k, n);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

ExprResult eval_schubert_expr(const std::string& input) {
    Parsed p = parse(input);
    ExprResult out;

    if (auto ctx = grass_context(p.context)) {
        ChowClass acc = ChowClass::one(*ctx);
        for (const auto& a : p.atoms) {
            if (a.kind != Atom::Kind::Sigma)
                throw ParseError("only s[...] atoms are defined on a Grassmannian", a.pos);
            if (!a.part.fits_box(ctx->box_rows(), ctx->box_cols()))
                throw ParseError("partition exceeds the " + ctx->name() + " box", a.pos);
            acc = acc * ChowClass::sigma(*ctx, a.part);
        }
        out.normal_form = acc.str();
        if (p.integrate) {
            out.integrated = true;
            out.integral = acc.integral();
        }
        return out;
    }

    if (p.context == "Hconic" || p.context == "Pconic") {
        auto ring = make_conic_hilbert_ring();
        auto bundles = hilbert_scheme_bundles(ring);
        GrassContext g36(3, 6);
        auto base_atom = [&](const Atom& a) -> HilbElem {
            switch (a.kind) {
                case Atom::Kind::Sigma:
                    if (!a.part.fits_box(3, 3))
                        throw ParseError("partition exceeds the G(3,6) box", a.pos);
                    return HilbElem::lift(ring, ChowClass::sigma(g36, a.part));
                case Atom::Kind::SmallH:
                    return HilbElem::hyperplane(ring);
                case Atom::Kind::ChernQ:
                    return bundles.Q.chern(a.index);
                case Atom::Kind::ChernM:
                    return bundles.M.chern(a.index);
                case Atom::Kind::FY:
                    return bundles.Q.chern(5) * bundles.M.chern(7);
                case Atom::Kind::BigH:
                    throw ParseError("'H' lives on the Pconic tower", a.pos);
            }
            throw ParseError("unreachable atom", a.pos);
        };
        if (p.context == "Hconic") {
            HilbElem acc = HilbElem::one(ring);
            for (const auto& a : p.atoms) acc = acc * base_atom(a);
            out.normal_form = acc.str();
            if (p.integrate) {
                out.integrated = true;
                out.integral = acc.integral();
            }
            return out;
        }
        auto tower = make_supporting_plane_tower(ring);
        TowerElem acc = TowerElem::one(tower);
        for (const auto& a : p.atoms) {
            if (a.kind == Atom::Kind::BigH)
                acc = acc * TowerElem::hyperplane(tower);
            else
                acc = acc * TowerElem::lift(tower, base_atom(a));
        }
        out.normal_form = acc.str("H");
        if (p.integrate) {
            out.integrated = true;
            out.integral = acc.integral();
        }
        return out;
    }

    throw ParseError("unknown context '" + p.context + "'", p.context_pos);
}

}  // namespace chowfano
