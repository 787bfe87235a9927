#include <doctest.h>

#include "chowfano/rng.hpp"
#include "chowfano/schubert.hpp"
#include "oracles.hpp"

using namespace chowfano;

namespace {

// random bundle over the free ring with an extra degree-1 generator h
struct FreeSetup {
    FreeRingPtr ring;
    FreeElement one, c1, c2, c3, h;
};

FreeSetup make_setup(int maxdeg = 10) {
    FreeSetup s;
    s.ring = make_free_ring({"c1", "c2", "c3", "h"}, {1, 2, 3, 1}, maxdeg);
    s.one = FreeElement::constant(s.ring, 1);
    s.c1 = FreeElement::generator(s.ring, 0);
    s.c2 = FreeElement::generator(s.ring, 1);
    s.c3 = FreeElement::generator(s.ring, 2);
    s.h = FreeElement::generator(s.ring, 3);
    return s;
}

FormalBundle<FreeElement> random_bundle(const FreeSetup& s, RngStream& rng, int rank) {
    FreeElement total = s.one;
    const FreeElement gens[3] = {s.c1, s.c2, s.c3};
    for (int i = 0; i < std::min(rank, 3); ++i) total = total + gens[i].scaled(Rat(rng.uniform(-5, 5)));
    return {rank, total};
}

}  // namespace

TEST_CASE("Whitney sum basics") {
    auto s = make_setup();
    FormalBundle<FreeElement> e{3, s.one + s.c1 + s.c2 + s.c3};
    auto summed = whitney_sum(e, trivial_bundle(s.one, 2));
    CHECK(summed.rank == 5);
    CHECK(summed.total == e.total);
    auto cancel = whitney_sum(e, dual(e));
    CHECK(cancel.chern(1).is_zero());

    GrassContext g26(2, 6);
    auto tstar = tautological_chern(g26, Tautological::dual_sub);
    auto both = whitney_sum(sym_power(tstar, 2), sym_power(tstar, 3));
    CHECK(both.chern(1) == ChowClass::sigma(g26, Partition{1}, 9));
}

TEST_CASE("dual is an involution with the sign rule") {
    auto s = make_setup();
    RngStream rng(3);
    for (int t = 0; t < 100; ++t) {
        auto e = random_bundle(s, rng, 3);
        CHECK(dual(dual(e)).total == e.total);
    }
    GrassContext g36(3, 6);
    auto tstar = tautological_chern(g36, Tautological::dual_sub);
    CHECK(dual(sym_power(tstar, 3)).chern(1) == ChowClass::sigma(g36, Partition{1}, -10));
}

TEST_CASE("line twists") {
    auto s = make_setup();
    auto line = tensor_line(trivial_bundle(s.one, 1), s.h);
    CHECK(line.total == s.one + s.h);

    RngStream rng(11);
    for (int t = 0; t < 100; ++t) {
        auto e = random_bundle(s, rng, 3);
        auto tw = tensor_line(e, s.h);
        CHECK(tw.chern(1) == e.chern(1) + s.h.scaled(Rat(e.rank)));
        auto back = tensor_line(tw, -s.h);
        CHECK(back.total == e.total);
    }
}

TEST_CASE("symmetric powers against the printed two-factor identity and the Newton oracle") {
    auto ring = make_chern_ring(3, 9);
    auto one = FreeElement::constant(ring, 1);
    auto c1 = FreeElement::generator(ring, 0), c2 = FreeElement::generator(ring, 1),
         c3 = FreeElement::generator(ring, 2);
    FormalBundle<FreeElement> e{3, one + c1 + c2 + c3};

    CHECK(sym_power(e, 1).total == e.total);
    auto s2 = sym_power(e, 2);
    CHECK(s2.rank == 6);
    CHECK(s2.total == (one + c1.scaled(2) + c2.scaled(4) + c3.scaled(8)) *
                          (one + c1.scaled(2) + c1 * c1 + c2 + c1 * c2 - c3));

    auto s3 = sym_power(e, 3);
    CHECK(s3.rank == 10);
    CHECK(s3.chern(2) == c1.scaled(40) * c1 + c2.scaled(15));

    // two independent implementations coincide for rank <= 3, d <= 3
    for (int rank = 1; rank <= 3; ++rank) {
        RngStream rng(100 + rank);
        auto ring2 = make_chern_ring(rank, 8);
        auto one2 = FreeElement::constant(ring2, 1);
        FreeElement total = one2;
        for (int i = 0; i < rank; ++i)
            total = total + FreeElement::generator(ring2, i).scaled(Rat(rng.uniform(-4, 4)));
        FormalBundle<FreeElement> f{rank, total};
        for (int d = 2; d <= 3; ++d) {
            auto direct = sym_power(f, d);
            auto newton = oracles::sym_power_newton(f, d, 8);
            CHECK(direct.total == newton.total);
            if (d <= rank) {
                auto wd = wedge_power(f, d);
                auto wn = oracles::wedge_power_newton(f, d, 8);
                CHECK(wd.total == wn.total);
            }
        }
    }
}

TEST_CASE("splitting consistency on sums of line classes") {
    auto ring = make_free_ring({"l1", "l2", "l3"}, {1, 1, 1}, 9);
    auto one = FreeElement::constant(ring, 1);
    FreeElement l[3] = {FreeElement::generator(ring, 0), FreeElement::generator(ring, 1),
                        FreeElement::generator(ring, 2)};
    FormalBundle<FreeElement> e{3, (one + l[0]) * (one + l[1]) * (one + l[2])};

    FreeElement sym2 = one;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) sym2 = sym2 * (one + l[i] + l[j]);
    CHECK(sym_power(e, 2).total == sym2);

    FreeElement sym3 = one;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int k = j; k < 3; ++k) sym3 = sym3 * (one + l[i] + l[j] + l[k]);
    CHECK(sym_power(e, 3).total == sym3);

    FreeElement wedge2 = one;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) wedge2 = wedge2 * (one + l[i] + l[j]);
    CHECK(wedge_power(e, 2).total == wedge2);
}

TEST_CASE("wedge powers") {
    auto ring = make_chern_ring(3, 9);
    auto one = FreeElement::constant(ring, 1);
    auto c1 = FreeElement::generator(ring, 0), c2 = FreeElement::generator(ring, 1),
         c3 = FreeElement::generator(ring, 2);
    FormalBundle<FreeElement> e{3, one + c1 + c2 + c3};
    CHECK(wedge_power(e, 1).total == e.total);
    auto det = wedge_power(e, 3);
    CHECK(det.rank == 1);
    CHECK(det.total == one + c1);
    CHECK(wedge_power(e, 2).chern(1) == c1.scaled(2));
    CHECK_THROWS_AS(wedge_power(e, 4), std::invalid_argument);
}

TEST_CASE("the ten printed lines of the cubic symmetric power table") {
    // regression vectors; mismatches would indicate a printed typo, and the
    // Newton-oracle agreement above is the gate that decides who is right
    auto ring = make_chern_ring(3, 10);
    auto one = FreeElement::constant(ring, 1);
    auto c1 = FreeElement::generator(ring, 0), c2 = FreeElement::generator(ring, 1),
         c3 = FreeElement::generator(ring, 2);
    auto s3 = sym_power(FormalBundle<FreeElement>{3, one + c1 + c2 + c3}, 3);
    auto P = [&](std::initializer_list<std::pair<Rat, std::initializer_list<int>>> terms) {
        FreeElement acc = one - one;
        for (const auto& [coeff, expo] : terms) {
            FreeElement term = one.scaled(coeff);
            auto it = expo.begin();
            int e1 = *it++, e2 = *it++, e3 = *it;
            for (int i = 0; i < e1; ++i) term = term * c1;
            for (int i = 0; i < e2; ++i) term = term * c2;
            for (int i = 0; i < e3; ++i) term = term * c3;
            acc = acc + term;
        }
        return acc;
    };
    CHECK(s3.chern(1) == P({{10, {1, 0, 0}}}));
    CHECK(s3.chern(2) == P({{40, {2, 0, 0}}, {15, {0, 1, 0}}}));
    CHECK(s3.chern(3) == P({{82, {3, 0, 0}}, {111, {1, 1, 0}}, {27, {0, 0, 1}}}));
    CHECK(s3.chern(4) == P({{91, {4, 0, 0}}, {315, {2, 1, 0}}, {189, {1, 0, 1}}, {63, {0, 2, 0}}}));
    CHECK(s3.chern(5) ==
          P({{52, {5, 0, 0}}, {429, {3, 1, 0}}, {513, {2, 0, 1}}, {324, {1, 2, 0}}, {162, {0, 1, 1}}}));
    CHECK(s3.chern(6) == P({{12, {6, 0, 0}},
                            {282, {4, 1, 0}},
                            {679, {3, 0, 1}},
                            {593, {2, 2, 0}},
                            {792, {1, 1, 1}},
                            {85, {0, 3, 0}},
                            {27, {0, 0, 2}}}));
    CHECK(s3.chern(7) == P({{72, {5, 1, 0}},
                            {448, {4, 0, 1}},
                            {464, {3, 2, 0}},
                            {1386, {2, 1, 1}},
                            {259, {1, 3, 0}},
                            {108, {1, 0, 2}},
                            {243, {0, 2, 1}}}));
    CHECK(s3.chern(8) == P({{120, {5, 0, 1}},
                            {132, {4, 2, 0}},
                            {1116, {3, 1, 1}},
                            {246, {2, 3, 0}},
                            {81, {2, 0, 2}},
                            {567, {1, 2, 1}},
                            {36, {0, 4, 0}},
                            {243, {0, 1, 2}}}));
    CHECK(s3.chern(9) == P({{360, {4, 1, 1}},
                            {72, {3, 3, 0}},
                            {108, {3, 0, 2}},
                            {540, {2, 2, 1}},
                            {36, {1, 4, 0}},
                            {-243, {1, 1, 2}},
                            {108, {0, 3, 1}},
                            {729, {0, 0, 3}}}));
    CHECK(s3.chern(10) == P({{108, {4, 0, 2}},
                             {216, {3, 2, 1}},
                             {-486, {2, 1, 2}},
                             {108, {1, 3, 1}},
                             {729, {1, 0, 3}}}));
}

TEST_CASE("Segre classes") {
    GrassContext g36(3, 6);
    auto tstar = tautological_chern(g36, Tautological::dual_sub);
    CHECK(segre(trivial_bundle(ChowClass::one(g36), 3)) == ChowClass::one(g36));
    auto s = segre(tstar);
    CHECK(s.graded_piece(1) == ChowClass::sigma(g36, Partition{1}));
    CHECK(s.graded_piece(2) == ChowClass::sigma(g36, Partition{1, 1}));
    CHECK(s.graded_piece(3) == ChowClass::sigma(g36, Partition{1, 1, 1}));
    auto t = tautological_chern(g36, Tautological::sub);
    CHECK(segre(t).graded_piece(1) == ChowClass::sigma(g36, Partition{1}, -1));
}

TEST_CASE("Hom bundles") {
    CHECK(tangent_bundle(GrassContext(3, 7)).chern(1) ==
          ChowClass::sigma(GrassContext(3, 7), Partition{1}, 7));
    CHECK(tangent_bundle(GrassContext(2, 6)).chern(1) ==
          ChowClass::sigma(GrassContext(2, 6), Partition{1}, 6));

    auto s = make_setup();
    RngStream rng(5);
    auto e = random_bundle(s, rng, 3);
    auto hom = chern_class_of_hom(e, trivial_bundle(s.one, 1));
    CHECK(hom.total == dual(e).total);
    FormalBundle<FreeElement> big{5, s.one};
    CHECK_THROWS_AS(chern_class_of_hom(big, big), std::invalid_argument);
}

TEST_CASE("inverse total classes") {
    GrassContext g36(3, 6);
    auto t = tautological_chern(g36, Tautological::sub);
    CHECK(inverse_total(t.total) * t.total == ChowClass::one(g36));
    CHECK_THROWS_AS(inverse_total(ChowClass::sigma(g36, Partition{1})), std::invalid_argument);
}
