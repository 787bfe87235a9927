#include "chowfano/projbundle.hpp"

namespace chowfano {

HilbRing make_conic_hilbert_ring() {
    GrassContext g36(3, 6);
    auto s2t = sym_power(tautological_chern(g36, Tautological::dual_sub), 2);
    std::vector<ChowClass> chern;
    for (int i = 1; i <= 6; ++i) chern.push_back(s2t.chern(i));
    return make_proj_bundle_ring(ChowClass::one(g36), 6, std::move(chern), "Hconic");
}

ConicBundles hilbert_scheme_bundles(const HilbRing& ring) {
    if (ring->rank != 6 || ring->base_one.context() != GrassContext(3, 6))
        throw std::invalid_argument("hilbert_scheme_bundles: not the conic Hilbert scheme ring");
    GrassContext g36(3, 6);
    auto tstar = tautological_chern(g36, Tautological::dual_sub);
    const HilbElem one = HilbElem::one(ring);
    const HilbElem h = HilbElem::hyperplane(ring);

    auto s2t = lift_bundle(ring, sym_power(tstar, 2));
    ConicBundles out;
    out.Q = {5, s2t.total * inverse_total(one - h)};

    auto s3t = lift_bundle(ring, sym_power(tstar, 3));
    auto twisted = tensor_line(lift_bundle(ring, FormalBundle<ChowClass>{3, tstar.total}), -h);
    out.M = {7, s3t.total * inverse_total(twisted.total)};
    return out;
}

TowerRing make_supporting_plane_tower(const HilbRing& base) {
    GrassContext g36(3, 6);
    auto tstar = tautological_chern(g36, Tautological::dual_sub);
    std::vector<HilbElem> chern;
    for (int i = 1; i <= 3; ++i) chern.push_back(HilbElem::lift(base, tstar.chern(i)));
    auto ring = make_proj_bundle_ring(HilbElem::one(base), 3, std::move(chern), "Pconic");

    // calibration: rho_* H^3 = -sigma_1 and rho_* H^4 = sigma_11
    const HilbElem want3 = HilbElem::lift(base, ChowClass::sigma(g36, Partition{1}, -1));
    const HilbElem want4 = HilbElem::lift(base, ChowClass::sigma(g36, Partition{1, 1}));
    if (!(pushforward_h_power(ring, 3) == want3) || !(pushforward_h_power(ring, 4) == want4))
        throw std::logic_error("supporting-plane tower: pushforward calibration failed");
    return ring;
}

}  // namespace chowfano
