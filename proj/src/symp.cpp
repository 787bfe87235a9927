#include "chowfano/symp.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowfano {
namespace symp {

namespace {

// all multisets {a <= b <= c} drawn from {0..t-1}
std::vector<std::array<int, 3>> index_multisets(int t) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < t; ++a)
        for (int b = a; b < t; ++b)
            for (int c = b; c < t; ++c) out.push_back({a, b, c});
    return out;
}

void require_vanishing_on(const CubicForm& f, const Subspace& s, const char* who) {
    const auto& basis = s.basis();
    for (const auto& m : index_multisets(s.dim()))
        if (f.tri(basis[m[0]], basis[m[1]], basis[m[2]]) != 0)
            throw std::invalid_argument(std::string(who) + ": cubic does not vanish on the subspace");
}

}  // namespace

std::vector<TangentVector> fano_tangent_space(const CubicForm& f, const Subspace& t) {
    if (f.dim() != t.ambient()) throw std::invalid_argument("fano_tangent_space: dimension mismatch");
    require_vanishing_on(f, t, "fano_tangent_space");
    const int tdim = t.dim();
    const auto comp = t.complement_basis();
    const int qdim = static_cast<int>(comp.size());
    const auto& basis = t.basis();

    // unknowns M[r][j]: the coefficient of comp[r] in u(basis[j]);
    // one row per coefficient of the cubic F(x,x,u(x)) on T
    const auto rows = index_multisets(tdim);
    QMat sys(rows.size(), static_cast<std::size_t>(qdim) * tdim);
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        std::array<int, 3> m = rows[ri];
        std::vector<std::array<int, 3>> arr;
        std::array<int, 3> p = m;
        do {
            arr.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        for (const auto& a : arr) {
            // slot pattern (x, x, u(x)): third index feeds the unknown
            for (int r = 0; r < qdim; ++r) {
                Rat v = f.tri(basis[a[0]], basis[a[1]], comp[r]);
                if (v != 0) sys.at(ri, static_cast<std::size_t>(r) * tdim + a[2]) += v;
            }
        }
    }

    std::vector<TangentVector> out;
    for (const auto& null : sys.nullspace()) {
        TangentVector u;
        u.source = t;
        u.complement = comp;
        u.matrix = QMat(qdim, tdim);
        for (int r = 0; r < qdim; ++r)
            for (int j = 0; j < tdim; ++j) u.matrix.at(r, j) = null[static_cast<std::size_t>(r) * tdim + j];
        out.push_back(std::move(u));
    }
    return out;
}

LineFrame normalize_line_frame(const CubicForm& f, const Subspace& t) {
    if (t.dim() != 2 || t.ambient() != 6)
        throw std::invalid_argument("normalize_line_frame: need a line in a 6-space");
    require_vanishing_on(f, t, "normalize_line_frame");
    const QVec& t1 = t.basis()[0];
    const QVec& t2 = t.basis()[1];
    QMat phi = QMat::from_rows({f.contract(t1, t1), f.contract(t1, t2), f.contract(t2, t2)});
    if (phi.rank() != 3) throw NonGenericError("non-generic line: polarized forms dependent");

    auto kernel = phi.nullspace();  // the axis plane, dimension 3
    Subspace axis = Subspace::span_of(kernel, 6);
    if (!axis.contains(t)) throw std::logic_error("normalize_line_frame: axis must contain the line");

    // e3: extend T to the axis plane
    QVec e3;
    for (const auto& v : kernel) {
        std::vector<QVec> probe = {t1, t2, v};
        if (rank_of_vectors(probe) == 3) {
            e3 = v;
            break;
        }
    }
    if (e3.empty()) throw std::logic_error("normalize_line_frame: axis plane degenerate");

    // e4, e5, e6: particular solutions of phi(e_{3+i}) = delta_i
    std::vector<QVec> tail;
    for (int i = 0; i < 3; ++i) {
        QVec rhs(3);
        rhs[i] = 1;
        auto sol = phi.solve(rhs);
        if (!sol) throw std::logic_error("normalize_line_frame: dual frame unsolvable");
        tail.push_back(*sol);
    }

    LineFrame out;
    out.basis = {t1, t2, e3, tail[0], tail[1], tail[2]};
    QMat b = QMat::from_columns(out.basis);
    auto inv = b.inverse();
    if (!inv) throw std::logic_error("normalize_line_frame: frame is not a basis");
    out.to_frame_coords = *inv;
    out.axis = axis;
    return out;
}

Subspace axis_plane(const CubicForm& f, const Subspace& t) {
    auto frame = normalize_line_frame(f, t);
    if (frame.axis.dim() != 3) throw NonGenericError("axis_plane: unexpected intersection dimension");
    // Hom(T, S/T) must sit inside the tangent space: u with image along e3
    const auto& e3 = frame.basis[2];
    for (int which = 0; which < 2; ++which) {
        TangentVector u;
        u.source = t;
        u.complement = {e3};
        u.matrix = QMat(1, 2);
        u.matrix.at(0, which) = 1;
        // F(x,x,u(x)) coefficients must vanish
        const auto& b = t.basis();
        for (const auto& m : index_multisets(2)) {
            std::array<int, 3> p = m;
            Rat acc = 0;
            do {
                acc += f.tri(b[p[0]], b[p[1]], u.image_of_basis(p[2]));
            } while (std::next_permutation(p.begin(), p.end()));
            if (acc != 0) throw std::logic_error("axis_plane: Hom(T,S/T) not tangent");
        }
    }
    return frame.axis;
}

Rat omega_value(const CubicForm& f, const QVec& e, const QVec& fv, const QVec& ue, const QVec& uf,
                const QVec& ve, const QVec& vf) {
    auto p = [&](const QVec& x, const QVec& y, const QVec& z) { return f.tri(x, y, z); };
    return p(e, e, uf) * p(fv, fv, ve) - p(e, e, vf) * p(fv, fv, ue) +
           Rat(2) * p(e, fv, uf) * p(e, e, vf) - Rat(2) * p(e, e, uf) * p(e, fv, vf) +
           Rat(2) * p(fv, fv, ue) * p(e, fv, ve) - Rat(2) * p(e, fv, ue) * p(fv, fv, ve);
}

Rat omega_pair(const CubicForm& f, const Subspace& t, const TangentVector& u,
               const TangentVector& v) {
    if (t.dim() != 2) throw std::invalid_argument("omega_pair: frame must be a basis of a line");
    const QVec& e = t.basis()[0];
    const QVec& fv = t.basis()[1];
    return omega_value(f, e, fv, u.image_of(e), u.image_of(fv), v.image_of(e), v.image_of(fv));
}

namespace {

QVec quotient_coords(const QMat& inv_frame, int tdim, const QVec& w) {
    QVec full = inv_frame.apply(w);
    return QVec(full.begin() + tdim, full.end());
}

}  // namespace

Rat k_form(const Subspace& t, const std::vector<QVec>& quotient_frame, const TangentVector& u,
           const TangentVector& v, const TangentVector& u2, const TangentVector& v2) {
    if (quotient_frame.size() != 4) throw std::invalid_argument("k_form: quotient must be 4-dimensional");
    if (t.dim() != 2) throw std::invalid_argument("k_form: source must be a line");
    std::vector<QVec> cols = t.basis();
    cols.insert(cols.end(), quotient_frame.begin(), quotient_frame.end());
    auto inv = QMat::from_columns(cols).inverse();
    if (!inv) throw std::invalid_argument("k_form: frame is not a basis");
    const QVec& e = t.basis()[0];
    const QVec& fv = t.basis()[1];
    auto q = [&](const TangentVector& w, const QVec& x) {
        return quotient_coords(*inv, 2, w.image_of(x));
    };
    auto det4 = [](const QVec& a, const QVec& b, const QVec& c, const QVec& d) {
        return QMat::from_columns({a, b, c, d}).det();
    };
    return det4(q(u, e), q(u2, fv), q(v, e), q(v2, fv)) -
           det4(q(u, fv), q(u2, fv), q(v, e), q(v2, e)) +
           det4(q(u, fv), q(u2, e), q(v, fv), q(v2, e)) -
           det4(q(u, e), q(u2, e), q(v, fv), q(v2, fv));
}

std::array<Rat, 4> tangent_params(const LineFrame& frame, const TangentVector& u) {
    // frame coordinates of the two images; the tangency relations make
    // (a, b, c, d) = (u1_3, u1_5, u2_5, u2_3) a complete parameterization
    QVec img1 = frame.to_frame_coords.apply(u.image_of(frame.basis[0]));
    QVec img2 = frame.to_frame_coords.apply(u.image_of(frame.basis[1]));
    if (img1[3] != 0 || img2[5] != 0 || img2[3] != Rat(-2) * img1[4] || img1[5] != Rat(-2) * img2[4])
        throw std::invalid_argument("tangent_params: vector is not tangent in this frame");
    return {img1[2], img1[4], img2[4], img2[2]};
}

Rat closed_form_value(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v) {
    return v[0] * u[2] - u[0] * v[2] + u[1] * v[3] - v[1] * u[3];
}

BigOmega big_omega_matrix(const CubicForm& f, const Subspace& t) {
    BigOmega out;
    out.frame = normalize_line_frame(f, t);
    Subspace line = Subspace(6, {out.frame.basis[0], out.frame.basis[1]});

    auto tangent = fano_tangent_space(f, line);
    if (tangent.size() != 4) throw NonGenericError("big_omega_matrix: tangent dimension not 4");

    // the parameter basis in the normalized frame: images in <e3..e6>
    std::vector<QVec> quotient(out.frame.basis.begin() + 2, out.frame.basis.end());
    auto make = [&](std::initializer_list<Rat> col1, std::initializer_list<Rat> col2) {
        TangentVector u;
        u.source = line;
        u.complement = quotient;
        u.matrix = QMat(4, 2);
        int r = 0;
        for (const Rat& x : col1) u.matrix.at(r++, 0) = x;
        r = 0;
        for (const Rat& x : col2) u.matrix.at(r++, 1) = x;
        return u;
    };
    out.tangent_basis = {
        make({1, 0, 0, 0}, {0, 0, 0, 0}),    // a
        make({0, 0, 1, 0}, {0, -2, 0, 0}),   // b
        make({0, 0, 0, -2}, {0, 0, 1, 0}),   // c
        make({0, 0, 0, 0}, {1, 0, 0, 0}),    // d
    };

    // kappa from the factorization K = omega * (kappa * closed); the pair
    // (u_a + u_b, u_c) has both factors nonzero in every normalized frame
    std::array<std::array<Rat, 4>, 4> params;
    for (int i = 0; i < 4; ++i) params[i] = tangent_params(out.frame, out.tangent_basis[i]);
    TangentVector uab = out.tangent_basis[0];
    uab.matrix = QMat(4, 2);
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 2; ++j)
            uab.matrix.at(r, j) = out.tangent_basis[0].matrix.at(r, j) + out.tangent_basis[1].matrix.at(r, j);
    const auto& uc = out.tangent_basis[2];
    Rat w = omega_pair(f, line, uab, uc);
    Rat kf = k_form(line, quotient, uab, uc, uab, uc);
    Rat closed = closed_form_value(tangent_params(out.frame, uab), params[2]);
    if (w == 0 || closed == 0) throw std::logic_error("big_omega_matrix: degenerate calibration pair");
    out.kappa = kf / (w * closed);

    out.matrix = QMat(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.matrix.at(i, j) = out.kappa * closed_form_value(params[i], params[j]);
    out.rank = out.matrix.rank();
    out.det = out.matrix.det();

    // every basis vector of the computed tangent space must satisfy the same
    // parameterization; cheap consistency guard
    for (const auto& u : tangent) (void)tangent_params(out.frame, u);
    return out;
}

LagrangianCertificate lagrangian_check_hyperplane(const CubicForm& f, const Subspace& h,
                                                  const Subspace& t) {
    if (!h.contains(t)) throw std::invalid_argument("lagrangian_check_hyperplane: line not in hyperplane");
    if (h.dim() != 5) throw std::invalid_argument("lagrangian_check_hyperplane: h must be a hyperplane");
    require_vanishing_on(f, t, "lagrangian_check_hyperplane");

    // tangent space of the line family of the hyperplane section: images
    // constrained to H/T
    const auto rows = index_multisets(2);
    std::vector<QVec> comp_h;  // a complement of T inside H
    for (const auto& v : h.basis()) {
        std::vector<QVec> probe = t.basis();
        probe.insert(probe.end(), comp_h.begin(), comp_h.end());
        probe.push_back(v);
        if (rank_of_vectors(probe) == probe.size()) comp_h.push_back(v);
    }
    if (comp_h.size() != 3) throw std::logic_error("lagrangian_check_hyperplane: bad complement");

    QMat sys(rows.size(), 6);
    const auto& basis = t.basis();
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        std::array<int, 3> p = rows[ri];
        do {
            for (int r = 0; r < 3; ++r) {
                Rat v = f.tri(basis[p[0]], basis[p[1]], comp_h[r]);
                if (v != 0) sys.at(ri, static_cast<std::size_t>(r) * 2 + p[2]) += v;
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    auto null = sys.nullspace();
    LagrangianCertificate cert;
    cert.tangent_dim = static_cast<int>(null.size());
    if (cert.tangent_dim != 2)
        throw NonGenericError("lagrangian_check_hyperplane: tangent dimension not 2");

    std::vector<TangentVector> uv;
    for (const auto& n : null) {
        TangentVector u;
        u.source = t;
        u.complement = comp_h;
        u.matrix = QMat(3, 2);
        for (int r = 0; r < 3; ++r)
            for (int j = 0; j < 2; ++j) u.matrix.at(r, j) = n[static_cast<std::size_t>(r) * 2 + j];
        uv.push_back(std::move(u));
    }

    auto bo = big_omega_matrix(f, t);
    Subspace line(6, {bo.frame.basis[0], bo.frame.basis[1]});
    auto pu = tangent_params(bo.frame, uv[0]);
    auto pv = tangent_params(bo.frame, uv[1]);
    cert.omega = omega_pair(f, line, uv[0], uv[1]);
    cert.big_omega = bo.kappa * closed_form_value(pu, pv);
    std::vector<QVec> quotient(bo.frame.basis.begin() + 2, bo.frame.basis.end());
    cert.k_value = k_form(line, quotient, uv[0], uv[1], uv[0], uv[1]);
    cert.zero = cert.big_omega == 0 && cert.k_value == 0;
    return cert;
}

TangentVector restrict_to_line(const TangentVector& u, const Subspace& t, const Subspace& h) {
    const Subspace& s = u.source;
    if (!s.contains(t)) throw std::invalid_argument("restrict_to_line: T not inside the source");
    if (!h.contains(t)) throw std::invalid_argument("restrict_to_line: T not inside the hyperplane");

    // complement of T inside H; the quotient map H/T -> W/S in those frames
    std::vector<QVec> comp_h;
    for (const auto& v : h.basis()) {
        std::vector<QVec> probe = t.basis();
        probe.insert(probe.end(), comp_h.begin(), comp_h.end());
        probe.push_back(v);
        if (rank_of_vectors(probe) == probe.size()) comp_h.push_back(v);
    }
    const int qdim = static_cast<int>(comp_h.size());
    if (qdim != u.quotient_dim())
        throw std::invalid_argument("restrict_to_line: quotient dimensions differ");

    // coordinates of comp_h modulo S in the source's complement frame
    std::vector<QVec> scols = s.basis();
    scols.insert(scols.end(), u.complement.begin(), u.complement.end());
    auto sinv = QMat::from_columns(scols).inverse();
    if (!sinv) throw std::logic_error("restrict_to_line: source frame is not a basis");
    const int sdim = s.dim();
    QMat a(qdim, qdim);
    for (int j = 0; j < qdim; ++j) {
        QVec c = quotient_coords(*sinv, sdim, comp_h[j]);
        for (int r = 0; r < qdim; ++r) a.at(r, j) = c[r];
    }
    auto ainv = a.inverse();
    if (!ainv) throw NonGenericError("restrict_to_line: H + S is not the whole space");

    TangentVector out;
    out.source = t;
    out.complement = comp_h;
    out.matrix = QMat(qdim, t.dim());
    for (int j = 0; j < t.dim(); ++j) {
        QVec img = quotient_coords(*sinv, sdim, u.image_of(t.basis()[j]));
        QVec coords = ainv->apply(img);
        for (int r = 0; r < qdim; ++r) out.matrix.at(r, j) = coords[r];
    }
    return out;
}

LagrangianCertificate lagrangian_check_planes(const CubicForm& r, const Subspace& s,
                                              const Subspace& h) {
    if (r.dim() != 7 || s.dim() != 3 || h.dim() != 6)
        throw std::invalid_argument("lagrangian_check_planes: expect a plane and a hyperplane in a 7-space");
    require_vanishing_on(r, s, "lagrangian_check_planes");

    auto plane_tangent = fano_tangent_space(r, s);
    LagrangianCertificate cert;
    cert.tangent_dim = static_cast<int>(plane_tangent.size());
    if (cert.tangent_dim != 2)
        throw NonGenericError("lagrangian_check_planes: tangent dimension not 2");

    Subspace t = s.intersect(h);
    if (t.dim() != 2) throw NonGenericError("lagrangian_check_planes: S cap H is not a line");

    // transport the whole configuration into coordinates on H
    QMat hbasis = h.basis_matrix();
    CubicForm f_on_h = r.pullback(hbasis);
    auto hcoords = [&](const QVec& w) {
        auto c = h.coords_of(w);
        if (!c) throw std::logic_error("lagrangian_check_planes: vector escapes H");
        return *c;
    };

    auto u0 = restrict_to_line(plane_tangent[0], t, h);
    auto u1 = restrict_to_line(plane_tangent[1], t, h);
    // express in H coordinates
    auto to_h = [&](const TangentVector& u) {
        TangentVector v;
        std::vector<QVec> tb;
        for (const auto& x : t.basis()) tb.push_back(hcoords(x));
        v.source = Subspace(6, tb);
        for (const auto& c : u.complement) v.complement.push_back(hcoords(c));
        v.matrix = u.matrix;
        return v;
    };
    auto v0 = to_h(u0), v1 = to_h(u1);
    Subspace t_h = v0.source;

    auto bo = big_omega_matrix(f_on_h, t_h);
    Subspace line(6, {bo.frame.basis[0], bo.frame.basis[1]});
    auto pu = tangent_params(bo.frame, v0);
    auto pv = tangent_params(bo.frame, v1);
    cert.omega = omega_pair(f_on_h, line, v0, v1);
    cert.big_omega = bo.kappa * closed_form_value(pu, pv);
    std::vector<QVec> quotient(bo.frame.basis.begin() + 2, bo.frame.basis.end());
    cert.k_value = k_form(line, quotient, v0, v1, v0, v1);
    cert.zero = cert.big_omega == 0 && cert.k_value == 0;
    return cert;
}

Subspace common_image_hyperplane(const CubicForm& r, const Subspace& s) {
    require_vanishing_on(r, s, "common_image_hyperplane");
    auto tangent = fano_tangent_space(r, s);
    if (tangent.size() != 2) throw NonGenericError("common_image_hyperplane: tangent dimension not 2");
    std::vector<QVec> images;
    for (const auto& u : tangent)
        for (int j = 0; j < s.dim(); ++j) images.push_back(u.matrix.column(j));
    Subspace span = Subspace::span_of(images, tangent[0].quotient_dim());
    if (span.dim() >= tangent[0].quotient_dim())
        throw NonGenericError("common_image_hyperplane: images span the whole quotient");
    return span;
}

CubicForm nodal_cubic(const QuadricForm& q, const CubicForm& w, int x0_index) {
    const int n = q.dim();
    if (w.dim() != n) throw std::invalid_argument("nodal_cubic: dimension mismatch");
    if (x0_index < 0 || x0_index > n) throw std::invalid_argument("nodal_cubic: bad vertex index");
    auto lift = [&](int i) { return i < x0_index ? i : i + 1; };
    CubicForm out(n + 1);
    // x0 * Q: polarization (1/3)[a0 B(b,c) + b0 B(a,c) + c0 B(a,b)]
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rat b = q.entry(i, j);
            if (b != 0) out.set_entry(x0_index, lift(i), lift(j), b / 3);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                Rat v = w.entry(i, j, k);
                if (v != 0) out.set_entry(lift(i), lift(j), lift(k), v);
            }
    return out;
}

namespace {

// divide a cubic form on a 3-space by a rank-3 conic: returns the linear
// cofactor, or nothing when the division fails
std::optional<QVec> divide_cubic_by_conic(const CubicForm& cubic3, const QuadricForm& conic3) {
    // lambda has 3 unknowns; match the 10 cubic coefficients of lambda * conic
    QMat sys(10, 3);
    QVec rhs(10);
    Poly cpoly = cubic3.to_poly();
    int row = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int k = j; k < 3; ++k) {
                Poly::Expo e(3, 0);
                ++e[i];
                ++e[j];
                ++e[k];
                rhs[row] = cpoly.coeff(e);
                // coefficient of x^e in x_l * conic
                Poly qp = conic3.to_poly();
                for (int l = 0; l < 3; ++l) {
                    Poly::Expo e2 = e;
                    if (e2[l] == 0) continue;
                    --e2[l];
                    sys.at(row, l) = qp.coeff(e2);
                }
                ++row;
            }
    return sys.solve(rhs);
}

}  // namespace

ResidualPlane residual_plane(const Conic& q, const CubicForm& nodal, int x0_index) {
    const int n = nodal.dim();  // 7
    if (q.plane.ambient() != n - 1 || q.plane.dim() != 3)
        throw std::invalid_argument("residual_plane: conic plane must be a 3-space in the hyperplane");
    if (q.form.rank() != 3) throw std::invalid_argument("residual_plane: conic is not irreducible");

    auto lift = [&](const QVec& v) {
        QVec out(n);
        for (int i = 0; i < n - 1; ++i) out[i < x0_index ? i : i + 1] = v[i];
        return out;
    };
    QVec e0(n);
    e0[x0_index] = 1;

    // restrict the cubic to span(e0, plane) with coordinates (y0, y1..y3)
    std::vector<QVec> cols = {e0};
    for (const auto& b : q.plane.basis()) cols.push_back(lift(b));
    CubicForm on_p3 = nodal.pullback(QMat::from_columns(cols));

    // the y0-free part must be divisible by the conic, the y0-quadratic part
    // proportional to it, and nothing may involve y0^2 or y0^3
    if (on_p3.entry(0, 0, 0) != 0) throw std::invalid_argument("residual_plane: vertex lies on the conic span");
    for (int i = 1; i < 4; ++i)
        if (on_p3.entry(0, 0, i) != 0)
            throw std::invalid_argument("residual_plane: configuration not conical over the vertex");

    // alpha * qbar(y) = coefficient of y0: entries tri(e0, yi, yj) * 3
    QuadricForm y0part(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) y0part.set_entry(i, j, Rat(3) * on_p3.entry(0, i + 1, j + 1));
    // alpha from proportionality against the conic
    Rat alpha = 0;
    bool alpha_set = false;
    for (int i = 0; i < 3 && !alpha_set; ++i)
        for (int j = i; j < 3 && !alpha_set; ++j)
            if (q.form.entry(i, j) != 0) {
                alpha = y0part.entry(i, j) / q.form.entry(i, j);
                alpha_set = true;
            }
    if (!alpha_set || !(y0part == q.form.scaled(alpha)))
        throw std::invalid_argument("residual_plane: conic does not lie on the quadric part");

    // cubic part in y1..3 divided by the conic
    CubicForm wpart(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int k = j; k < 3; ++k) wpart.set_entry(i, j, k, on_p3.entry(i + 1, j + 1, k + 1));
    auto lambda = divide_cubic_by_conic(wpart, q.form);
    if (!lambda) throw std::invalid_argument("residual_plane: conic does not lie on the cubic part");
    if (vec_is_zero(*lambda) && alpha == 0)
        throw NonGenericError("residual_plane: restriction vanishes identically");
    if (vec_is_zero(*lambda))
        throw std::invalid_argument("residual_plane: residual component equals the conic plane");

    // residual plane: alpha y0 + lambda(y) = 0 inside the P^3
    QMat lin(1, 4);
    lin.at(0, 0) = alpha;
    for (int i = 0; i < 3; ++i) lin.at(0, i + 1) = (*lambda)[i];
    std::vector<QVec> plane_vecs;
    for (const auto& nv : lin.nullspace()) {
        QVec amb(n);
        for (int c = 0; c < 4; ++c)
            for (int i = 0; i < n; ++i) amb[i] += cols[c][i] * nv[c];
        plane_vecs.push_back(amb);
    }
    ResidualPlane out;
    out.plane = Subspace::span_of(plane_vecs, n);
    if (out.plane.dim() != 3) throw std::logic_error("residual_plane: residual is not a plane");
    if (!nodal.pullback(out.plane.basis_matrix()).is_zero())
        throw std::logic_error("residual_plane: residual plane not inside the cubic");

    // the line cut by the node hyperplane x0 = 0: lambda = 0 inside the conic plane
    std::vector<QVec> line_vecs;
    QMat lam(1, 3);
    for (int i = 0; i < 3; ++i) lam.at(0, i) = (*lambda)[i];
    for (const auto& nv : lam.nullspace()) {
        QVec amb(n);
        for (int c = 0; c < 3; ++c)
            for (int i = 0; i < n; ++i) amb[i] += cols[c + 1][i] * nv[c];
        line_vecs.push_back(amb);
    }
    out.residual_line = Subspace::span_of(line_vecs, n);
    if (out.residual_line.dim() != 2) throw std::logic_error("residual_plane: residual line degenerate");
    if (!out.plane.contains(out.residual_line))
        throw std::logic_error("residual_plane: line must lie in the residual plane");

    // 2-secancy: the conic restricted to the line is a nonzero binary form
    out.secant_form = q.form.pullback(QMat::from_columns(lam.nullspace()));
    if (out.secant_form.is_zero())
        throw NonGenericError("residual_plane: residual line lies on the conic");
    {
        // tangential contact iff the binary quadratic has a double root
        Rat a = out.secant_form.entry(0, 0), b = Rat(2) * out.secant_form.entry(0, 1),
            c = out.secant_form.entry(1, 1);
        out.tangential = (b * b - Rat(4) * a * c) == 0;
    }
    return out;
}

std::variant<RulingPlanes, IrrationalRulings> ruling_planes_through_line(const QuadricForm& q,
                                                                         const Subspace& line) {
    if (q.dim() != 6 || line.ambient() != 6 || line.dim() != 2)
        throw std::invalid_argument("ruling_planes_through_line: need a line in a 6-space");
    if (q.rank() != 6) throw std::invalid_argument("ruling_planes_through_line: quadric not of full rank");
    const QVec& t1 = line.basis()[0];
    const QVec& t2 = line.basis()[1];
    if (q.evaluate(t1) != 0 || q.evaluate(t2) != 0 || q.bilinear(t1, t2) != 0)
        throw std::invalid_argument("ruling_planes_through_line: line not on the quadric");

    QMat perp = QMat::from_rows({q.contract(t1), q.contract(t2)});
    auto tperp = Subspace::span_of(perp.nullspace(), 6);
    if (tperp.dim() != 4 || !tperp.contains(line))
        throw std::logic_error("ruling_planes_through_line: orthogonal space degenerate");

    // a complement (w1, w2) of the line inside its orthogonal space
    std::vector<QVec> w;
    for (const auto& v : tperp.basis()) {
        std::vector<QVec> probe = line.basis();
        probe.insert(probe.end(), w.begin(), w.end());
        probe.push_back(v);
        if (rank_of_vectors(probe) == probe.size()) w.push_back(v);
        if (w.size() == 2) break;
    }
    Rat a = q.evaluate(w[0]), b = Rat(2) * q.bilinear(w[0], w[1]), c = q.evaluate(w[1]);
    Rat disc = b * b - Rat(4) * a * c;
    if (disc == 0) throw std::logic_error("ruling_planes_through_line: induced conic degenerate");

    auto plane_from = [&](const Rat& s, const Rat& t) {
        QVec dir = vec_add(vec_scale(w[0], s), vec_scale(w[1], t));
        std::vector<QVec> vecs = line.basis();
        vecs.push_back(dir);
        Subspace p = Subspace::span_of(vecs, 6);
        if (!q.pullback(p.basis_matrix()).is_zero())
            throw std::logic_error("ruling_planes_through_line: constructed plane not on the quadric");
        return p;
    };

    if (a == 0 && c == 0) return RulingPlanes{plane_from(1, 0), plane_from(0, 1)};
    if (a == 0) return RulingPlanes{plane_from(1, 0), plane_from(-c, b)};
    if (c == 0) return RulingPlanes{plane_from(0, 1), plane_from(b, -a)};

    // rational roots iff the discriminant is a rational square
    BigInt num = numer(disc), den = denom(disc);
    if (num < 0) return IrrationalRulings{disc};
    BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return IrrationalRulings{disc};
    Rat root(sn, sd);
    Rat s1 = (-b + root) / (Rat(2) * a), s2 = (-b - root) / (Rat(2) * a);
    return RulingPlanes{plane_from(s1, 1), plane_from(s2, 1)};
}

QuadricForm residual_conic_in_plane(const CubicForm& w, const Subspace& plane,
                                    const Subspace& line) {
    if (!plane.contains(line)) throw std::invalid_argument("residual_conic_in_plane: line not in plane");
    // coordinates (t1, t2, v) with the line at {y3 = 0}
    std::vector<QVec> cols = line.basis();
    for (const auto& v : plane.basis()) {
        std::vector<QVec> probe = cols;
        probe.push_back(v);
        if (rank_of_vectors(probe) == 3) {
            cols.push_back(v);
            break;
        }
    }
    Poly cubic = w.pullback(QMat::from_columns(cols)).to_poly();
    // the line is on the cubic iff every monomial contains y3; divide it out
    Poly quotient(3);
    for (const auto& [e, c] : cubic.terms()) {
        if (e[2] == 0)
            throw std::invalid_argument("residual_conic_in_plane: cubic does not contain the line");
        Poly::Expo e2 = e;
        --e2[2];
        quotient.add_term(e2, c);
    }
    return QuadricForm::from_poly(quotient);
}

ConicSmoothness conic_smooth_point_test(const QuadricForm& q, const CubicForm& c, const Conic& conic) {
    const int n = q.dim();
    if (c.dim() != n || conic.plane.ambient() != n || conic.plane.dim() != 3)
        throw std::invalid_argument("conic_smooth_point_test: shape mismatch");
    if (conic.form.rank() != 3)
        throw std::invalid_argument("conic_smooth_point_test: conic is not smooth");

    QMat u = conic.plane.basis_matrix();
    QuadricForm q_on_u = q.pullback(u);

    ConicSmoothness out;
    // alpha: Q restricted to the supporting plane is alpha * qbar
    bool alpha_set = false;
    for (int i = 0; i < 3 && !alpha_set; ++i)
        for (int j = i; j < 3 && !alpha_set; ++j)
            if (conic.form.entry(i, j) != 0) {
                out.alpha = q_on_u.entry(i, j) / conic.form.entry(i, j);
                alpha_set = true;
            }
    if (!alpha_set || !(q_on_u == conic.form.scaled(out.alpha)))
        throw std::invalid_argument("conic_smooth_point_test: conic not on the quadric");
    out.isotropic = out.alpha == 0;

    // lambda: C restricted to the plane is lambda * qbar
    CubicForm c_on_u = c.pullback(u);
    auto lambda = divide_cubic_by_conic(c_on_u, conic.form);
    if (!lambda) throw std::invalid_argument("conic_smooth_point_test: conic not on the cubic");

    // replace C by alpha C - lambda Q (lambda extended by zero off the plane),
    // so the reduced cubic vanishes on the supporting plane
    CubicForm reduced = c;
    if (!out.isotropic) {
        // lambda as an ambient linear functional supported on the plane frame
        std::vector<QVec> frame = conic.plane.basis();
        auto comp = conic.plane.complement_basis();
        frame.insert(frame.end(), comp.begin(), comp.end());
        auto inv = QMat::from_columns(frame).inverse();
        QVec lam_amb(n);
        for (int i = 0; i < n; ++i) {
            QVec coords = inv->apply([&] {
                QVec e(n);
                e[i] = 1;
                return e;
            }());
            for (int r = 0; r < 3; ++r) lam_amb[i] += (*lambda)[r] * coords[r];
        }
        // polarization of lambda * Q
        CubicForm lq(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    Rat v = (lam_amb[i] * q.entry(j, k) + lam_amb[j] * q.entry(i, k) +
                             lam_amb[k] * q.entry(i, j)) /
                            3;
                    if (v != 0) lq.set_entry(i, j, k, v);
                }
        reduced = c.scaled(out.alpha) - lq;
        if (!reduced.pullback(u).is_zero())
            throw std::logic_error("conic_smooth_point_test: reduction failed to kill the plane part");
    }

    // the three section quadrics: y -> tri(reduced)(w_i, y, y) for a
    // complement frame w_i, restricted to the plane and read modulo qbar
    auto comp = conic.plane.complement_basis();
    std::vector<QVec> rows;
    for (const auto& w : comp) {
        QuadricForm qi(3);
        for (int a2 = 0; a2 < 3; ++a2)
            for (int b2 = a2; b2 < 3; ++b2)
                qi.set_entry(a2, b2, Rat(3) * reduced.tri(w, u.column(a2), u.column(b2)));
        QVec flat;
        for (int a2 = 0; a2 < 3; ++a2)
            for (int b2 = a2; b2 < 3; ++b2) flat.push_back(qi.entry(a2, b2));
        rows.push_back(std::move(flat));
    }
    QVec qflat;
    for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = a2; b2 < 3; ++b2) qflat.push_back(conic.form.entry(a2, b2));
    std::size_t with_conic;
    {
        auto all = rows;
        all.push_back(qflat);
        with_conic = rank_of_vectors(all);
    }
    out.section_rank = with_conic - 1;  // rank modulo the conic itself
    out.smooth = out.isotropic ? true : out.section_rank == 3;
    return out;
}

std::vector<QuadricForm> apolar_kernel(const CubicForm& c) {
    const int n = c.dim();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
    QMat sys(n, pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col) {
        auto [i, j] = pairs[col];
        const Rat mult = i == j ? 1 : 2;
        for (int k = 0; k < n; ++k) sys.at(k, col) = mult * c.entry(i, j, k);
    }
    std::vector<QuadricForm> out;
    for (const auto& nv : sys.nullspace()) {
        QuadricForm q(n);
        for (std::size_t col = 0; col < pairs.size(); ++col)
            q.set_entry(pairs[col].first, pairs[col].second, nv[col]);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<QuadricForm> apolar_space(const QuadricForm& qform) {
    const int n = qform.dim();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
    QMat sys(1, pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col) {
        auto [i, j] = pairs[col];
        const Rat mult = i == j ? 1 : 2;
        sys.at(0, col) = mult * qform.entry(i, j);
    }
    std::vector<QuadricForm> out;
    for (const auto& nv : sys.nullspace()) {
        QuadricForm q(n);
        for (std::size_t col = 0; col < pairs.size(); ++col)
            q.set_entry(pairs[col].first, pairs[col].second, nv[col]);
        out.push_back(std::move(q));
    }
    return out;
}

bool in_apolar_kernel(const CubicForm& c, const QuadricForm& q) {
    const int n = c.dim();
    for (int k = 0; k < n; ++k) {
        Rat acc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat qe = q.entry(i, j);
                if (qe != 0) acc += qe * c.entry(i, j, k);
            }
        if (acc != 0) return false;
    }
    return true;
}

Rat dm_cubic_theta(const CubicForm& c, const QuadricForm& q1, const QuadricForm& q2,
                   const QuadricForm& q3, bool enforce_membership) {
    const int n = c.dim();
    if (q1.dim() != n || q2.dim() != n || q3.dim() != n)
        throw std::invalid_argument("dm_cubic_theta: dimension mismatch");
    if (enforce_membership)
        for (const auto* q : {&q1, &q2, &q3})
            if (!in_apolar_kernel(c, *q))
                throw std::invalid_argument("dm_cubic_theta: tensor outside the apolar kernel");

    // contract the first slot of each tensor with one copy of the cubic and
    // the second slots with the other; iterated partial contractions
    auto contract_slot = [&](const std::vector<std::vector<std::vector<Rat>>>& block,
                             const QuadricForm& q, int slot) {
        std::vector<std::vector<std::vector<Rat>>> out(
            n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int d = 0; d < n; ++d) {
                    Rat acc = 0;
                    for (int i = 0; i < n; ++i) {
                        const Rat& blk = slot == 0 ? block[i][b][d] : (slot == 1 ? block[a][i][d] : block[a][b][i]);
                        if (blk != 0) {
                            Rat qe = q.entry(i, slot == 0 ? a : (slot == 1 ? b : d));
                            if (qe != 0) acc += blk * qe;
                        }
                    }
                    out[a][b][d] = acc;
                }
        return out;
    };

    std::vector<std::vector<std::vector<Rat>>> block(
        n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) block[i][j][k] = c.entry(i, j, k);
    block = contract_slot(block, q1, 0);
    block = contract_slot(block, q2, 1);
    block = contract_slot(block, q3, 2);

    Rat total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rat& blk = block[i][j][k];
                if (blk != 0) {
                    Rat ce = c.entry(i, j, k);
                    if (ce != 0) total += blk * ce;
                }
            }
    return total;
}

}  // namespace symp
}  // namespace chowfano
