#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chowfano/forms.hpp"

namespace chowfano {
namespace symp {

// thrown when a sampled configuration fails a genericity requirement; the
// harness redraws, operations never do
struct NonGenericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// basis of the tangent space at P(T) of the variety of linear subspaces inside
// {F = 0}: all u in Hom(T, V/T) with F(x, x, u(x)) = 0 on T
std::vector<TangentVector> fano_tangent_space(const CubicForm& f, const Subspace& t);

// frame (e1..e6) with e1,e2 spanning T, e3 completing the axis plane, and the
// three polarized forms F(e1,e1,.), F(e1,e2,.), F(e2,e2,.) dual to e4,e5,e6
struct LineFrame {
    std::vector<QVec> basis;   // 6 ambient vectors
    QMat to_frame_coords;      // inverse of the basis matrix
    Subspace axis;             // <e1,e2,e3>
};
LineFrame normalize_line_frame(const CubicForm& f, const Subspace& t);

// intersection of the tangent hyperplanes of {F=0} along the line, a plane
// containing T; checks Hom(T, S/T) lies inside the tangent space
Subspace axis_plane(const CubicForm& f, const Subspace& t);

// the skew 2-form on tangent vectors at a line, given a basis (e,f) of T and
// ambient representatives of the four images
Rat omega_value(const CubicForm& f, const QVec& e, const QVec& fv, const QVec& ue, const QVec& uf,
                const QVec& ve, const QVec& vf);
Rat omega_pair(const CubicForm& f, const Subspace& t, const TangentVector& u,
               const TangentVector& v);

// the 4-term wedge form on (u ^ v, u' ^ v'), evaluated against the volume of
// the supplied quotient frame (must have 4 vectors)
Rat k_form(const Subspace& t, const std::vector<QVec>& quotient_frame, const TangentVector& u,
           const TangentVector& v, const TangentVector& u2, const TangentVector& v2);

// (a,b,c,d) coordinates of a tangent vector in the normalized frame
std::array<Rat, 4> tangent_params(const LineFrame& frame, const TangentVector& u);
// a'c - ac' + bd' - b'd
Rat closed_form_value(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v);

struct BigOmega {
    LineFrame frame;
    std::vector<TangentVector> tangent_basis;  // the (a,b,c,d) parameter basis
    QMat matrix;                               // kappa * closed form on that basis
    Rat kappa;                                 // K = omega * (kappa * closed form)
    std::size_t rank = 0;
    Rat det;
};
BigOmega big_omega_matrix(const CubicForm& f, const Subspace& t);

struct LagrangianCertificate {
    int tangent_dim = 0;
    Rat omega;        // omega on the tangent basis pair (generically nonzero)
    Rat big_omega;    // must be exactly zero
    Rat k_value;      // must be exactly zero
    bool zero = false;
};

// tangent vectors of the line family constrained to a hyperplane through T;
// evaluates the symplectic form on the resulting surface tangent plane
LagrangianCertificate lagrangian_check_hyperplane(const CubicForm& f, const Subspace& h,
                                                  const Subspace& t);

// restriction of u in Hom(S, W/S) to T = S cap H, transported to Hom(T, H/T)
TangentVector restrict_to_line(const TangentVector& u, const Subspace& t, const Subspace& h);

LagrangianCertificate lagrangian_check_planes(const CubicForm& r, const Subspace& s,
                                              const Subspace& h);

// span of u(S) over the 2-dimensional tangent space, in quotient coordinates;
// dimension 4 contradicts the common-hyperplane bound and throws
Subspace common_image_hyperplane(const CubicForm& r, const Subspace& s);

// x0 * Q + W on a 7-dimensional space, the node at the x0 vertex
CubicForm nodal_cubic(const QuadricForm& q, const CubicForm& w, int x0_index);

struct Conic {
    Subspace plane;   // 3-dimensional subspace
    QuadricForm form; // rank-3 quadric in the plane's basis coordinates
};

struct ResidualPlane {
    Subspace plane;          // 3-dim subspace of the 7-space, inside the cubic
    Subspace residual_line;  // 2-dim, the plane cut by the node hyperplane
    QuadricForm secant_form; // conic restricted to the line: nonzero binary form
    bool tangential = false; // double contact point
};
ResidualPlane residual_plane(const Conic& q, const CubicForm& nodal, int x0_index);

struct RulingPlanes {
    Subspace plus;
    Subspace minus;
};
struct IrrationalRulings {
    Rat discriminant;  // not a rational square; the pair lives over Q(sqrt(disc))
};
std::variant<RulingPlanes, IrrationalRulings> ruling_planes_through_line(const QuadricForm& q,
                                                                         const Subspace& line);

// the conic of W cap P residual to a line contained in both
QuadricForm residual_conic_in_plane(const CubicForm& w, const Subspace& plane,
                                    const Subspace& line);

struct ConicSmoothness {
    bool smooth = false;
    bool isotropic = false;   // supporting plane inside the quadric
    std::size_t section_rank = 0;  // rank of the three restricted sections
    Rat alpha;
};
ConicSmoothness conic_smooth_point_test(const QuadricForm& q, const CubicForm& c, const Conic& conic);

// symmetric 2-tensors annihilated by contraction against the cubic (dim 7 in
// use) -- the kernel of S^2 V -> V*
std::vector<QuadricForm> apolar_kernel(const CubicForm& c);
// symmetric 2-tensors with full contraction against the quadric zero
std::vector<QuadricForm> apolar_space(const QuadricForm& q);

bool in_apolar_kernel(const CubicForm& c, const QuadricForm& q);

// the cubic form on the kernel space: both slots of each tensor contracted
// against the cubic's coefficient tensor; normalized as 1/8 of the regrouping
// sum (all eight regroupings agree on symmetric tensors)
Rat dm_cubic_theta(const CubicForm& c, const QuadricForm& q1, const QuadricForm& q2,
                   const QuadricForm& q3, bool enforce_membership = true);

}  // namespace symp
}  // namespace chowfano
