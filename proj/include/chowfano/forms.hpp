#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowfano/linalg.hpp"
#include "chowfano/poly.hpp"
#include "chowfano/rational.hpp"

namespace chowfano {
namespace symp {

// Fully symmetric trilinear tensor P(x,y,z) with P(x,x,x) the cubic itself.
class CubicForm {
public:
    CubicForm() = default;
    explicit CubicForm(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }

    Rat entry(int i, int j, int k) const;
    void set_entry(int i, int j, int k, const Rat& v);

    // tri(x, y, z)
    Rat tri(const QVec& x, const QVec& y, const QVec& z) const;
    // the cubic polynomial P(x) = tri(x,x,x)
    Rat evaluate(const QVec& x) const;
    // gradient of P at x, = 3 tri(x, x, e_i)
    QVec gradient(const QVec& x) const;
    // the linear form tri(x, y, .) as a coefficient vector
    QVec contract(const QVec& x, const QVec& y) const;

    CubicForm scaled(const Rat& s) const;
    CubicForm operator+(const CubicForm& o) const;
    CubicForm operator-(const CubicForm& o) const;

    // pullback along a linear map: columns of m are images of basis vectors;
    // restriction to a subspace is the pullback along its basis matrix
    CubicForm pullback(const QMat& m) const;

    // polynomial in `nvars` variables with monomial coefficients (exponent
    // vector keyed), the serialization form
    Poly to_poly() const;
    static CubicForm from_poly(const Poly& p);

    bool operator==(const CubicForm& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }

private:
    static std::array<int, 3> key(int i, int j, int k);
    int dim_ = 0;
    std::map<std::array<int, 3>, Rat> entries_;  // sorted index triples
};

// polarize a cubic polynomial given as monomial data
CubicForm polarize(const Poly& cubic_poly);

class QuadricForm {
public:
    QuadricForm() = default;
    explicit QuadricForm(int dim) : dim_(dim), sym_(dim, QVec(dim)) {}

    int dim() const { return dim_; }
    const QMat matrix() const;
    Rat entry(int i, int j) const { return sym_[i][j]; }
    void set_entry(int i, int j, const Rat& v) { sym_[i][j] = sym_[j][i] = v; }

    Rat bilinear(const QVec& x, const QVec& y) const;
    Rat evaluate(const QVec& x) const { return bilinear(x, x); }
    QVec contract(const QVec& x) const;  // the linear form B(x, .)
    std::size_t rank() const;
    bool is_zero() const;

    QuadricForm scaled(const Rat& s) const;
    QuadricForm operator+(const QuadricForm& o) const;
    QuadricForm operator-(const QuadricForm& o) const;
    QuadricForm pullback(const QMat& m) const;

    Poly to_poly() const;
    static QuadricForm from_poly(const Poly& p);

    bool operator==(const QuadricForm& o) const { return dim_ == o.dim_ && sym_ == o.sym_; }

private:
    int dim_ = 0;
    std::vector<QVec> sym_;
};

// Linear subspace given by a full-column-rank basis matrix; equality is
// equality of column spans.
class Subspace {
public:
    Subspace() = default;
    Subspace(int ambient_dim, std::vector<QVec> basis);
    static Subspace span_of(const std::vector<QVec>& vectors, int ambient_dim);
    static Subspace full(int ambient_dim);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<QVec>& basis() const { return basis_; }
    QMat basis_matrix() const { return QMat::from_columns(basis_); }

    bool contains_vector(const QVec& v) const;
    bool contains(const Subspace& other) const;
    bool same_span(const Subspace& other) const;

    // some ambient vector reducing to the given coordinates is x = B c
    QVec from_coords(const QVec& c) const;
    // coordinates of v in the basis, if v lies in the span
    std::optional<QVec> coords_of(const QVec& v) const;

    // standard unit vectors completing the span to the ambient space
    std::vector<QVec> complement_basis() const;
    // intersection and sum of spans
    Subspace intersect(const Subspace& other) const;
    Subspace add(const Subspace& other) const;

private:
    int ambient_ = 0;
    std::vector<QVec> basis_;
};

// u in Hom(source, ambient/source): images of the source basis expressed in a
// chosen complement frame. Columns of `matrix` are indexed by source basis
// vectors, rows by complement frame vectors.
struct TangentVector {
    Subspace source;
    std::vector<QVec> complement;  // frame of the quotient (ambient vectors)
    QMat matrix;

    int quotient_dim() const { return static_cast<int>(complement.size()); }
    // an ambient representative of u(x) for x in the source
    QVec image_of(const QVec& x) const;
    // image of the j-th source basis vector
    QVec image_of_basis(int j) const;
};

}  // namespace symp
}  // namespace chowfano
