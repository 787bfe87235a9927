#include "chowfano/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowfano {
namespace symp {

std::array<int, 3> CubicForm::key(int i, int j, int k) {
    std::array<int, 3> a{i, j, k};
    std::sort(a.begin(), a.end());
    return a;
}

Rat CubicForm::entry(int i, int j, int k) const {
    auto it = entries_.find(key(i, j, k));
    return it == entries_.end() ? Rat(0) : it->second;
}

void CubicForm::set_entry(int i, int j, int k, const Rat& v) {
    auto a = key(i, j, k);
    if (a[0] < 0 || a[2] >= dim_) throw std::invalid_argument("CubicForm: index out of range");
    if (v == 0)
        entries_.erase(a);
    else
        entries_[a] = v;
}

namespace {
// distinct permutations of a sorted triple
std::vector<std::array<int, 3>> distinct_perms(const std::array<int, 3>& a) {
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> p = a;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}
}  // namespace

Rat CubicForm::tri(const QVec& x, const QVec& y, const QVec& z) const {
    Rat total = 0;
    for (const auto& [a, v] : entries_)
        for (const auto& p : distinct_perms(a)) total += v * x[p[0]] * y[p[1]] * z[p[2]];
    return total;
}

Rat CubicForm::evaluate(const QVec& x) const { return tri(x, x, x); }

QVec CubicForm::gradient(const QVec& x) const {
    QVec g(dim_);
    for (const auto& [a, v] : entries_)
        for (const auto& p : distinct_perms(a)) g[p[2]] += Rat(3) * v * x[p[0]] * x[p[1]];
    return g;
}

QVec CubicForm::contract(const QVec& x, const QVec& y) const {
    QVec g(dim_);
    for (const auto& [a, v] : entries_)
        for (const auto& p : distinct_perms(a)) g[p[2]] += v * x[p[0]] * y[p[1]];
    return g;
}

CubicForm CubicForm::scaled(const Rat& s) const {
    CubicForm c(dim_);
    if (s == 0) return c;
    for (const auto& [a, v] : entries_) c.entries_.emplace(a, v * s);
    return c;
}

CubicForm CubicForm::operator+(const CubicForm& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CubicForm +: dimension mismatch");
    CubicForm c = *this;
    for (const auto& [a, v] : o.entries_) {
        auto [it, inserted] = c.entries_.emplace(a, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c.entries_.erase(it);
        }
    }
    return c;
}

CubicForm CubicForm::operator-(const CubicForm& o) const { return *this + o.scaled(-1); }

CubicForm CubicForm::pullback(const QMat& m) const {
    if (static_cast<int>(m.rows()) != dim_) throw std::invalid_argument("pullback: shape mismatch");
    const int d = static_cast<int>(m.cols());
    CubicForm out(d);
    std::vector<QVec> cols;
    for (int j = 0; j < d; ++j) cols.push_back(m.column(j));
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            for (int k = j; k < d; ++k) {
                Rat v = tri(cols[i], cols[j], cols[k]);
                if (v != 0) out.set_entry(i, j, k, v);
            }
    return out;
}

Poly CubicForm::to_poly() const {
    Poly p(dim_);
    for (const auto& [a, v] : entries_) {
        Poly::Expo e(dim_, 0);
        ++e[a[0]];
        ++e[a[1]];
        ++e[a[2]];
        // multiplicity of the monomial among ordered triples
        p.add_term(e, v * Rat(static_cast<long long>(distinct_perms(a).size())));
    }
    return p;
}

CubicForm CubicForm::from_poly(const Poly& p) { return polarize(p); }

CubicForm polarize(const Poly& cubic_poly) {
    const int n = cubic_poly.nvars();
    CubicForm out(n);
    for (const auto& [e, c] : cubic_poly.terms()) {
        std::vector<int> idx;
        for (int v = 0; v < n; ++v)
            for (int t = 0; t < e[v]; ++t) idx.push_back(v);
        if (idx.size() != 3) throw std::invalid_argument("polarize: polynomial is not cubic");
        std::array<int, 3> a{idx[0], idx[1], idx[2]};
        // tensor entry = coefficient / number of ordered arrangements
        std::vector<std::array<int, 3>> perms;
        {
            std::array<int, 3> q = a;
            do {
                perms.push_back(q);
            } while (std::next_permutation(q.begin(), q.end()));
        }
        out.set_entry(a[0], a[1], a[2],
                      out.entry(a[0], a[1], a[2]) + c / Rat(static_cast<long long>(perms.size())));
    }
    return out;
}

const QMat QuadricForm::matrix() const {
    QMat m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = sym_[i][j];
    return m;
}

Rat QuadricForm::bilinear(const QVec& x, const QVec& y) const {
    Rat total = 0;
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (sym_[i][j] != 0) total += x[i] * sym_[i][j] * y[j];
    }
    return total;
}

QVec QuadricForm::contract(const QVec& x) const {
    QVec g(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (sym_[i][j] != 0) g[j] += x[i] * sym_[i][j];
    return g;
}

std::size_t QuadricForm::rank() const { return matrix().rank(); }

bool QuadricForm::is_zero() const {
    for (const auto& row : sym_)
        if (!vec_is_zero(row)) return false;
    return true;
}

QuadricForm QuadricForm::scaled(const Rat& s) const {
    QuadricForm q(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) q.sym_[i][j] = sym_[i][j] * s;
    return q;
}

QuadricForm QuadricForm::operator+(const QuadricForm& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("QuadricForm +: dimension mismatch");
    QuadricForm q(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) q.sym_[i][j] = sym_[i][j] + o.sym_[i][j];
    return q;
}

QuadricForm QuadricForm::operator-(const QuadricForm& o) const { return *this + o.scaled(-1); }

QuadricForm QuadricForm::pullback(const QMat& m) const {
    if (static_cast<int>(m.rows()) != dim_) throw std::invalid_argument("pullback: shape mismatch");
    const int d = static_cast<int>(m.cols());
    QuadricForm out(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Rat v = bilinear(m.column(i), m.column(j));
            out.set_entry(i, j, v);
        }
    return out;
}

Poly QuadricForm::to_poly() const {
    Poly p(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            if (sym_[i][j] == 0) continue;
            Poly::Expo e(dim_, 0);
            ++e[i];
            ++e[j];
            p.add_term(e, i == j ? sym_[i][j] : Rat(2) * sym_[i][j]);
        }
    return p;
}

QuadricForm QuadricForm::from_poly(const Poly& p) {
    QuadricForm out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> idx;
        for (int v = 0; v < p.nvars(); ++v)
            for (int t = 0; t < e[v]; ++t) idx.push_back(v);
        if (idx.size() != 2) throw std::invalid_argument("QuadricForm: polynomial is not quadratic");
        if (idx[0] == idx[1])
            out.set_entry(idx[0], idx[1], out.entry(idx[0], idx[1]) + c);
        else
            out.set_entry(idx[0], idx[1], out.entry(idx[0], idx[1]) + c / 2);
    }
    return out;
}

Subspace::Subspace(int ambient_dim, std::vector<QVec> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_)
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("Subspace: vector length mismatch");
    if (!basis_.empty() && rank_of_vectors(basis_) != basis_.size())
        throw std::invalid_argument("Subspace: basis columns dependent");
}

Subspace Subspace::span_of(const std::vector<QVec>& vectors, int ambient_dim) {
    QMat m = vectors.empty() ? QMat(0, ambient_dim) : QMat::from_rows(vectors);
    auto pivots = m.rref();
    std::vector<QVec> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(i));
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<QVec> basis;
    for (int i = 0; i < ambient_dim; ++i) {
        QVec v(ambient_dim);
        v[i] = 1;
        basis.push_back(std::move(v));
    }
    return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains_vector(const QVec& v) const {
    if (vec_is_zero(v)) return true;
    std::vector<QVec> rows = basis_;
    rows.push_back(v);
    return rank_of_vectors(rows) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains_vector(v)) return false;
    return true;
}

bool Subspace::same_span(const Subspace& other) const {
    return dim() == other.dim() && contains(other);
}

QVec Subspace::from_coords(const QVec& c) const {
    QVec out(ambient_);
    for (std::size_t j = 0; j < basis_.size(); ++j)
        for (int i = 0; i < ambient_; ++i) out[i] += basis_[j][i] * c[j];
    return out;
}

std::optional<QVec> Subspace::coords_of(const QVec& v) const {
    return basis_matrix().solve(v);
}

std::vector<QVec> Subspace::complement_basis() const {
    QMat m = basis_.empty() ? QMat(0, ambient_) : QMat::from_rows(basis_);
    auto pivots = m.rref();
    std::vector<bool> used(ambient_, false);
    for (auto p : pivots) used[p] = true;
    std::vector<QVec> comp;
    for (int i = 0; i < ambient_; ++i) {
        if (used[i]) continue;
        QVec v(ambient_);
        v[i] = 1;
        comp.push_back(std::move(v));
    }
    return comp;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
    // nullspace of [A | -B] stitched back through A
    QMat m(ambient_, dim() + other.dim());
    for (int j = 0; j < dim(); ++j)
        for (int i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
    for (int j = 0; j < other.dim(); ++j)
        for (int i = 0; i < ambient_; ++i) m.at(i, dim() + j) = -other.basis_[j][i];
    std::vector<QVec> vecs;
    for (const auto& null : m.nullspace()) {
        QVec c(null.begin(), null.begin() + dim());
        vecs.push_back(from_coords(c));
    }
    return span_of(vecs, ambient_);
}

Subspace Subspace::add(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("add: ambient mismatch");
    std::vector<QVec> vecs = basis_;
    vecs.insert(vecs.end(), other.basis_.begin(), other.basis_.end());
    return span_of(vecs, ambient_);
}

QVec TangentVector::image_of(const QVec& x) const {
    auto c = source.coords_of(x);
    if (!c) throw std::invalid_argument("TangentVector: vector not in the source subspace");
    QVec img(source.ambient());
    QVec mc = matrix.apply(*c);
    for (std::size_t r = 0; r < complement.size(); ++r)
        for (int i = 0; i < source.ambient(); ++i) img[i] += complement[r][i] * mc[r];
    return img;
}

QVec TangentVector::image_of_basis(int j) const {
    QVec img(source.ambient());
    for (std::size_t r = 0; r < complement.size(); ++r)
        for (int i = 0; i < source.ambient(); ++i) img[i] += complement[r][i] * matrix.at(r, j);
    return img;
}

}  // namespace symp
}  // namespace chowfano
