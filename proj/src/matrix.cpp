#include "stargate/matrix.hpp"

#include <algorithm>

namespace stargate {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.resize(rows_ * cols_);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw argument_error("ragged initializer");
        std::size_t c = 0;
        for (long v : row) at(r, c++) = Rational(v);
        ++r;
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
    if (cols.empty()) return {};
    RatMatrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows()) throw argument_error("ragged columns");
        for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const {
    RatVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

RatVector RatMatrix::column(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<RatVector> RatMatrix::columns() const {
    std::vector<RatVector> cs;
    cs.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) cs.push_back(column(c));
    return cs;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw argument_error("dimension mismatch in product");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out.at(r, c) += a * rhs.at(k, c);
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw argument_error("dimension mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw argument_error("dimension mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

RatMatrix RatMatrix::scaled(const Rational& a) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * a;
    return out;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (v.size() != cols_) throw argument_error("dimension mismatch in apply");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    return out;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    RatMatrix m = *this;
    if (pivot_cols) pivot_cols->clear();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
        std::size_t sel = pr;
        while (sel < rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(pr, k), m.at(sel, k));
        Rational inv = 1 / m.at(pr, c);
        for (std::size_t k = c; k < cols_; ++k) m.at(pr, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || m.at(r, c) == 0) continue;
            Rational f = m.at(r, c);
            for (std::size_t k = c; k < cols_; ++k) m.at(r, k) -= f * m.at(pr, k);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++pr;
    }
    return m;
}

std::size_t RatMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Rational RatMatrix::determinant() const {
    if (!is_square()) throw argument_error("determinant of non-square matrix");
    RatMatrix m = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t sel = c;
        while (sel < rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == rows_) return Rational(0);
        if (sel != c) {
            for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(c, k), m.at(sel, k));
            det = -det;
        }
        det *= m.at(c, c);
        Rational inv = 1 / m.at(c, c);
        for (std::size_t r = c + 1; r < rows_; ++r) {
            if (m.at(r, c) == 0) continue;
            Rational f = m.at(r, c) * inv;
            for (std::size_t k = c; k < cols_; ++k) m.at(r, k) -= f * m.at(c, k);
        }
    }
    return det;
}

RatMatrix RatMatrix::inverse() const {
    if (!is_square()) throw argument_error("inverse of non-square matrix");
    RatMatrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    std::vector<std::size_t> piv;
    RatMatrix red = aug.rref(&piv);
    if (piv.size() != rows_ || piv.back() >= cols_)
        throw argument_error("matrix is singular");
    RatMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = red.at(r, cols_ + c);
    return inv;
}

RatMatrix RatMatrix::pow(unsigned e) const {
    if (!is_square()) throw argument_error("power of non-square matrix");
    RatMatrix acc = identity(rows_);
    RatMatrix base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::vector<RatVector> RatMatrix::kernel_basis() const {
    std::vector<std::size_t> piv;
    RatMatrix red = rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_piv[free]) continue;
        RatVector v(cols_);
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVector> RatMatrix::image_basis() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    std::vector<RatVector> basis;
    for (std::size_t c : piv) basis.push_back(column(c));
    return basis;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw argument_error("vector size mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw argument_error("vector size mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVector scaled(const RatVector& v, const Rational& a) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * a;
    return out;
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RatVector solve(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw argument_error("solve: dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> piv;
    RatMatrix red = aug.rref(&piv);
    if (!piv.empty() && piv.back() == a.cols())
        throw argument_error("solve: inconsistent system");
    if (piv.size() != a.cols())
        throw argument_error("solve: underdetermined system");
    RatVector x(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red.at(i, a.cols());
    return x;
}

RatVector solve_any(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw argument_error("solve: dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> piv;
    RatMatrix red = aug.rref(&piv);
    if (!piv.empty() && piv.back() == a.cols())
        throw argument_error("solve: inconsistent system");
    RatVector x(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red.at(i, a.cols());
    return x;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<RatVector> spanning)
    : ambient_(ambient_dim) {
    for (const auto& v : spanning)
        if (v.size() != ambient_) throw argument_error("spanning vector of wrong dimension");
    canonicalize(std::move(spanning));
}

void Subspace::canonicalize(std::vector<RatVector> spanning) {
    if (spanning.empty()) { basis_.clear(); return; }
    // Rows of the RREF of the stacked spanning vectors form the canonical basis.
    RatMatrix m(spanning.size(), ambient_);
    for (std::size_t r = 0; r < spanning.size(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) m.at(r, c) = spanning[r][c];
    std::vector<std::size_t> piv;
    RatMatrix red = m.rref(&piv);
    basis_.clear();
    for (std::size_t i = 0; i < piv.size(); ++i) basis_.push_back(red.row(i));
}

bool Subspace::contains(const RatVector& v) const {
    if (v.size() != ambient_) throw argument_error("vector of wrong dimension");
    RatVector r = v;
    for (const auto& b : basis_) {
        std::size_t lead = 0;
        while (lead < ambient_ && b[lead] == 0) ++lead;
        if (lead < ambient_ && r[lead] != 0) r = r - scaled(b, r[lead] / b[lead]);
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw argument_error("ambient mismatch");
    std::vector<RatVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return Subspace(ambient_, std::move(all));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw argument_error("ambient mismatch");
    if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
    // ker [A | -B] gives coefficient pairs; A-part spans the intersection.
    RatMatrix m(ambient_, basis_.size() + other.basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c)
        for (std::size_t r = 0; r < ambient_; ++r) m.at(r, c) = basis_[c][r];
    for (std::size_t c = 0; c < other.basis_.size(); ++c)
        for (std::size_t r = 0; r < ambient_; ++r)
            m.at(r, basis_.size() + c) = -other.basis_[c][r];
    std::vector<RatVector> span;
    for (const auto& k : m.kernel_basis()) {
        RatVector v(ambient_);
        for (std::size_t c = 0; c < basis_.size(); ++c)
            if (k[c] != 0) v = v + scaled(basis_[c], k[c]);
        if (!is_zero(v)) span.push_back(std::move(v));
    }
    return Subspace(ambient_, std::move(span));
}

Subspace Subspace::apply(const RatMatrix& m) const {
    std::vector<RatVector> span;
    for (const auto& b : basis_) span.push_back(m.apply(b));
    return Subspace(m.rows(), std::move(span));
}

Subspace Subspace::full(std::size_t n) {
    std::vector<RatVector> span;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n);
        e[i] = 1;
        span.push_back(std::move(e));
    }
    return Subspace(n, std::move(span));
}

Subspace Subspace::kernel_of(const RatMatrix& m) {
    return Subspace(m.cols(), m.kernel_basis());
}

Subspace Subspace::image_of(const RatMatrix& m) {
    return Subspace(m.rows(), m.image_basis());
}

} // namespace stargate
