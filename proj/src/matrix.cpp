#include "trileib/matrix.hpp"

#include <stdexcept>

namespace trileib {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix: dimension mismatch in +");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix: dimension mismatch in -");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix: dimension mismatch in *");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (trileib::is_zero(a)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(k, j);
                if (!trileib::is_zero(b)) out.at(i, j) += a * b;
            }
        }
    return out;
}

RatMatrix RatMatrix::operator-() const { return scaled(Rational(-1)); }

RatMatrix RatMatrix::scaled(const Rational& s) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!trileib::is_zero(v)) return false;
    return true;
}

bool RatMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i && j < cols_; ++j)
            if (!trileib::is_zero(at(i, j))) return false;
    return true;
}

std::vector<Rational> RatMatrix::row(std::size_t r) const {
    return std::vector<Rational>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void RatMatrix::set_row(std::size_t r, const std::vector<Rational>& values) {
    if (values.size() != cols_) throw std::invalid_argument("matrix: bad row length");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = values[j];
}

RrefResult rref(const RatMatrix& m) {
    RrefResult res;
    res.matrix = m;
    RatMatrix& a = res.matrix;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) swap(a.at(pivot, j), a.at(lead, j));
        Rational inv = 1 / a.at(lead, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || is_zero(a.at(i, col))) continue;
            Rational factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(lead, j);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (is_zero(r.matrix.at(i, i))) throw std::invalid_argument("inverse: singular matrix");
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r.matrix.at(i, n + j);
    return out;
}

bool is_invertible(const RatMatrix& m) {
    return m.is_square() && rref(m).rank == m.rows();
}

RatMatrix kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RatMatrix basis(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(k, fc) = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            basis.at(k, r.pivot_cols[p]) = -r.matrix.at(p, fc);
    }
    return rref(basis).matrix;
}

RatMatrix matrix_power(const RatMatrix& m, std::size_t e) {
    if (!m.is_square()) throw std::invalid_argument("matrix_power: non-square matrix");
    RatMatrix acc = RatMatrix::identity(m.rows());
    for (std::size_t i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

bool mat_is_nilpotent(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("mat_is_nilpotent: non-square matrix");
    // m^d = 0 iff m is nilpotent; square repeatedly so only ceil(log2 d) products happen.
    RatMatrix p = m;
    std::size_t covered = 1;
    while (covered < m.rows()) {
        if (p.is_zero()) return true;
        p = p * p;
        covered *= 2;
    }
    return p.is_zero();
}

}  // namespace trileib
