#pragma once

#include <cstddef>
#include <vector>

#include "trileib/rational.hpp"

namespace trileib {

// Dense matrix over exact rationals. Dimensions are fixed at construction.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    bool operator==(const RatMatrix& other) const = default;

    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator-() const;
    RatMatrix scaled(const Rational& s) const;
    RatMatrix transpose() const;

    bool is_zero() const;
    bool is_upper_triangular() const;

    std::vector<Rational> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Rational>& values);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RatMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan over the rationals; exact, no pivoting heuristics needed.
RrefResult rref(const RatMatrix& m);

// Throws std::invalid_argument on a singular or non-square input.
RatMatrix inverse(const RatMatrix& m);

bool is_invertible(const RatMatrix& m);

// Rows of the result form an RREF basis of the right null space {x : m x = 0}.
RatMatrix kernel_basis(const RatMatrix& m);

// True iff m^d = 0 where d is the matrix size. Throws on non-square input.
bool mat_is_nilpotent(const RatMatrix& m);

RatMatrix matrix_power(const RatMatrix& m, std::size_t e);

}  // namespace trileib
