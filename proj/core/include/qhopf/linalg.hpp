#pragma once

// Dense exact matrices over the cyclotomic field. Sizes here are small
// (operator matrices on n-dimensional modules, at most a few hundred
// rows for span computations), so plain Gaussian elimination is used.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/cyclotomic.hpp"

namespace qhopf {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<CycNumber>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CycNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const CycNumber& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    bool is_diagonal() const;
    std::vector<CycNumber> diagonal_entries() const;

    /// Matrix power, k >= 0.
    Matrix pow(unsigned k) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycNumber> data_;
};

/// Exact rank by Gaussian elimination.
std::size_t rank(Matrix m);

/// Solves a x = b; nullopt if the system is inconsistent. Free variables are set to 0.
std::optional<std::vector<CycNumber>> solve(Matrix a, std::vector<CycNumber> b);

/// Inverse of a square matrix; throws SingularElement when it has none.
Matrix inverse(const Matrix& m);

}  // namespace qhopf
