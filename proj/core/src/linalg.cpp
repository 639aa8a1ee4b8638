#include "qhopf/linalg.hpp"

#include <sstream>
#include <utility>

namespace qhopf {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNumber(1L);
    return m;
}

Matrix Matrix::diagonal(const std::vector<CycNumber>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycNumber& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycNumber& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                out(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator*(const CycNumber& s, const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.data_)
        if (!v.is_zero()) v = s * v;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (!(a.data_[i] == b.data_[i])) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

std::vector<CycNumber> Matrix::diagonal_entries() const {
    std::vector<CycNumber> out;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back((*this)(i, i));
    return out;
}

Matrix Matrix::pow(unsigned k) const {
    if (rows_ != cols_) throw InvalidArgument("power of a non-square matrix");
    Matrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
        out << "]\n";
    }
    return out.str();
}

namespace {

// Row-reduces in place, returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::vector<CycNumber>>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const CycNumber inv = rows[r][c].inverse();
        for (std::size_t j = c; j < rows[r].size(); ++j)
            if (!rows[r][j].is_zero()) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const CycNumber f = rows[i][c];
            for (std::size_t j = c; j < rows[i].size(); ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<CycNumber>> to_rows(const Matrix& m) {
    std::vector<std::vector<CycNumber>> rows(m.rows(), std::vector<CycNumber>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace

std::size_t rank(Matrix m) {
    auto rows = to_rows(m);
    return eliminate(rows, m.cols()).size();
}

std::optional<std::vector<CycNumber>> solve(Matrix a, std::vector<CycNumber> b) {
    if (b.size() != a.rows()) throw InvalidArgument("right-hand side length mismatch");
    auto rows = to_rows(a);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
    const auto pivots = eliminate(rows, a.cols());
    for (std::size_t i = pivots.size(); i < rows.size(); ++i)
        if (!rows[i][a.cols()].is_zero()) return std::nullopt;
    std::vector<CycNumber> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][a.cols()];
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto rows = to_rows(m);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(2 * n);
        rows[i][n + i] = CycNumber(1L);
    }
    const auto pivots = eliminate(rows, n);
    if (pivots.size() < n)
        throw SingularElement("matrix rank " + std::to_string(pivots.size()) + " < " + std::to_string(n));
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][n + j];
    return out;
}

}  // namespace qhopf
