#include "hopfgate/matrix.hpp"

namespace hopfgate {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product dimension mismatch");
    RationalMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs(k, j) != 0) p(i, j) += a * rhs(k, j);
            }
        }
    return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix sum dimension mismatch");
    RationalMatrix s(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j) + rhs(i, j);
    return s;
}

RationalMatrix RationalMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
    validate_index_set(rows, rows_, "row");
    validate_index_set(cols, cols_, "column");
    RationalMatrix s((int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s((int)i, (int)j) = (*this)(rows[i], cols[j]);
    return s;
}

RationalMatrix RationalMatrix::without_column(int col) const {
    if (col < 0 || col >= cols_) throw DimensionError("column index out of range");
    RationalMatrix s(rows_, cols_ - 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0, t = 0; j < cols_; ++j)
            if (j != col) s(i, t++) = (*this)(i, j);
    return s;
}

RationalMatrix RationalMatrix::without_row(int row) const {
    if (row < 0 || row >= rows_) throw DimensionError("row index out of range");
    RationalMatrix s(rows_ - 1, cols_);
    for (int i = 0, t = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (int j = 0; j < cols_; ++j) s(t, j) = (*this)(i, j);
        ++t;
    }
    return s;
}

SignPattern SignPattern::of(const RationalMatrix& m) {
    SignPattern p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) p.set(i, j, sign_of(m(i, j)));
    return p;
}

int SignPattern::sign_from_symbol(const std::string& s) {
    if (s == "+") return 1;
    if (s == "0") return 0;
    if (s == "-" || s == "−") return -1;
    throw std::invalid_argument("not a sign symbol: " + s);
}

void SignPattern::set(int i, int j, int sign) {
    if (sign < -1 || sign > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
    signs_[(size_t)i * cols_ + j] = (signed char)sign;
}

SignPattern SignPattern::transpose() const {
    SignPattern t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
    return t;
}

SignPattern SignPattern::submatrix(const IndexSet& rows, const IndexSet& cols) const {
    validate_index_set(rows, rows_, "row");
    validate_index_set(cols, cols_, "column");
    SignPattern s((int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s.set((int)i, (int)j, (*this)(rows[i], cols[j]));
    return s;
}

RationalMatrix SignPattern::unit_member() const {
    RationalMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

void validate_index_set(const IndexSet& s, int bound, const char* what) {
    int prev = -1;
    for (int v : s) {
        if (v <= prev) throw DimensionError(std::string(what) + " index set not strictly increasing");
        if (v < 0 || v >= bound) throw DimensionError(std::string(what) + " index out of range");
        prev = v;
    }
}

} // namespace hopfgate
