#pragma once

#include "hopfgate/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hopfgate {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeLimitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strictly increasing row/column indices.
using IndexSet = std::vector<int>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_((size_t)rows * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[(size_t)i * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return data_[(size_t)i * cols_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const = default;

    RationalMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
    RationalMatrix without_column(int col) const;
    RationalMatrix without_row(int row) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

class SignPattern {
public:
    SignPattern() = default;
    SignPattern(int rows, int cols)
        : rows_(rows), cols_(cols), signs_((size_t)rows * cols, 0) {}

    static SignPattern of(const RationalMatrix& m);
    /// Parse from "+", "-", "0" cells (also accepts a unicode minus).
    static int sign_from_symbol(const std::string& s);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int operator()(int i, int j) const { return signs_[(size_t)i * cols_ + j]; }
    void set(int i, int j, int sign);

    SignPattern transpose() const;
    SignPattern submatrix(const IndexSet& rows, const IndexSet& cols) const;
    /// A member of the class with every nonzero entry set to +-1.
    RationalMatrix unit_member() const;
    bool operator==(const SignPattern& rhs) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<signed char> signs_;
};

void validate_index_set(const IndexSet& s, int bound, const char* what);

} // namespace hopfgate
