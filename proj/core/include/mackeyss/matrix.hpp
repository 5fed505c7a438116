#pragma once

#include "mackeyss/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mss {

using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVector& d);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    void set_column(std::size_t c, const IntVector& v);

    IntMatrix transpose() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
    bool is_zero() const;

    // Elementary operations used by the normal form routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);  // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);  // col dst += k * col src
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    IntVector apply(const IntVector& v) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& k, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& m);

struct SmithForm {
    IntMatrix U, D, V;
    IntMatrix Uinv, Vinv;  // filled only when requested
    std::size_t rank = 0;
    IntVector diagonal() const;
};

struct SmithOptions {
    bool want_u = true;
    bool want_v = true;
    bool want_uinv = false;
    bool want_vinv = false;
};

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all nonnegative.
SmithForm smith_normal_form(const IntMatrix& m, SmithOptions opt = {});

// Integer solutions x of M x = 0, returned as the columns of a basis matrix.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace mss
