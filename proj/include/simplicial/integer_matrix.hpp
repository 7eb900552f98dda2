#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simplicial {

using Integer = boost::multiprecision::cpp_int;

/**
 * Dense matrix of arbitrary-precision integers, row-major.
 *
 * Boundary maps, chain maps and presentation matrices all live here. Sizes
 * are desk scale (a few hundred rows at most), so dense storage is fine.
 */
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    IntegerMatrix transpose() const;
    std::vector<Integer> column(std::size_t c) const;
    std::vector<Integer> row(std::size_t r) const;
    void set_column(std::size_t c, const std::vector<Integer>& v);

    // Row/column slices [begin, end).
    IntegerMatrix row_range(std::size_t begin, std::size_t end) const;
    IntegerMatrix col_range(std::size_t begin, std::size_t end) const;

    std::vector<Integer> apply(const std::vector<Integer>& v) const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
    IntegerMatrix operator-() const;
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

    // Elementary operations used by the reductions.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    // Shared matrix text format ("MATRIX 1" header, then "rows R cols C",
    // then one whitespace-separated line per row).
    std::string to_text() const;
    static IntegerMatrix from_text(const std::string& text);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b);

/// Floor division and the matching non-negative-or-sign-consistent remainder.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace simplicial
