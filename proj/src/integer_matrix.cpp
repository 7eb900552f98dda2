#include "simplicial/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace simplicial {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool IntegerMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Integer> IntegerMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntegerMatrix::set_column(std::size_t c, const std::vector<Integer>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntegerMatrix IntegerMatrix::row_range(std::size_t begin, std::size_t end) const {
    IntegerMatrix m(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
    return m;
}

IntegerMatrix IntegerMatrix::col_range(std::size_t begin, std::size_t end) const {
    IntegerMatrix m(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
    return m;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (a != 0 && v[c] != 0) acc += a * v[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (y != 0) m(i, j) += x * y;
            }
        }
    return m;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    IntegerMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    IntegerMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const auto& s = (*this)(source, c);
        if (s != 0) (*this)(target, c) += factor * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& s = (*this)(r, source);
        if (s != 0) (*this)(r, target) += factor * s;
    }
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntegerMatrix::to_text() const {
    std::ostringstream out;
    out << "MATRIX 1\n" << "rows " << rows_ << " cols " << cols_ << "\n";
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << (*this)(r, c);
        }
        out << '\n';
    }
    return out.str();
}

IntegerMatrix IntegerMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic, word_rows, word_cols;
    int version = 0;
    std::size_t rows = 0, cols = 0;
    if (!(in >> magic >> version) || magic != "MATRIX" || version != 1)
        throw std::invalid_argument("matrix text: expected header 'MATRIX 1'");
    if (!(in >> word_rows >> rows >> word_cols >> cols) || word_rows != "rows" || word_cols != "cols")
        throw std::invalid_argument("matrix text: expected 'rows R cols C'");
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("matrix text: too few entries");
            try {
                m(r, c) = Integer(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("matrix text: bad entry '" + tok + "'");
            }
        }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("matrix text: trailing data");
    return m;
}

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    IntegerMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    IntegerMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
    }
    return m;
}

IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    if (m == 0) return a;
    Integer r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

}  // namespace simplicial
