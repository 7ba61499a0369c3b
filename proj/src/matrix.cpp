#include "adesign/matrix.hpp"

#include <stdexcept>

namespace adesign {

IntMatrix::IntMatrix(long long rows, long long cols, long long fill)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
}

IntMatrix IntMatrix::identity(long long n) {
    IntMatrix m(n, n, 0);
    for (long long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(long long rows, long long cols) { return IntMatrix(rows, cols, 1); }

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (long long r = 0; r < rows_; ++r)
        for (long long c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in addition");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in subtraction");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    IntMatrix p(rows_, o.cols_);
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < rows_; ++r) {
        for (long long m = 0; m < cols_; ++m) {
            long long x = (*this)(r, m);
            if (x == 0) continue;
            for (long long c = 0; c < o.cols_; ++c) p(r, c) += x * o(m, c);
        }
    }
    return p;
}

IntMatrix IntMatrix::scaled(long long f) const {
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * f;
    return s;
}

long long IntMatrix::row_sum(long long r) const {
    long long s = 0;
    for (long long c = 0; c < cols_; ++c) s += (*this)(r, c);
    return s;
}

long long IntMatrix::col_sum(long long c) const {
    long long s = 0;
    for (long long r = 0; r < rows_; ++r) s += (*this)(r, c);
    return s;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (long long r = 0; r < rows_; ++r)
        for (long long c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

bool IntMatrix::has_zero_diagonal() const {
    if (!is_square()) return false;
    for (long long i = 0; i < rows_; ++i)
        if ((*this)(i, i) != 0) return false;
    return true;
}

bool IntMatrix::is_zero_one() const {
    for (long long x : a_)
        if (x != 0 && x != 1) return false;
    return true;
}

}  // namespace adesign
