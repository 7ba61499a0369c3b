#pragma once

#include <vector>

namespace adesign {

// Dense integer matrix. Every identity check in this project is exact
// integer arithmetic; there is no floating point anywhere.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long long rows, long long cols, long long fill = 0);

    static IntMatrix identity(long long n);
    static IntMatrix ones(long long rows, long long cols);

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }

    long long operator()(long long r, long long c) const { return a_[r * cols_ + c]; }
    long long& operator()(long long r, long long c) { return a_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;  // parallel across rows
    IntMatrix scaled(long long f) const;
    bool operator==(const IntMatrix& o) const = default;

    long long row_sum(long long r) const;
    long long col_sum(long long c) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool has_zero_diagonal() const;
    bool is_zero_one() const;

private:
    long long rows_ = 0, cols_ = 0;
    std::vector<long long> a_;
};

}  // namespace adesign
