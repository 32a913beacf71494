#pragma once

#include <vector>

namespace nakayama {

// Dense row-major integer matrix.  Every matrix in this project is tiny (a
// few hundred entries at most), so there is no sparsity and no pivoting
// subtlety; all arithmetic is overflow-checked so a failure is loud instead
// of silently corrupting a rank.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    long long at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;

    Mat operator*(const Mat& rhs) const;

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> a_;
};

long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);

// Rank by fraction-free (Bareiss) elimination.
int rank(Mat a);

// Columns form a primitive integer basis of the kernel of a, derived from the
// rational reduced row echelon form; deterministic.
Mat nullspace(const Mat& a);

// The unique solution x of a*x = b for a with full column rank.  Throws if
// the system is inconsistent, underdetermined, or the solution is not
// integral (the latter never happens for the 0/±1-structured systems that
// arise here).
Mat solve_exact(const Mat& a, const Mat& b);

}  // namespace nakayama
