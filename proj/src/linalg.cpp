#include "nakayama/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace nakayama {

long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

long long checked_sub(long long a, long long b)
{
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

Mat Mat::identity(int n)
{
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = 1;
    return m;
}

bool Mat::is_zero() const
{
    for (long long v : a_)
        if (v != 0) return false;
    return true;
}

Mat Mat::operator*(const Mat& rhs) const
{
    if (cols_ != rhs.rows_) throw std::invalid_argument("Mat multiply: shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const long long v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c)
                out.at(r, c) = checked_add(out.at(r, c), checked_mul(v, rhs.at(k, c)));
        }
    return out;
}

int rank(Mat a)
{
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    long long prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int rr = r; rr < rows; ++rr)
            if (a.at(rr, c) != 0) {
                pivot = rr;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int cc = 0; cc < cols; ++cc) std::swap(a.at(pivot, cc), a.at(r, cc));
        const long long p = a.at(r, c);
        for (int rr = r + 1; rr < rows; ++rr) {
            const long long f = a.at(rr, c);
            for (int cc = c; cc < cols; ++cc)
                a.at(rr, cc) = checked_sub(checked_mul(p, a.at(rr, cc)), checked_mul(f, a.at(r, cc))) / prev;
        }
        prev = p;
        ++r;
    }
    return r;
}

namespace {

// Minimal exact fraction on checked 64-bit integers; enough for the RREF
// passes below.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize()
    {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
};

Rat operator*(const Rat& a, const Rat& b)
{
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rat operator-(const Rat& a, const Rat& b)
{
    return Rat(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
}

Rat operator/(const Rat& a, const Rat& b)
{
    if (b.is_zero()) throw std::invalid_argument("Rat: division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

struct Rref {
    std::vector<std::vector<Rat>> a;
    std::vector<int> pivot_col;  // per pivot row
};

Rref rref(const Mat& m)
{
    const int rows = m.rows(), cols = m.cols();
    Rref out;
    out.a.assign(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.a[r][c] = Rat(m.at(r, c));

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int rr = r; rr < rows; ++rr)
            if (!out.a[rr][c].is_zero()) {
                pivot = rr;
                break;
            }
        if (pivot < 0) continue;
        std::swap(out.a[pivot], out.a[r]);
        const Rat p = out.a[r][c];
        for (int cc = 0; cc < cols; ++cc) out.a[r][cc] = out.a[r][cc] / p;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == r || out.a[rr][c].is_zero()) continue;
            const Rat f = out.a[rr][c];
            for (int cc = 0; cc < cols; ++cc)
                out.a[rr][cc] = out.a[rr][cc] - f * out.a[r][cc];
        }
        out.pivot_col.push_back(c);
        ++r;
    }
    return out;
}

}  // namespace

Mat nullspace(const Mat& a)
{
    const int cols = a.cols();
    const Rref red = rref(a);
    std::vector<int> pivot_of_col(cols, -1);
    for (size_t k = 0; k < red.pivot_col.size(); ++k) pivot_of_col[red.pivot_col[k]] = static_cast<int>(k);

    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);

    Mat basis(cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        // rational vector: 1 at fc, -rref entry at pivot columns
        std::vector<Rat> v(cols);
        v[fc] = Rat(1);
        for (size_t pr = 0; pr < red.pivot_col.size(); ++pr)
            v[red.pivot_col[pr]] = Rat(0) - red.a[pr][fc];
        long long lcm = 1;
        for (const Rat& x : v) lcm = checked_mul(lcm / std::gcd(lcm, x.den), x.den);
        long long g = 0;
        std::vector<long long> iv(cols);
        for (int c = 0; c < cols; ++c) {
            iv[c] = checked_mul(v[c].num, lcm / v[c].den);
            g = std::gcd(g, iv[c] < 0 ? -iv[c] : iv[c]);
        }
        if (g > 1)
            for (long long& x : iv) x /= g;
        for (int c = 0; c < cols; ++c) basis.at(c, static_cast<int>(k)) = iv[c];
    }
    return basis;
}

Mat solve_exact(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
    const int n = a.cols();
    Mat aug(a.rows(), n + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) aug.at(r, n + c) = b.at(r, c);
    }
    const Rref red = rref(aug);
    // every column of a must be a pivot column
    if (static_cast<int>(red.pivot_col.size()) < n || (n > 0 && red.pivot_col[n - 1] != n - 1)) {
        for (int k = 0; k < n; ++k)
            if (k >= static_cast<int>(red.pivot_col.size()) || red.pivot_col[k] != k)
                throw std::invalid_argument("solve_exact: matrix does not have full column rank");
    }
    // a pivot in the right block means inconsistency
    for (int k = n; k < static_cast<int>(red.pivot_col.size()); ++k)
        if (red.pivot_col[k] >= n) throw std::invalid_argument("solve_exact: inconsistent system");

    Mat x(n, b.cols());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < b.cols(); ++c) {
            const Rat v = red.a[r][n + c];
            if (v.den != 1) throw std::runtime_error("solve_exact: non-integral solution");
            x.at(r, c) = v.num;
        }
    return x;
}

}  // namespace nakayama
