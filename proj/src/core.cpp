#include "nakayama/core.hpp"

#include <stdexcept>

namespace nakayama {

std::string to_string(ModCoord x)
{
    if (x.is_zero()) return "0";
    return "M(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
}

Algebra make_algebra(int m, int l)
{
    if (m < 2) throw std::invalid_argument("make_algebra: m must be at least 2");
    if (l < 2) throw std::invalid_argument("make_algebra: l must be at least 2, otherwise (rad)^l is not admissible");
    if (l > m - 1) throw std::invalid_argument("make_algebra: l must be at most m-1, otherwise (rad)^l = 0 and there are no relations");
    return Algebra{m, l};
}

bool coord_valid(const Algebra& alg, long long i, long long j)
{
    return i >= 1 && j >= 1 && j <= alg.l && i + j <= alg.m + 1;
}

ModCoord clamp_coord(const Algebra& alg, long long i, long long j)
{
    if (!coord_valid(alg, i, j)) return ModCoord::zero();
    return ModCoord{static_cast<int>(i), static_cast<int>(j)};
}

namespace {

void require_module(const Algebra& alg, ModCoord x, const char* op)
{
    if (x.is_zero())
        throw std::invalid_argument(std::string(op) + ": zero module not accepted");
    if (!coord_valid(alg, x.i, x.j))
        throw std::invalid_argument(std::string(op) + ": " + to_string(x) + " is not a module over this algebra");
}

}  // namespace

std::vector<ModCoord> indecomposables(const Algebra& alg)
{
    std::vector<ModCoord> out;
    for (int j = 1; j <= alg.l; ++j)
        for (int i = 1; i + j <= alg.m + 1; ++i)
            out.push_back(ModCoord{i, j});
    return out;
}

ModCoord projective(const Algebra& alg, int k)
{
    if (k < 1 || k > alg.m) throw std::invalid_argument("projective: vertex out of range");
    if (k <= alg.l - 1) return ModCoord{1, k};
    return ModCoord{1 + k - alg.l, alg.l};
}

ModCoord injective(const Algebra& alg, int k)
{
    if (k < 1 || k > alg.m) throw std::invalid_argument("injective: vertex out of range");
    if (k <= alg.m - alg.l + 1) return ModCoord{k, alg.l};
    return ModCoord{k, alg.m + 1 - k};
}

std::vector<ModCoord> projectives(const Algebra& alg)
{
    std::vector<ModCoord> out;
    for (int k = 1; k <= alg.m; ++k) out.push_back(projective(alg, k));
    return out;
}

std::vector<ModCoord> injectives(const Algebra& alg)
{
    std::vector<ModCoord> out;
    for (int k = 1; k <= alg.m; ++k) out.push_back(injective(alg, k));
    return out;
}

ModuleClass classify_module(const Algebra& alg, ModCoord x)
{
    require_module(alg, x, "classify_module");
    ModuleClass c;
    c.is_projective = (x.i == 1) || (x.j == alg.l);
    c.is_injective = (x.j == alg.l) || (x.i + x.j == alg.m + 1);
    return c;
}

ModCoord syzygy(const Algebra& alg, ModCoord x)
{
    require_module(alg, x, "syzygy");
    if (classify_module(alg, x).is_projective) return ModCoord::zero();
    if (x.i + x.j <= alg.l) return clamp_coord(alg, 1, x.i - 1);
    return clamp_coord(alg, x.i + x.j - alg.l, alg.l - x.j);
}

ModCoord cosyzygy(const Algebra& alg, ModCoord x)
{
    require_module(alg, x, "cosyzygy");
    if (classify_module(alg, x).is_injective) return ModCoord::zero();
    if (x.i <= alg.m - alg.l + 1) return clamp_coord(alg, x.i + x.j, alg.l - x.j);
    // cokernel of M(i,j) -> I(i) = M(i, m+1-i); the printed second case of
    // the source formula leaves the coordinate range here.
    return clamp_coord(alg, x.i + x.j, alg.m + 1 - x.i - x.j);
}

ModCoord syzygy_iter(const Algebra& alg, ModCoord x, long long k)
{
    require_module(alg, x, "syzygy_iter");
    ModCoord cur = x;
    for (long long s = 0; s < (k >= 0 ? k : -k); ++s) {
        if (cur.is_zero()) break;
        cur = (k >= 0) ? syzygy(alg, cur) : cosyzygy(alg, cur);
    }
    return cur;
}

ModCoord tau(const Algebra& alg, ModCoord x)
{
    require_module(alg, x, "tau");
    if (classify_module(alg, x).is_projective) return ModCoord::zero();
    return clamp_coord(alg, x.i - 1, x.j);
}

ModCoord tau_inv(const Algebra& alg, ModCoord x)
{
    require_module(alg, x, "tau_inv");
    if (classify_module(alg, x).is_injective) return ModCoord::zero();
    return clamp_coord(alg, x.i + 1, x.j);
}

ModCoord tau_n(const Algebra& alg, ModCoord x, long long n)
{
    require_module(alg, x, "tau_n");
    if (n < 1) throw std::invalid_argument("tau_n: n must be at least 1");
    if (classify_module(alg, x).is_projective) return ModCoord::zero();
    const long long i = x.i, j = x.j, l = alg.l;
    if (n % 2 == 0) return clamp_coord(alg, i + j - (n / 2) * l - 1, l - j);
    return clamp_coord(alg, i - ((n - 1) / 2) * l - 1, j);
}

ModCoord tau_n_inv(const Algebra& alg, ModCoord x, long long n)
{
    require_module(alg, x, "tau_n_inv");
    if (n < 1) throw std::invalid_argument("tau_n_inv: n must be at least 1");
    if (classify_module(alg, x).is_injective) return ModCoord::zero();
    const long long i = x.i, j = x.j, l = alg.l;
    if (n % 2 == 0) return clamp_coord(alg, i + j + ((n - 2) / 2) * l + 1, l - j);
    return clamp_coord(alg, i + ((n - 1) / 2) * l + 1, j);
}

ArSequence ar_sequence(const Algebra& alg, ModCoord right)
{
    require_module(alg, right, "ar_sequence");
    if (classify_module(alg, right).is_projective)
        throw std::invalid_argument("ar_sequence: right term must be nonprojective");
    ArSequence seq;
    seq.right = right;
    seq.left = tau(alg, right);
    ModCoord up = clamp_coord(alg, right.i - 1, right.j + 1);
    ModCoord down = clamp_coord(alg, right.i, right.j - 1);
    if (!up.is_zero()) seq.middle.push_back(up);
    if (!down.is_zero()) seq.middle.push_back(down);
    return seq;
}

int proj_dim(const Algebra& alg, ModCoord x)
{
    require_module(alg, x, "proj_dim");
    if (classify_module(alg, x).is_projective) return 0;
    // x.i >= 2 and x.j <= l-1 here
    const int q = (x.i - 2) / alg.l;
    const int r = (x.i - 2) % alg.l;
    return (x.j < alg.l - r) ? 2 * q + 1 : 2 * q + 2;
}

int global_dim(const Algebra& alg)
{
    const int a = alg.m - 1;
    return a / alg.l + (a + alg.l - 1) / alg.l;  // floor + ceil
}

std::vector<int> dim_vector(const Algebra& alg, ModCoord x)
{
    std::vector<int> d(alg.m, 0);
    if (x.is_zero()) return d;
    require_module(alg, x, "dim_vector");
    for (int v = x.i; v <= x.i + x.j - 1; ++v) d[v - 1] = 1;
    return d;
}

}  // namespace nakayama
