#include "nakayama/kupisch.hpp"

#include <algorithm>
#include <stdexcept>

namespace nakayama {

KupischAlgebra::KupischAlgebra(std::vector<int> c) : c_(std::move(c))
{
    if (c_.empty()) throw std::invalid_argument("kupisch: series must be nonempty");
    if (c_[0] != 1) throw std::invalid_argument("kupisch: c_1 must be 1");
    for (size_t k = 1; k < c_.size(); ++k) {
        if (c_[k] < 2)
            throw std::invalid_argument("kupisch: c_" + std::to_string(k + 1) + " must be at least 2 (arrows must survive)");
        if (c_[k] > c_[k - 1] + 1)
            throw std::invalid_argument("kupisch: c_" + std::to_string(k + 1) + " exceeds c_" + std::to_string(k) + "+1");
    }
}

KupischAlgebra KupischAlgebra::homogeneous(int m, int l)
{
    make_algebra(m, l);  // validate the (m,l) range
    std::vector<int> c(m);
    for (int k = 1; k <= m; ++k) c[k - 1] = std::min(k, l);
    return KupischAlgebra(std::move(c));
}

std::optional<int> KupischAlgebra::homogeneous_level() const
{
    const int m = vertex_count();
    const int l = c_[m - 1];
    for (int k = 1; k <= m; ++k)
        if (c_[k - 1] != std::min(k, l)) return std::nullopt;
    return l;
}

bool KupischAlgebra::module_valid(int i, int j) const
{
    const int m = vertex_count();
    return i >= 1 && j >= 1 && i + j - 1 <= m && j <= c_[i + j - 2];
}

std::vector<ModCoord> KupischAlgebra::indecomposables() const
{
    const int m = vertex_count();
    std::vector<ModCoord> out;
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i + j - 1 <= m; ++i)
            if (module_valid(i, j)) out.push_back(ModCoord{i, j});
    return out;
}

ModCoord KupischAlgebra::projective_of(int k) const
{
    if (k < 1 || k > vertex_count()) throw std::invalid_argument("projective_of: vertex out of range");
    return ModCoord{k - c_[k - 1] + 1, c_[k - 1]};
}

int KupischAlgebra::inj_len(int k) const
{
    if (k < 1 || k > vertex_count()) throw std::invalid_argument("inj_len: vertex out of range");
    int j = 1;
    while (module_valid(k, j + 1)) ++j;
    return j;
}

ModCoord KupischAlgebra::injective_of(int k) const
{
    return ModCoord{k, inj_len(k)};
}

bool KupischAlgebra::is_projective(ModCoord x) const
{
    if (x.is_zero() || !module_valid(x.i, x.j)) return false;
    return x.j == c_[x.i + x.j - 2];
}

bool KupischAlgebra::is_injective(ModCoord x) const
{
    if (x.is_zero() || !module_valid(x.i, x.j)) return false;
    return x.j == inj_len(x.i);
}

KupischAlgebra KupischAlgebra::opposite() const
{
    const int m = vertex_count();
    std::vector<int> c(m);
    for (int k = 1; k <= m; ++k) c[k - 1] = inj_len(m + 1 - k);
    return KupischAlgebra(std::move(c));
}

ModCoord KupischAlgebra::reflect(ModCoord x) const
{
    if (x.is_zero()) return x;
    return ModCoord{vertex_count() + 2 - x.i - x.j, x.j};
}

}  // namespace nakayama
