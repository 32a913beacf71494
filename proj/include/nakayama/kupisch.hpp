#pragma once

#include <optional>
#include <vector>

#include "nakayama/types.hpp"

namespace nakayama {

// General acyclic Nakayama algebra described by its Kupisch series
// c_k = dim P(k).  Admissibility: c_1 = 1 and 2 <= c_{k+1} <= c_k + 1.
// Lambda_{m,l} corresponds to c_k = min(k,l).
class KupischAlgebra {
public:
    explicit KupischAlgebra(std::vector<int> c);

    static KupischAlgebra homogeneous(int m, int l);
    static KupischAlgebra of(const Algebra& alg) { return homogeneous(alg.m, alg.l); }

    int vertex_count() const { return static_cast<int>(c_.size()); }
    const std::vector<int>& series() const { return c_; }
    int proj_len(int k) const { return c_[k - 1]; }

    // The l with c_k = min(k,l) when one exists (l = m means no relations).
    std::optional<int> homogeneous_level() const;

    bool module_valid(int i, int j) const;
    std::vector<ModCoord> indecomposables() const;

    ModCoord projective_of(int k) const;
    ModCoord injective_of(int k) const;
    int inj_len(int k) const;

    bool is_projective(ModCoord x) const;
    bool is_injective(ModCoord x) const;

    // The opposite algebra (reverse the quiver); its Kupisch series is the
    // sequence of injective lengths read backwards.
    KupischAlgebra opposite() const;

    // Coordinates of the same interval viewed over the opposite algebra:
    // M(i,j) -> M(m+2-i-j, j).
    ModCoord reflect(ModCoord x) const;

    friend bool operator==(const KupischAlgebra&, const KupischAlgebra&) = default;

private:
    std::vector<int> c_;
};

}  // namespace nakayama
