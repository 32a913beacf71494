#pragma once

#include <vector>

#include "nakayama/types.hpp"

namespace nakayama {

struct ModuleClass {
    bool is_projective = false;
    bool is_injective = false;
};

// Almost split sequence 0 -> left -> (middle terms) -> right -> 0.
// middle holds the nonzero terms among M(i,j+1), M(i+1,j-1) in that order,
// where right = M(i+1,j).
struct ArSequence {
    ModCoord left;
    std::vector<ModCoord> middle;
    ModCoord right;
};

// All nonzero M(i,j), in canonical (j,i) order.
std::vector<ModCoord> indecomposables(const Algebra& alg);

// Indecomposable projective P(k) / injective I(k) at vertex k (1 <= k <= m).
ModCoord projective(const Algebra& alg, int k);
ModCoord injective(const Algebra& alg, int k);

std::vector<ModCoord> projectives(const Algebra& alg);
std::vector<ModCoord> injectives(const Algebra& alg);

ModuleClass classify_module(const Algebra& alg, ModCoord x);

// Syzygy (kernel of the projective cover) and cosyzygy (cokernel of the
// injective hull); zero exactly on projectives resp. injectives.
ModCoord syzygy(const Algebra& alg, ModCoord x);
ModCoord cosyzygy(const Algebra& alg, ModCoord x);

// Omega^k for k >= 0, Omega^-|k| for k < 0, absorbing at zero.
ModCoord syzygy_iter(const Algebra& alg, ModCoord x, long long k);

// Auslander-Reiten translations: tau M(i,j) = M(i-1,j) on nonprojectives,
// tau^- M(i,j) = M(i+1,j) on noninjectives, zero otherwise.
ModCoord tau(const Algebra& alg, ModCoord x);
ModCoord tau_inv(const Algebra& alg, ModCoord x);

// Higher translations tau_n = tau Omega^{n-1} and tau_n^- = tau^- Omega^{-(n-1)},
// via their closed forms (even/odd n), clamped to zero out of range.
ModCoord tau_n(const Algebra& alg, ModCoord x, long long n);
ModCoord tau_n_inv(const Algebra& alg, ModCoord x, long long n);

// The almost split sequence ending at a nonprojective right term.
ArSequence ar_sequence(const Algebra& alg, ModCoord right);

int proj_dim(const Algebra& alg, ModCoord x);
int global_dim(const Algebra& alg);

// Dimension vector of M(i,j) (index v-1 holds the dimension at vertex v).
std::vector<int> dim_vector(const Algebra& alg, ModCoord x);

}  // namespace nakayama
