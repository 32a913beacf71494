#pragma once

#include <bitset>
#include <stdexcept>
#include <vector>

#include "nakayama/kupisch.hpp"
#include "nakayama/linalg.hpp"

namespace nakayama::oracle {

// Explicit quiver representation: dims[v-1] is the dimension at vertex v and
// maps[v-1] the arrow matrix X_{v+1} -> X_v (shape dims[v-1] x dims[v]),
// following the arrows of Q_m from vertex v+1 down to v.
struct Representation {
    std::vector<int> dims;
    std::vector<Mat> maps;

    bool is_zero() const;
    int total_dim() const;
};

Representation to_matrices(const KupischAlgebra& alg, ModCoord x);
Representation direct_sum(const KupischAlgebra& alg, const std::vector<ModCoord>& summands);
Representation direct_sum(const Representation& a, const Representation& b);

// Composite arrow map X_b -> X_a for 1 <= a <= b <= m.
Mat composite_map(const Representation& x, int a, int b);

// Every path of length c_k starting at vertex k acts as zero.
bool relations_hold(const KupischAlgebra& alg, const Representation& x);

// dim Hom(x,y): solution space of the commuting-square system, exactly.
int hom_dim(const KupischAlgebra& alg, const Representation& x, const Representation& y);

struct Cover {
    std::vector<ModCoord> summands;  // projective intervals, one per top generator
    Representation proj;
    std::vector<Mat> surjection;  // per vertex: P_v -> X_v
};

// Minimal projective cover; the top is read off the arrow matrices
// (rad X = sum of arrow images), never from closed forms.
Cover projective_cover(const KupischAlgebra& alg, const Representation& x);

struct KernelPair {
    Representation ker;
    std::vector<Mat> inclusion;  // per vertex: K_v -> ambient_v
};

// Kernel of a morphism f : ambient -> target given by per-vertex matrices.
KernelPair kernel_of(const KupischAlgebra& alg, const Representation& ambient,
                     const std::vector<Mat>& f);

// Kernel of the projective cover, as a representation.
Representation syzygy_rep(const KupischAlgebra& alg, const Representation& x);

struct ResolutionStep {
    std::vector<ModCoord> summands;
    Representation proj;
    std::vector<Mat> map;  // step 0: P_0 -> X; step i > 0: boundary P_i -> P_{i-1}
};

struct Resolution {
    std::vector<ResolutionStep> steps;
    int length() const { return static_cast<int>(steps.size()) - 1; }
};

// Minimal projective resolution, by iterating kernel-of-cover until zero.
Resolution min_resolution(const KupischAlgebra& alg, const Representation& x);

int resolution_length(const KupischAlgebra& alg, ModCoord x);
int global_dim_oracle(const KupischAlgebra& alg);

// dim Ext^i(x,y) as the i-th cohomology of Hom(P_., y).
int ext_dim(const KupischAlgebra& alg, ModCoord x, ModCoord y, int i);

// Interval multiplicities of x, recovered by inclusion-exclusion on the ranks
// of the composite arrow maps.  Requires the relations to hold.
std::vector<ModCoord> decompose(const KupischAlgebra& alg, const Representation& x);

// Coordinate-level translates computed through the matrix machinery:
// syzygy = decompose(kernel of cover), cosyzygy via the opposite algebra.
ModCoord syzygy_coord(const KupischAlgebra& alg, ModCoord x);
ModCoord cosyzygy_coord(const KupischAlgebra& alg, ModCoord x);
ModCoord tau_n_coord(const KupischAlgebra& alg, ModCoord x, int n);
ModCoord tau_n_inv_coord(const KupischAlgebra& alg, ModCoord x, int n);

// At most 128 indecomposables per algebra at the desk scales we sweep.
using IndBits = std::bitset<128>;

// dim Ext^i(X,Y) for all pairs of indecomposables and 0 <= i <= bound.
class ExtTable {
public:
    ExtTable(const KupischAlgebra& alg, int bound);

    const KupischAlgebra& algebra() const { return alg_; }
    int bound() const { return bound_; }
    const std::vector<ModCoord>& modules() const { return mods_; }
    int index_of(ModCoord x) const;

    int dim(int x, int y, int i) const;
    int dim(ModCoord x, ModCoord y, int i) const;

    // {y : Ext^i(x,y) != 0 for some 0 < i < n} and the right-hand analogue.
    IndBits left_mask(int x, int n) const;
    IndBits right_mask(int x, int n) const;

private:
    KupischAlgebra alg_;
    int bound_;
    std::vector<ModCoord> mods_;
    std::vector<int> table_;
};

// Definitional check: members = both n-perpendicular categories.
bool is_nct(const ExtTable& table, const std::vector<ModCoord>& members, int n);
bool is_nct(const KupischAlgebra& alg, const std::vector<ModCoord>& members, int n);

std::vector<ModCoord> left_support_coords(const ExtTable& table, ModCoord x, int n);
std::vector<ModCoord> right_support_coords(const ExtTable& table, ModCoord x, int n);

inline constexpr unsigned long long kDefaultSearchBudget = 1ull << 22;

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(unsigned long long n)
        : std::runtime_error("exhaustive_nct_search: candidate budget exceeded after " +
                             std::to_string(n) + " subsets"),
          examined(n)
    {
    }
    unsigned long long examined;
};

struct SearchOutcome {
    std::vector<std::vector<ModCoord>> sets;
    unsigned long long examined = 0;
};

// All n-cluster tilting subsets: enumerate the subsets containing every
// projective and injective, early-exit on internal Ext violations, filter by
// the tau_n-bijection necessary condition, then confirm by definition.
SearchOutcome exhaustive_nct_search(const KupischAlgebra& alg, int n,
                                    unsigned long long budget = kDefaultSearchBudget);

}  // namespace nakayama::oracle
