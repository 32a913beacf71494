#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakayama/core.hpp"
#include "nakayama/oracle.hpp"

namespace nakayama {

// A subcategory closed under sums and summands, identified with its set of
// indecomposables.  Members are canonical-sorted and unique.
struct ModSet {
    Algebra algebra;
    std::vector<ModCoord> members;
};

ModSet make_modset(const Algebra& alg, std::vector<ModCoord> members);
bool contains(const ModSet& s, ModCoord x);

struct ConditionWitness {
    ModCoord module;
    std::string reason;
};

struct ConditionCheck {
    ConditionCheck() = default;
    explicit ConditionCheck(std::string id_) : id(std::move(id_)) {}

    std::string id;
    bool pass = true;
    std::vector<ConditionWitness> witnesses;
};

// Structured pass/fail report for the per-condition checks; failure is data,
// not an error.
struct ConditionReport {
    std::vector<ConditionCheck> conditions;

    bool pass() const;
    const ConditionCheck& condition(const std::string& id) const;
};

struct AdmitsDetail {
    bool admits = false;
    enum class Branch { none, l_two, n_even } branch = Branch::none;
    long long k = -1;  // the matched parameter when admits
};

// Whether Lambda_{m,l} admits an n-cluster tilting subcategory:
// l = 2 and m = nk+1, or n even and m = (n/2)l + 1 + k(nl-l+2).
bool admits_nct(int m, int l, int n);
AdmitsDetail admits_nct_detail(int m, int l, int n);

// d with Lambda_{m,l} d-representation-finite (d = 2(m-1)/l when l | m-1 or
// l = 2), empty otherwise.
std::optional<int> d_rep_finite(int m, int l);

// Closure of the projectives under tau_n^-; always constructed, verification
// is separate so failures can be explained.
ModSet build_nct(const Algebra& alg, int n);

// Executable forms of the two characterizations: (a) the tau_n bijection plus
// indecomposable intermediate (co)syzygies, (b) tau_n membership plus equality
// of Ext-supports (needs the oracle).
ConditionReport check_conditions_a(const Algebra& alg, int n, const ModSet& c);
ConditionReport check_conditions_b(const Algebra& alg, int n, const ModSet& c);
ConditionReport check_conditions_b(const Algebra& alg, int n, const ModSet& c,
                                   const oracle::ExtTable& table);

// {Y : Ext^i(x,Y) != 0 for some 0 < i < n} and the right-hand analogue.
ModSet left_support(const Algebra& alg, ModCoord x, int n);
ModSet right_support(const Algebra& alg, ModCoord x, int n);

}  // namespace nakayama
