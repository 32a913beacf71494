#include "nakayama/cluster.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nakayama {

ModSet make_modset(const Algebra& alg, std::vector<ModCoord> members)
{
    for (ModCoord x : members)
        if (x.is_zero() || !coord_valid(alg, x.i, x.j))
            throw std::invalid_argument("make_modset: " + to_string(x) + " is not an indecomposable");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return ModSet{alg, std::move(members)};
}

bool contains(const ModSet& s, ModCoord x)
{
    return std::binary_search(s.members.begin(), s.members.end(), x);
}

bool ConditionReport::pass() const
{
    for (const ConditionCheck& c : conditions)
        if (!c.pass) return false;
    return true;
}

const ConditionCheck& ConditionReport::condition(const std::string& id) const
{
    for (const ConditionCheck& c : conditions)
        if (c.id == id) return c;
    throw std::invalid_argument("ConditionReport: no condition " + id);
}

AdmitsDetail admits_nct_detail(int m, int l, int n)
{
    make_algebra(m, l);
    if (n < 2) throw std::invalid_argument("admits_nct: n must be at least 2");
    AdmitsDetail d;
    if (l == 2 && (m - 1) % n == 0) {
        d.admits = true;
        d.branch = AdmitsDetail::Branch::l_two;
        d.k = (m - 1) / n;
        return d;
    }
    if (n % 2 == 0) {
        const long long base = static_cast<long long>(n) / 2 * l + 1;
        const long long step = static_cast<long long>(n) * l - l + 2;
        if (m >= base && (m - base) % step == 0) {
            d.admits = true;
            d.branch = AdmitsDetail::Branch::n_even;
            d.k = (m - base) / step;
        }
    }
    return d;
}

bool admits_nct(int m, int l, int n)
{
    return admits_nct_detail(m, l, n).admits;
}

std::optional<int> d_rep_finite(int m, int l)
{
    make_algebra(m, l);
    if (l == 2 || (m - 1) % l == 0) return 2 * (m - 1) / l;
    return std::nullopt;
}

ModSet build_nct(const Algebra& alg, int n)
{
    if (n < 2) throw std::invalid_argument("build_nct: n must be at least 2");
    std::set<ModCoord> acc;
    for (int k = 1; k <= alg.m; ++k) {
        ModCoord x = projective(alg, k);
        while (!x.is_zero()) {
            acc.insert(x);
            x = tau_n_inv(alg, x, n);
        }
    }
    return make_modset(alg, std::vector<ModCoord>(acc.begin(), acc.end()));
}

namespace {

void fail(ConditionCheck& c, ModCoord x, std::string reason)
{
    c.pass = false;
    c.witnesses.push_back({x, std::move(reason)});
}

ConditionCheck check_projectives_present(const Algebra& alg, const ModSet& c, const char* id)
{
    ConditionCheck chk{std::string(id)};
    for (int k = 1; k <= alg.m; ++k) {
        const ModCoord p = projective(alg, k);
        if (!contains(c, p)) fail(chk, p, "projective P(" + std::to_string(k) + ") missing");
    }
    return chk;
}

}  // namespace

ConditionReport check_conditions_a(const Algebra& alg, int n, const ModSet& c)
{
    if (n < 2) throw std::invalid_argument("check_conditions_a: n must be at least 2");
    ConditionReport rep;
    rep.conditions.push_back(check_projectives_present(alg, c, "a1"));

    ConditionCheck a2{"a2"};
    for (ModCoord x : c.members) {
        const ModuleClass cls = classify_module(alg, x);
        if (!cls.is_projective) {
            const ModCoord t = tau_n(alg, x, n);
            if (t.is_zero())
                fail(a2, x, "tau_n is zero");
            else if (!contains(c, t))
                fail(a2, x, "tau_n image " + to_string(t) + " not in the subcategory");
            else if (classify_module(alg, t).is_injective)
                fail(a2, x, "tau_n image " + to_string(t) + " is injective");
            else if (!(tau_n_inv(alg, t, n) == x))
                fail(a2, x, "tau_n_inv does not invert tau_n");
        }
        if (!cls.is_injective) {
            const ModCoord t = tau_n_inv(alg, x, n);
            if (t.is_zero())
                fail(a2, x, "tau_n_inv is zero");
            else if (!contains(c, t))
                fail(a2, x, "tau_n_inv image " + to_string(t) + " not in the subcategory");
            else if (classify_module(alg, t).is_projective)
                fail(a2, x, "tau_n_inv image " + to_string(t) + " is projective");
            else if (!(tau_n(alg, t, n) == x))
                fail(a2, x, "tau_n does not invert tau_n_inv");
        }
    }
    rep.conditions.push_back(std::move(a2));

    ConditionCheck a3{"a3"};
    for (ModCoord x : c.members) {
        if (classify_module(alg, x).is_projective) continue;
        for (int i = 1; i < n; ++i)
            if (syzygy_iter(alg, x, i).is_zero()) {
                fail(a3, x, "syzygy vanishes at step " + std::to_string(i));
                break;
            }
    }
    rep.conditions.push_back(std::move(a3));

    ConditionCheck a4{"a4"};
    for (ModCoord x : c.members) {
        if (classify_module(alg, x).is_injective) continue;
        for (int i = 1; i < n; ++i)
            if (syzygy_iter(alg, x, -i).is_zero()) {
                fail(a4, x, "cosyzygy vanishes at step " + std::to_string(i));
                break;
            }
    }
    rep.conditions.push_back(std::move(a4));
    return rep;
}

ConditionReport check_conditions_b(const Algebra& alg, int n, const ModSet& c,
                                   const oracle::ExtTable& table)
{
    if (n < 2) throw std::invalid_argument("check_conditions_b: n must be at least 2");
    if (table.bound() < n - 1) throw std::invalid_argument("check_conditions_b: table bound too small");
    ConditionReport rep;
    rep.conditions.push_back(check_projectives_present(alg, c, "b1"));

    ConditionCheck b2{"b2"};
    ConditionCheck b3{"b3"};
    for (ModCoord x : c.members) {
        const ModuleClass cls = classify_module(alg, x);
        if (!cls.is_projective) {
            const ModCoord t = tau_n(alg, x, n);
            if (t.is_zero() || !contains(c, t))
                fail(b2, x, "tau_n image not in the subcategory");
            else if (oracle::left_support_coords(table, x, n) !=
                     oracle::right_support_coords(table, t, n))
                fail(b2, x, "left support differs from right support of tau_n image");
        }
        if (!cls.is_injective) {
            const ModCoord t = tau_n_inv(alg, x, n);
            if (t.is_zero() || !contains(c, t))
                fail(b3, x, "tau_n_inv image not in the subcategory");
            else if (oracle::right_support_coords(table, x, n) !=
                     oracle::left_support_coords(table, t, n))
                fail(b3, x, "right support differs from left support of tau_n_inv image");
        }
    }
    rep.conditions.push_back(std::move(b2));
    rep.conditions.push_back(std::move(b3));
    return rep;
}

ConditionReport check_conditions_b(const Algebra& alg, int n, const ModSet& c)
{
    const oracle::ExtTable table(KupischAlgebra::of(alg), n - 1);
    return check_conditions_b(alg, n, c, table);
}

ModSet left_support(const Algebra& alg, ModCoord x, int n)
{
    if (n < 2) throw std::invalid_argument("left_support: n must be at least 2");
    const oracle::ExtTable table(KupischAlgebra::of(alg), n - 1);
    return make_modset(alg, oracle::left_support_coords(table, x, n));
}

ModSet right_support(const Algebra& alg, ModCoord x, int n)
{
    if (n < 2) throw std::invalid_argument("right_support: n must be at least 2");
    const oracle::ExtTable table(KupischAlgebra::of(alg), n - 1);
    return make_modset(alg, oracle::right_support_coords(table, x, n));
}

}  // namespace nakayama
