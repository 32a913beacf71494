#include "nakayama/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nakayama::oracle {

bool Representation::is_zero() const
{
    for (int d : dims)
        if (d != 0) return false;
    return true;
}

int Representation::total_dim() const
{
    return std::accumulate(dims.begin(), dims.end(), 0);
}

namespace {

Representation empty_rep(int m)
{
    Representation r;
    r.dims.assign(m, 0);
    r.maps.assign(m - 1 > 0 ? m - 1 : 0, Mat());
    for (int v = 0; v + 1 < m; ++v) r.maps[v] = Mat(0, 0);
    return r;
}

void require_shape(const KupischAlgebra& alg, const Representation& x, const char* op)
{
    const int m = alg.vertex_count();
    if (static_cast<int>(x.dims.size()) != m || static_cast<int>(x.maps.size()) != m - 1)
        throw std::invalid_argument(std::string(op) + ": representation shape mismatch");
    for (int v = 1; v <= m - 1; ++v)
        if (x.maps[v - 1].rows() != x.dims[v - 1] || x.maps[v - 1].cols() != x.dims[v])
            throw std::invalid_argument(std::string(op) + ": arrow matrix shape mismatch at vertex " +
                                        std::to_string(v));
}

}  // namespace

Representation to_matrices(const KupischAlgebra& alg, ModCoord x)
{
    if (x.is_zero()) throw std::invalid_argument("to_matrices: zero module");
    if (!alg.module_valid(x.i, x.j))
        throw std::invalid_argument("to_matrices: " + to_string(x) +
                                    " violates the relation bound of the Kupisch series");
    const int m = alg.vertex_count();
    Representation r = empty_rep(m);
    for (int v = x.i; v <= x.i + x.j - 1; ++v) r.dims[v - 1] = 1;
    for (int v = 1; v <= m - 1; ++v) {
        Mat f(r.dims[v - 1], r.dims[v]);
        if (f.rows() == 1 && f.cols() == 1) f.at(0, 0) = 1;
        r.maps[v - 1] = f;
    }
    return r;
}

Representation direct_sum(const Representation& a, const Representation& b)
{
    if (a.dims.size() != b.dims.size())
        throw std::invalid_argument("direct_sum: vertex count mismatch");
    const int m = static_cast<int>(a.dims.size());
    Representation r;
    r.dims.resize(m);
    for (int v = 0; v < m; ++v) r.dims[v] = a.dims[v] + b.dims[v];
    r.maps.resize(m - 1 > 0 ? m - 1 : 0);
    for (int v = 0; v + 1 < m; ++v) {
        Mat f(r.dims[v], r.dims[v + 1]);
        for (int rr = 0; rr < a.maps[v].rows(); ++rr)
            for (int cc = 0; cc < a.maps[v].cols(); ++cc) f.at(rr, cc) = a.maps[v].at(rr, cc);
        for (int rr = 0; rr < b.maps[v].rows(); ++rr)
            for (int cc = 0; cc < b.maps[v].cols(); ++cc)
                f.at(a.dims[v] + rr, a.maps[v].cols() + cc) = b.maps[v].at(rr, cc);
        r.maps[v] = f;
    }
    return r;
}

Representation direct_sum(const KupischAlgebra& alg, const std::vector<ModCoord>& summands)
{
    Representation r = empty_rep(alg.vertex_count());
    for (ModCoord s : summands) r = direct_sum(r, to_matrices(alg, s));
    return r;
}

Mat composite_map(const Representation& x, int a, int b)
{
    if (a < 1 || b > static_cast<int>(x.dims.size()) || a > b)
        throw std::invalid_argument("composite_map: bad vertex range");
    Mat acc = Mat::identity(x.dims[a - 1]);
    // X_b -> X_{b-1} -> ... -> X_a, multiplying maps on the right
    for (int v = a; v < b; ++v) acc = acc * x.maps[v - 1];
    return acc;
}

bool relations_hold(const KupischAlgebra& alg, const Representation& x)
{
    require_shape(alg, x, "relations_hold");
    const int m = alg.vertex_count();
    for (int k = 1; k <= m; ++k) {
        const int target = k - alg.proj_len(k);
        if (target >= 1 && !composite_map(x, target, k).is_zero()) return false;
    }
    return true;
}

namespace {

// Solution-space dimension of the Hom conditions f_v phi_v = psi_v f_{v+1},
// optionally with the extra conditions f_v d_v = 0 (post-composition with a
// map d into the source).  Unknowns are the entries of all f_v.
int hom_dim_constrained(const Representation& src, const Representation& dst,
                        const std::vector<Mat>* post_compose_zero)
{
    const int m = static_cast<int>(src.dims.size());
    std::vector<int> offset(m + 1, 0);
    for (int v = 0; v < m; ++v) offset[v + 1] = offset[v] + dst.dims[v] * src.dims[v];
    const int vars = offset[m];
    if (vars == 0) return 0;

    int rows = 0;
    for (int v = 0; v + 1 < m; ++v) rows += dst.dims[v] * src.dims[v + 1];
    if (post_compose_zero)
        for (int v = 0; v < m; ++v) rows += dst.dims[v] * (*post_compose_zero)[v].cols();

    Mat sys(rows, vars);
    int row = 0;
    const auto var_of = [&](int v, int r, int c) { return offset[v] + r * src.dims[v] + c; };
    for (int v = 0; v + 1 < m; ++v) {
        const Mat& phi = src.maps[v];  // src_{v+2} -> src_{v+1} in 1-based vertices
        const Mat& psi = dst.maps[v];
        for (int r = 0; r < dst.dims[v]; ++r)
            for (int c = 0; c < src.dims[v + 1]; ++c) {
                // sum_k f_v[r,k] phi[k,c] - sum_k psi[r,k] f_{v+1}[k,c] = 0
                for (int k = 0; k < src.dims[v]; ++k)
                    if (phi.at(k, c) != 0) sys.at(row, var_of(v, r, k)) = phi.at(k, c);
                for (int k = 0; k < dst.dims[v + 1]; ++k)
                    if (psi.at(r, k) != 0)
                        sys.at(row, var_of(v + 1, k, c)) =
                            checked_sub(sys.at(row, var_of(v + 1, k, c)), psi.at(r, k));
                ++row;
            }
    }
    if (post_compose_zero) {
        for (int v = 0; v < m; ++v) {
            const Mat& d = (*post_compose_zero)[v];  // shape src.dims[v] x q_v
            for (int r = 0; r < dst.dims[v]; ++r)
                for (int c = 0; c < d.cols(); ++c) {
                    for (int k = 0; k < src.dims[v]; ++k)
                        if (d.at(k, c) != 0) sys.at(row, var_of(v, r, k)) = d.at(k, c);
                    ++row;
                }
        }
    }
    return vars - rank(std::move(sys));
}

}  // namespace

int hom_dim(const KupischAlgebra& alg, const Representation& x, const Representation& y)
{
    require_shape(alg, x, "hom_dim");
    require_shape(alg, y, "hom_dim");
    return hom_dim_constrained(x, y, nullptr);
}

Cover projective_cover(const KupischAlgebra& alg, const Representation& x)
{
    require_shape(alg, x, "projective_cover");
    if (x.is_zero()) throw std::invalid_argument("projective_cover: zero module");
    const int m = alg.vertex_count();

    Cover cov;
    std::vector<std::pair<int, int>> gens;  // (vertex k, unit index in X_k)
    for (int k = 1; k <= m; ++k) {
        const int d = x.dims[k - 1];
        if (d == 0) continue;
        // image of the incoming arrow spans rad X at this vertex
        Mat incoming = (k <= m - 1) ? x.maps[k - 1] : Mat(d, 0);
        const int top = d - rank(incoming);
        if (top == 0) continue;
        // greedily pick unit vectors of X_k whose classes span the top
        Mat span = incoming;
        int base_rank = rank(span);
        int taken = 0;
        for (int e = 0; e < d && taken < top; ++e) {
            Mat ext(d, span.cols() + 1);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < span.cols(); ++c) ext.at(r, c) = span.at(r, c);
            ext.at(e, span.cols()) = 1;
            if (rank(ext) > base_rank) {
                gens.emplace_back(k, e);
                span = std::move(ext);
                ++base_rank;
                ++taken;
            }
        }
    }

    for (auto [k, e] : gens) cov.summands.push_back(alg.projective_of(k));
    cov.proj = direct_sum(alg, cov.summands);
    cov.surjection.assign(m, Mat());
    for (int v = 1; v <= m; ++v) cov.surjection[v - 1] = Mat(x.dims[v - 1], cov.proj.dims[v - 1]);

    std::vector<int> offset(m, 0);  // next free column in the cover at each vertex
    for (size_t s = 0; s < gens.size(); ++s) {
        const auto [k, e] = gens[s];
        const ModCoord p = cov.summands[s];
        for (int v = p.i; v <= k; ++v) {
            const Mat comp = composite_map(x, v, k);  // X_k -> X_v
            for (int r = 0; r < x.dims[v - 1]; ++r)
                cov.surjection[v - 1].at(r, offset[v - 1]) = comp.at(r, e);
            ++offset[v - 1];
        }
    }
    for (int v = 1; v <= m; ++v)
        if (rank(cov.surjection[v - 1]) != x.dims[v - 1])
            throw std::runtime_error("projective_cover: cover map is not surjective");
    return cov;
}

KernelPair kernel_of(const KupischAlgebra& alg, const Representation& ambient,
                     const std::vector<Mat>& f)
{
    const int m = alg.vertex_count();
    KernelPair out;
    out.ker = empty_rep(m);
    out.inclusion.assign(m, Mat());
    for (int v = 1; v <= m; ++v) {
        out.inclusion[v - 1] = nullspace(f[v - 1]);
        out.ker.dims[v - 1] = out.inclusion[v - 1].cols();
    }
    for (int v = 1; v <= m - 1; ++v)
        out.ker.maps[v - 1] =
            solve_exact(out.inclusion[v - 1], ambient.maps[v - 1] * out.inclusion[v]);
    return out;
}

Representation syzygy_rep(const KupischAlgebra& alg, const Representation& x)
{
    const Cover cov = projective_cover(alg, x);
    return kernel_of(alg, cov.proj, cov.surjection).ker;
}

Resolution min_resolution(const KupischAlgebra& alg, const Representation& x)
{
    const int m = alg.vertex_count();
    Resolution res;
    if (x.is_zero()) return res;
    Cover cov = projective_cover(alg, x);
    res.steps.push_back({cov.summands, cov.proj, cov.surjection});
    // ambient/onto: the current cover map P_i ->> (previous kernel), in the
    // kernel's own coordinates; its kernel is the next syzygy.
    Representation ambient = cov.proj;
    std::vector<Mat> onto = cov.surjection;
    while (true) {
        KernelPair kp = kernel_of(alg, ambient, onto);
        if (kp.ker.is_zero()) break;
        Cover next = projective_cover(alg, kp.ker);
        std::vector<Mat> boundary(m);
        for (int v = 0; v < m; ++v) boundary[v] = kp.inclusion[v] * next.surjection[v];
        res.steps.push_back({next.summands, next.proj, std::move(boundary)});
        ambient = next.proj;
        onto = next.surjection;
    }
    return res;
}

int resolution_length(const KupischAlgebra& alg, ModCoord x)
{
    return min_resolution(alg, to_matrices(alg, x)).length();
}

int global_dim_oracle(const KupischAlgebra& alg)
{
    int best = 0;
    for (ModCoord x : alg.indecomposables())
        best = std::max(best, resolution_length(alg, x));
    return best;
}

std::vector<ModCoord> decompose(const KupischAlgebra& alg, const Representation& x)
{
    require_shape(alg, x, "decompose");
    if (!relations_hold(alg, x)) throw std::invalid_argument("decompose: relations violated");
    const int m = alg.vertex_count();
    // r(a,b) = rank of the composite X_b -> X_a; 0 out of range
    const auto r = [&](int a, int b) -> int {
        if (a < 1 || b > m) return 0;
        return rank(composite_map(x, a, b));
    };
    std::vector<ModCoord> out;
    std::vector<int> check(m, 0);
    for (int a = 1; a <= m; ++a)
        for (int b = a; b <= m; ++b) {
            const int mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
            if (mult < 0) throw std::runtime_error("decompose: negative interval multiplicity");
            if (mult == 0) continue;
            const ModCoord c{a, b - a + 1};
            if (!alg.module_valid(c.i, c.j))
                throw std::runtime_error("decompose: summand violates relations");
            for (int t = 0; t < mult; ++t) out.push_back(c);
            for (int v = a; v <= b; ++v) check[v - 1] += mult;
        }
    for (int v = 0; v < m; ++v)
        if (check[v] != x.dims[v])
            throw std::runtime_error("decompose: interval multiplicities do not add up");
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Ext^i(x,-) dims for 0 <= i <= bound from a precomputed resolution of x.
// With C^i = Hom(P_i, y) and Z_i = dim ker(C^i -> C^{i+1}),
// Ext^i = Z_i - (dim C^{i-1} - Z_{i-1}).
std::vector<int> ext_dims_from_resolution(const Resolution& res, const Representation& y, int bound)
{
    std::vector<int> out(bound + 1, 0);
    const int len = res.length();
    if (len < 0) return out;
    const int imax = std::min(len, bound);
    std::vector<int> h(imax + 1, 0), z(imax + 1, 0);
    for (int i = 0; i <= imax; ++i) {
        const Representation& p = res.steps[i].proj;
        h[i] = hom_dim_constrained(p, y, nullptr);
        if (i < len)
            z[i] = hom_dim_constrained(p, y, &res.steps[i + 1].map);
        else
            z[i] = h[i];
    }
    out[0] = z[0];
    for (int i = 1; i <= imax; ++i) {
        out[i] = z[i] - (h[i - 1] - z[i - 1]);
        if (out[i] < 0) throw std::runtime_error("ext: negative cohomology dimension");
    }
    return out;
}

}  // namespace

int ext_dim(const KupischAlgebra& alg, ModCoord x, ModCoord y, int i)
{
    if (i < 0) throw std::invalid_argument("ext_dim: negative degree");
    const Resolution res = min_resolution(alg, to_matrices(alg, x));
    return ext_dims_from_resolution(res, to_matrices(alg, y), i)[i];
}

ModCoord syzygy_coord(const KupischAlgebra& alg, ModCoord x)
{
    const Representation k = syzygy_rep(alg, to_matrices(alg, x));
    if (k.is_zero()) return ModCoord::zero();
    const std::vector<ModCoord> parts = decompose(alg, k);
    if (parts.size() != 1)
        throw std::runtime_error("syzygy_coord: syzygy of an interval is not an interval");
    return parts[0];
}

ModCoord cosyzygy_coord(const KupischAlgebra& alg, ModCoord x)
{
    const KupischAlgebra op = alg.opposite();
    const ModCoord s = syzygy_coord(op, alg.reflect(x));
    return s.is_zero() ? s : op.reflect(s);
}

namespace {

// tau/tau^- shift along the AR quiver of a Nakayama algebra
ModCoord tau_shift(const KupischAlgebra& alg, ModCoord x)
{
    if (alg.is_projective(x)) return ModCoord::zero();
    if (!alg.module_valid(x.i - 1, x.j))
        throw std::runtime_error("tau_shift: translate fell out of coordinate range");
    return ModCoord{x.i - 1, x.j};
}

ModCoord tau_inv_shift(const KupischAlgebra& alg, ModCoord x)
{
    if (alg.is_injective(x)) return ModCoord::zero();
    if (!alg.module_valid(x.i + 1, x.j))
        throw std::runtime_error("tau_inv_shift: translate fell out of coordinate range");
    return ModCoord{x.i + 1, x.j};
}

}  // namespace

ModCoord tau_n_coord(const KupischAlgebra& alg, ModCoord x, int n)
{
    if (n < 1) throw std::invalid_argument("tau_n_coord: n must be at least 1");
    ModCoord w = x;
    for (int s = 0; s < n - 1 && !w.is_zero(); ++s) w = syzygy_coord(alg, w);
    return w.is_zero() ? w : tau_shift(alg, w);
}

ModCoord tau_n_inv_coord(const KupischAlgebra& alg, ModCoord x, int n)
{
    if (n < 1) throw std::invalid_argument("tau_n_inv_coord: n must be at least 1");
    ModCoord w = x;
    for (int s = 0; s < n - 1 && !w.is_zero(); ++s) w = cosyzygy_coord(alg, w);
    return w.is_zero() ? w : tau_inv_shift(alg, w);
}

ExtTable::ExtTable(const KupischAlgebra& alg, int bound)
    : alg_(alg), bound_(bound), mods_(alg.indecomposables())
{
    if (bound_ < 0) throw std::invalid_argument("ExtTable: negative bound");
    const int n = static_cast<int>(mods_.size());
    if (n > 128) throw std::invalid_argument("ExtTable: more than 128 indecomposables");
    table_.assign(static_cast<size_t>(n) * n * (bound_ + 1), 0);

    std::vector<Representation> reps;
    reps.reserve(n);
    for (ModCoord c : mods_) reps.push_back(to_matrices(alg_, c));

    // Resolutions of indecomposables over a Nakayama algebra have one
    // projective per step, so Hom and kernel dimensions against y depend only
    // on the interval coordinates involved; memoize on those.
    std::map<std::pair<int, int>, int> h_memo;           // (proj index in mods_, y) -> dim
    std::map<std::tuple<int, int, int>, int> z_memo;     // (P_i, P_{i+1}, y) -> dim
    const auto idx = [&](ModCoord c) {
        const auto it = std::lower_bound(mods_.begin(), mods_.end(), c);
        return static_cast<int>(it - mods_.begin());
    };
    const auto at = [&](int x, int y, int i) -> int& {
        return table_[(static_cast<size_t>(x) * mods_.size() + y) * (bound_ + 1) + i];
    };

    for (int x = 0; x < n; ++x) {
        const Resolution res = min_resolution(alg_, reps[x]);
        const int len = res.length();
        for (const ResolutionStep& st : res.steps)
            if (st.summands.size() != 1)
                throw std::runtime_error("ExtTable: decomposable syzygy of an indecomposable");
        for (int y = 0; y < n; ++y) {
            const int imax = std::min(len, bound_);
            std::vector<int> h(imax + 1, 0), z(imax + 1, 0);
            for (int i = 0; i <= imax; ++i) {
                const int pi = idx(res.steps[i].summands[0]);
                const auto hkey = std::make_pair(pi, y);
                auto hit = h_memo.find(hkey);
                if (hit == h_memo.end())
                    hit = h_memo.emplace(hkey, hom_dim_constrained(res.steps[i].proj, reps[y], nullptr)).first;
                h[i] = hit->second;
                if (i < len) {
                    const int pnext = idx(res.steps[i + 1].summands[0]);
                    const auto zkey = std::make_tuple(pi, pnext, y);
                    auto zit = z_memo.find(zkey);
                    if (zit == z_memo.end())
                        zit = z_memo
                                  .emplace(zkey, hom_dim_constrained(res.steps[i].proj, reps[y],
                                                                     &res.steps[i + 1].map))
                                  .first;
                    z[i] = zit->second;
                } else {
                    z[i] = h[i];
                }
            }
            if (imax >= 0) {
                at(x, y, 0) = z[0];
                for (int i = 1; i <= imax; ++i) {
                    at(x, y, i) = z[i] - (h[i - 1] - z[i - 1]);
                    if (at(x, y, i) < 0)
                        throw std::runtime_error("ExtTable: negative cohomology dimension");
                }
            }
        }
    }
}

int ExtTable::index_of(ModCoord x) const
{
    const auto it = std::lower_bound(mods_.begin(), mods_.end(), x);
    if (it == mods_.end() || !(*it == x)) return -1;
    return static_cast<int>(it - mods_.begin());
}

int ExtTable::dim(int x, int y, int i) const
{
    if (i > bound_) throw std::invalid_argument("ExtTable: degree beyond bound");
    return table_[(static_cast<size_t>(x) * mods_.size() + y) * (bound_ + 1) + i];
}

int ExtTable::dim(ModCoord x, ModCoord y, int i) const
{
    const int xi = index_of(x), yi = index_of(y);
    if (xi < 0 || yi < 0) throw std::invalid_argument("ExtTable: unknown module");
    return dim(xi, yi, i);
}

IndBits ExtTable::left_mask(int x, int n) const
{
    IndBits bits;
    for (size_t y = 0; y < mods_.size(); ++y)
        for (int i = 1; i < n; ++i)
            if (dim(x, static_cast<int>(y), i) > 0) {
                bits.set(y);
                break;
            }
    return bits;
}

IndBits ExtTable::right_mask(int x, int n) const
{
    IndBits bits;
    for (size_t y = 0; y < mods_.size(); ++y)
        for (int i = 1; i < n; ++i)
            if (dim(static_cast<int>(y), x, i) > 0) {
                bits.set(y);
                break;
            }
    return bits;
}

bool is_nct(const ExtTable& table, const std::vector<ModCoord>& members, int n)
{
    if (n < 1) throw std::invalid_argument("is_nct: n must be positive");
    if (n - 1 > table.bound()) throw std::invalid_argument("is_nct: table bound too small");
    const int count = static_cast<int>(table.modules().size());
    IndBits chosen;
    for (ModCoord c : members) {
        const int i = table.index_of(c);
        if (i < 0) throw std::invalid_argument("is_nct: member is not an indecomposable");
        chosen.set(i);
    }
    for (int x = 0; x < count; ++x) {
        const bool in = chosen.test(x);
        const IndBits ls = table.left_mask(x, n), rs = table.right_mask(x, n);
        if (in) {
            if ((ls & chosen).any()) return false;  // Ext inside the candidate
        } else {
            // an outsider must be excluded by both perpendicular conditions
            if ((rs & chosen).none() || (ls & chosen).none()) return false;
        }
    }
    return true;
}

bool is_nct(const KupischAlgebra& alg, const std::vector<ModCoord>& members, int n)
{
    return is_nct(ExtTable(alg, std::max(0, n - 1)), members, n);
}

std::vector<ModCoord> left_support_coords(const ExtTable& table, ModCoord x, int n)
{
    const int xi = table.index_of(x);
    if (xi < 0) throw std::invalid_argument("left_support: unknown module");
    std::vector<ModCoord> out;
    const IndBits bits = table.left_mask(xi, n);
    for (size_t y = 0; y < table.modules().size(); ++y)
        if (bits.test(y)) out.push_back(table.modules()[y]);
    return out;
}

std::vector<ModCoord> right_support_coords(const ExtTable& table, ModCoord x, int n)
{
    const int xi = table.index_of(x);
    if (xi < 0) throw std::invalid_argument("right_support: unknown module");
    std::vector<ModCoord> out;
    const IndBits bits = table.right_mask(xi, n);
    for (size_t y = 0; y < table.modules().size(); ++y)
        if (bits.test(y)) out.push_back(table.modules()[y]);
    return out;
}

namespace {

struct SearchContext {
    int count = 0;
    std::vector<int> free_idx;
    std::vector<IndBits> conflict;
    std::vector<char> isproj, isinj;
    std::vector<int> taun, tauninv;  // image index, or -1 for zero
    unsigned long long budget = 0;
    unsigned long long examined = 0;
    IndBits chosen;
    std::vector<IndBits> found;
};

bool bijection_holds(const SearchContext& ctx)
{
    for (int x = 0; x < ctx.count; ++x) {
        if (!ctx.chosen.test(x)) continue;
        if (!ctx.isproj[x]) {
            const int t = ctx.taun[x];
            if (t < 0 || !ctx.chosen.test(t) || ctx.isinj[t] || ctx.tauninv[t] != x) return false;
        }
        if (!ctx.isinj[x]) {
            const int t = ctx.tauninv[x];
            if (t < 0 || !ctx.chosen.test(t) || ctx.isproj[t] || ctx.taun[t] != x) return false;
        }
    }
    return true;
}

void search_dfs(SearchContext& ctx, const std::vector<IndBits>& ls, const std::vector<IndBits>& rs,
                size_t pos, IndBits forbidden)
{
    if (pos == ctx.free_idx.size()) {
        ++ctx.examined;
        if (ctx.examined > ctx.budget) throw BudgetExceeded(ctx.examined);
        if (!bijection_holds(ctx)) return;
        for (int z = 0; z < ctx.count; ++z) {
            if (ctx.chosen.test(z)) continue;
            if ((rs[z] & ctx.chosen).none() || (ls[z] & ctx.chosen).none()) return;
        }
        ctx.found.push_back(ctx.chosen);
        return;
    }
    const int x = ctx.free_idx[pos];
    if (!forbidden.test(x) && !ctx.conflict[x].test(x)) {
        ctx.chosen.set(x);
        search_dfs(ctx, ls, rs, pos + 1, forbidden | ctx.conflict[x]);
        ctx.chosen.reset(x);
    }
    search_dfs(ctx, ls, rs, pos + 1, forbidden);
}

}  // namespace

SearchOutcome exhaustive_nct_search(const KupischAlgebra& alg, int n, unsigned long long budget)
{
    if (n < 2) throw std::invalid_argument("exhaustive_nct_search: n must be at least 2");
    const ExtTable table(alg, n - 1);
    const std::vector<ModCoord>& mods = table.modules();
    const int count = static_cast<int>(mods.size());

    SearchContext ctx;
    ctx.count = count;
    ctx.budget = budget;
    std::vector<IndBits> ls(count), rs(count);
    ctx.conflict.resize(count);
    ctx.isproj.resize(count);
    ctx.isinj.resize(count);
    ctx.taun.resize(count);
    ctx.tauninv.resize(count);
    IndBits mandatory;
    for (int x = 0; x < count; ++x) {
        ls[x] = table.left_mask(x, n);
        rs[x] = table.right_mask(x, n);
        ctx.conflict[x] = ls[x] | rs[x];
        ctx.isproj[x] = alg.is_projective(mods[x]);
        ctx.isinj[x] = alg.is_injective(mods[x]);
        if (ctx.isproj[x] || ctx.isinj[x]) mandatory.set(x);
        const ModCoord t = tau_n_coord(alg, mods[x], n);
        const ModCoord ti = tau_n_inv_coord(alg, mods[x], n);
        ctx.taun[x] = t.is_zero() ? -1 : table.index_of(t);
        ctx.tauninv[x] = ti.is_zero() ? -1 : table.index_of(ti);
    }

    SearchOutcome out;
    // every candidate contains all projectives and injectives
    IndBits forbidden;
    for (int x = 0; x < count; ++x)
        if (mandatory.test(x)) forbidden |= ctx.conflict[x];
    if ((forbidden & mandatory).any()) return out;  // Lambda or DLambda already obstructed

    ctx.chosen = mandatory;
    for (int x = 0; x < count; ++x)
        if (!mandatory.test(x)) ctx.free_idx.push_back(x);
    search_dfs(ctx, ls, rs, 0, forbidden);

    for (const IndBits& bits : ctx.found) {
        std::vector<ModCoord> set;
        for (int x = 0; x < count; ++x)
            if (bits.test(x)) set.push_back(mods[x]);
        out.sets.push_back(std::move(set));
    }
    std::sort(out.sets.begin(), out.sets.end());
    out.examined = ctx.examined;
    return out;
}

}  // namespace nakayama::oracle
