#ifndef FLAGCOH_CRITERIA_HPP
#define FLAGCOH_CRITERIA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bott.hpp"
#include "errors.hpp"
#include "split.hpp"
#include "weights.hpp"

namespace flagcoh {

// ---------------------------------------------------------------------------
// Ampleness of twisted symmetric powers
// ---------------------------------------------------------------------------

// A block-constant weight is ample iff a_j - a_{j+1} > 0 for every j. For a
// tensor product of symmetric powers of split bundles, every combination of
// summands occurs, so the least value of each such functional is the sum of
// the per-factor minima. The explicit route expands the multisets instead.
enum class AmplenessRoute { Functional, Explicit };

namespace detail {

inline Int block_gap(const std::vector<Int>& v, std::size_t j) { return v[j] - v[j + 1]; }

inline Int min_gap(const SplitBundle& b, std::size_t j)
{
    if (b.summands().empty())
        throw PreconditionViolation("min_gap: empty bundle");
    Int best = std::numeric_limits<Int>::max();
    for (const auto& s : b.summands())
        best = std::min(best, block_gap(s.values, j));
    return best;
}

inline void require_same_shape(const SplitBundle& a, const SplitBundle& b, const char* what)
{
    if (!(a.shape() == b.shape()))
        throw InvalidArgument(std::string(what) + ": bundles live on different flag shapes");
}

inline void require_split_ample(const SplitBundle& n, const char* what)
{
    if (n.summands().empty() || !n.all_ample())
        throw PreconditionViolation(std::string(what) + ": every summand of N must be ample");
}

} // namespace detail

/// Sym^{1+f}(F^dual) (x) det F (x) Sym^{m-1+nu}(N) (x) det(N)^{-1} is ample.
inline bool f_condition_ample(const SplitBundle& f, const SplitBundle& n, Int m,
                              AmplenessRoute route = AmplenessRoute::Functional)
{
    detail::require_same_shape(f, n, "f_condition_ample");
    const Int rf = f.rank(), nu = n.rank();
    if (m - 1 + nu < 0)
        return false;
    const auto fd = dual_split(f);
    const auto detf = det_split(f).block_values();
    const auto detn = det_split(n).block_values();
    if (route == AmplenessRoute::Explicit) {
        SplitBundle det_twist(f.shape());
        det_twist.add_values(subtract(detf, detn));
        const auto total = tensor_split(tensor_split(sym_split(fd, 1 + rf), sym_split(n, m - 1 + nu)), det_twist);
        return total.all_ample();
    }
    for (std::size_t j = 0; j + 1 < detf.size(); ++j) {
        Int value = (1 + rf) * detail::min_gap(fd, j) + detail::block_gap(detf, j) - detail::block_gap(detn, j);
        if (m - 1 + nu > 0)
            value += (m - 1 + nu) * detail::min_gap(n, j);
        if (value <= 0)
            return false;
    }
    return true;
}

/// Sym^{1+r^2}(End V) (x) Sym^{m+nu}(N) (x) det(N)^{-1} is ample.
inline bool v_condition_ample(const SplitBundle& v, const SplitBundle& n, Int m,
                              AmplenessRoute route = AmplenessRoute::Functional)
{
    detail::require_same_shape(v, n, "v_condition_ample");
    const Int r = v.rank(), nu = n.rank();
    if (m + nu < 0)
        return false;
    const auto e = end_split(v);
    const auto detn = det_split(n).block_values();
    if (route == AmplenessRoute::Explicit) {
        SplitBundle twist(v.shape());
        std::vector<Int> neg = detn;
        for (auto& x : neg)
            x = -x;
        twist.add_values(neg);
        return tensor_split(tensor_split(sym_split(e, 1 + r * r), sym_split(n, m + nu)), twist).all_ample();
    }
    for (std::size_t j = 0; j + 1 < detn.size(); ++j) {
        Int value = (1 + r * r) * detail::min_gap(e, j) - detail::block_gap(detn, j);
        if (m + nu > 0)
            value += (m + nu) * detail::min_gap(n, j);
        if (value <= 0)
            return false;
    }
    return true;
}

struct Threshold {
    Int m = 0;
    bool holds_at_m = false;
    // Predicate value at m-1; empty when m is already the least admissible m.
    std::optional<bool> holds_below;
};

/// Least m >= 1 with f_condition_ample(F, N, m). N must be split and ample.
inline Threshold m_threshold_F(const SplitBundle& f, const SplitBundle& n)
{
    detail::require_same_shape(f, n, "m_threshold_F");
    detail::require_split_ample(n, "m_threshold_F");
    Threshold out{1, false, std::nullopt};
    while (!f_condition_ample(f, n, out.m))
        ++out.m;
    out.holds_at_m = true;
    if (out.m > 1)
        out.holds_below = f_condition_ample(f, n, out.m - 1);
    return out;
}

/// Least m >= 0 with v_condition_ample(V, N, m). N must be split and ample.
inline Threshold m_threshold_V(const SplitBundle& v, const SplitBundle& n)
{
    detail::require_same_shape(v, n, "m_threshold_V");
    detail::require_split_ample(n, "m_threshold_V");
    Threshold out{0, false, std::nullopt};
    while (!v_condition_ample(v, n, out.m))
        ++out.m;
    out.holds_at_m = true;
    if (out.m > 0)
        out.holds_below = v_condition_ample(v, n, out.m - 1);
    return out;
}

// ---------------------------------------------------------------------------
// Rank gates (exact integer comparisons)
// ---------------------------------------------------------------------------

/// nu <= min{(dimX-3)/2, (dimX-1)/3}, or nu = 1, dimX = 4 and K_X (x) N^2 is
/// globally generated.
inline bool gate_3nu(Int dim_x, Int nu, bool kappa_n2_globally_generated)
{
    if (dim_x < 1)
        throw InvalidArgument("gate_3nu: dim X must be positive");
    if (2 * nu <= dim_x - 3 && 3 * nu <= dim_x - 1)
        return true;
    return nu == 1 && dim_x == 4 && kappa_n2_globally_generated;
}

/// f + (nu+1)^2/4 <= dimX
inline bool gate_quadratic(Int dim_x, Int f, Int nu) { return 4 * f + (nu + 1) * (nu + 1) <= 4 * dim_x; }

/// nu <= (dimX-1)/2
inline bool gate_halfdim(Int dim_x, Int nu) { return 2 * nu <= dim_x - 1; }

// ---------------------------------------------------------------------------
// Isotypical poset
// ---------------------------------------------------------------------------

struct Poset {
    // (i, j) means i < j: i != j and H^0(L_i^{-1} L_j) != 0.
    std::vector<std::pair<std::size_t, std::size_t>> relation;
    std::vector<std::size_t> maximal;

    bool precedes(std::size_t i, std::size_t j) const
    {
        return std::find(relation.begin(), relation.end(), std::make_pair(i, j)) != relation.end();
    }
};

/// Indices refer to V.summands() (the isotypical classes).
inline Poset poset(const SplitBundle& v)
{
    Poset out;
    const std::size_t k = v.class_count();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            const auto diff = subtract(v.summands()[j].values, v.summands()[i].values);
            if (cohomology(LeviWeight::block_constant(v.shape(), diff)).nonzero_in(0))
                out.relation.emplace_back(i, j);
        }
    for (std::size_t i = 0; i < k; ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < k && !dominated; ++j)
            dominated = out.precedes(i, j);
        if (!dominated)
            out.maximal.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Flag sequences, cohomological-dimension bounds, reduction chains
// ---------------------------------------------------------------------------

/// Blockwise comparison d'_j - d'_{j-1} <= d_j - d_{j-1}.
inline bool seq_leq(const FlagShape& lhs, const FlagShape& rhs)
{
    if (lhs.block_count() != rhs.block_count())
        throw InvalidArgument("seq_leq: sequences of different length");
    for (int b = 0; b < lhs.block_count(); ++b)
        if (lhs.block_lengths()[b] > rhs.block_lengths()[b])
            return false;
    return true;
}

inline bool dominates_twos(const FlagShape& shape) { return seq_leq(FlagShape::twos(shape.steps()), shape); }

/// X = Grs(n+1; nu+n+1) minus a smaller Grassmannian Grs(n; nu+n).
struct GrassmannianDeletion {
    int n;
    int nu;
};

/// F_d minus F_{d^j}, with j in 1..t+1.
struct FlagDeletion {
    FlagShape shape;
    int j;
};

struct CdBound {
    Int dimension = 0;
    Int bound = 0;
    // dim - d_1 for j = 1 and dim - (n - d_t) for j = t+1.
    std::optional<Int> intermediate;
};

inline CdBound cd_bound(const std::variant<GrassmannianDeletion, FlagDeletion>& kind)
{
    CdBound out;
    if (const auto* g = std::get_if<GrassmannianDeletion>(&kind)) {
        if (g->n < 2 || g->nu < 2)
            throw PreconditionViolation("cd_bound: Grassmannian deletion needs n, nu >= 2");
        out.dimension = Int{g->n + 1} * g->nu;
        out.bound = out.dimension - (g->n + 1);
        return out;
    }
    const auto& f = std::get<FlagDeletion>(kind);
    const auto& d = f.shape;
    if (!dominates_twos(d))
        throw PreconditionViolation("cd_bound: flag " + d.to_string() + " is not >= 2_*");
    if (f.j < 1 || f.j > d.block_count())
        throw PreconditionViolation("cd_bound: index j out of range");
    if (d.d(f.j) - d.d(f.j - 1) < 3)
        throw PreconditionViolation("cd_bound: need d_j - d_{j-1} >= 3");
    out.dimension = d.dimension();
    out.bound = out.dimension - 3;
    if (f.j == 1)
        out.intermediate = out.dimension - d.d(1);
    else if (f.j == d.block_count())
        out.intermediate = out.dimension - (d.n() - d.d(f.j - 1));
    return out;
}

/// d^j = (d_1, ..., d_{j-1}, d_j - 1, ..., d_t - 1; d_{t+1} - 1)
inline FlagShape shrink_block(const FlagShape& d, int j)
{
    std::vector<int> dims = d.dims();
    for (std::size_t i = j - 1; i < dims.size(); ++i)
        dims[i] -= 1;
    return FlagShape(std::move(dims));
}

struct GrassStep {
    enum class Kind { Reduce, Dual };
    Kind kind;
    int from_e, from_d, to_e, to_d;
    // Set for Reduce steps: (n+1, nu+n+1) -> (n, nu+n).
    int n = 0, nu = 0;
};

/// Chain from Grs(e; d) down to Grs(2; 4), reducing while e >= 3 and
/// dualizing Grs(2; d) -> Grs(d-2; d) otherwise.
inline std::vector<GrassStep> reduction_chain_grass(int e, int d)
{
    if (e < 2 || d - e < 2)
        throw UnsupportedInput("reduction_chain_grass: Grs(" + std::to_string(e) + ";" + std::to_string(d) +
                               ") is out of scope (need e >= 2 and d - e >= 2)");
    std::vector<GrassStep> chain;
    while (!(e == 2 && d == 4)) {
        if (e >= 3) {
            GrassStep s{GrassStep::Kind::Reduce, e, d, e - 1, d - 1};
            s.n = e - 1;
            s.nu = d - e;
            if (s.n < 2 || s.nu < 2)
                throw InternalError("reduction_chain_grass: step hypotheses violated");
            chain.push_back(s);
            --e;
            --d;
        } else {
            chain.push_back({GrassStep::Kind::Dual, e, d, d - e, d});
            e = d - e;
        }
    }
    return chain;
}

struct FlagStep {
    FlagShape from;
    FlagShape to;
    int j;
    bool dominates_twos;
    bool adjacent_singletons;
    bool one_splitting;
    CdBound cd;
};

/// Chain d -> d^j -> ... -> 2_*, always shrinking the first block of length
/// at least 3.
inline std::vector<FlagStep> reduction_chain_flag(const FlagShape& start)
{
    if (!dominates_twos(start))
        throw UnsupportedInput("reduction_chain_flag: " + start.to_string() + " is not >= 2_* (out of scope)");
    std::vector<FlagStep> chain;
    FlagShape cur = start;
    for (;;) {
        int j = 0;
        for (int b = 1; b <= cur.block_count(); ++b)
            if (cur.d(b) - cur.d(b - 1) >= 3) {
                j = b;
                break;
            }
        if (j == 0)
            break;
        FlagShape next = shrink_block(cur, j);
        FlagStep step{cur, next, j, dominates_twos(next), has_adjacent_singleton_blocks(next),
                      h_splitting(next, 1).splitting, cd_bound(FlagDeletion{cur, j})};
        chain.push_back(std::move(step));
        cur = std::move(next);
    }
    if (!(cur == FlagShape::twos(start.steps())))
        throw InternalError("reduction_chain_flag: chain did not end at 2_*");
    return chain;
}

// ---------------------------------------------------------------------------
// Scenario and hypothesis report
// ---------------------------------------------------------------------------

struct UniversalQuotient {};

struct Scenario {
    FlagShape shape;
    SplitBundle v;
    std::variant<SplitBundle, UniversalQuotient> n;
    std::optional<SplitBundle> f;

    Int dim_x() const { return shape.dimension(); }
    Int nu() const
    {
        if (const auto* s = std::get_if<SplitBundle>(&n))
            return s->rank();
        return shape.n() - shape.d(1);
    }
    const SplitBundle* split_n() const { return std::get_if<SplitBundle>(&n); }
};

inline Scenario make_scenario(FlagShape shape, SplitBundle v, std::variant<SplitBundle, UniversalQuotient> n,
                              std::optional<SplitBundle> f = std::nullopt)
{
    if (!(v.shape() == shape) || v.rank() < 1)
        throw InvalidArgument("scenario: V must be a nonzero split bundle on the scenario shape");
    if (const auto* s = std::get_if<SplitBundle>(&n)) {
        if (!(s->shape() == shape) || s->rank() < 1)
            throw InvalidArgument("scenario: N must be a nonzero split bundle on the scenario shape");
    } else if (!shape.is_grassmannian()) {
        throw InvalidArgument("scenario: the universal quotient is only supported on Grassmannians");
    }
    if (f && (!(f->shape() == shape) || f->rank() < 1))
        throw InvalidArgument("scenario: F must be a nonzero split bundle on the scenario shape");
    return Scenario{std::move(shape), std::move(v), std::move(n), std::move(f)};
}

enum class GateStatus { Verified, NotVerified, Undecidable };

inline const char* to_string(GateStatus s)
{
    switch (s) {
    case GateStatus::Verified:
        return "verified";
    case GateStatus::NotVerified:
        return "not-verified";
    case GateStatus::Undecidable:
        return "undecidable-in-this-setting";
    }
    return "?";
}

struct GateItem {
    std::string name;
    GateStatus status;
    std::string note;
    std::optional<Int> threshold;
};

struct GateReport {
    Int dim_x = 0;
    Int nu = 0;
    Int r = 0;
    std::vector<GateItem> items;

    const GateItem* find(const std::string& name) const
    {
        for (const auto& i : items)
            if (i.name == name)
                return &i;
        return nullptr;
    }
};

inline constexpr const char* kQuotientNotAmple =
    "the universal quotient is globally generated but not ample: on a line it restricts to O^(nu-1) + O(1)";

/// Certifies (or fails to certify) the hypotheses of the splitting criteria
/// for a scenario. Never asserts that V splits.
inline GateReport theorem_gate(const Scenario& sc)
{
    GateReport rep;
    rep.dim_x = sc.dim_x();
    rep.nu = sc.nu();
    rep.r = sc.v.rank();
    const Int r2 = rep.r * rep.r;
    const auto* n = sc.split_n();
    const bool n_ample = n && n->all_ample();
    const bool rank_ok = rep.nu <= rep.dim_x - 2;

    rep.items.push_back({"rank_bound", rank_ok ? GateStatus::Verified : GateStatus::NotVerified,
                         "nu <= dim X - 2", std::nullopt});

    {
        GateItem it{"sym_twist_ample", GateStatus::NotVerified, "Sym^(1+r^2)(E) (x) Sym^(1+nu)(N) (x) det(N)^-1 ample",
                    std::nullopt};
        if (!rank_ok)
            it.note += "; rank condition fails";
        else if (!n) {
            it.status = GateStatus::Undecidable;
            it.note += "; ";
            it.note += kQuotientNotAmple;
        } else {
            if (v_condition_ample(sc.v, *n, 1))
                it.status = GateStatus::Verified;
            if (n_ample)
                it.threshold = m_threshold_V(sc.v, *n).m;
        }
        rep.items.push_back(std::move(it));
    }
    {
        GateItem it{"quadratic_bound", GateStatus::NotVerified, "(nu+1)^2/4 <= dim X - r^2 and E (x) N ample",
                    std::nullopt};
        const bool gate = gate_quadratic(rep.dim_x, r2, rep.nu);
        if (!rank_ok)
            it.note += "; rank condition fails";
        else if (!gate)
            it.note += "; quadratic gate fails";
        else if (!n) {
            it.status = GateStatus::Undecidable;
            it.note += "; ";
            it.note += kQuotientNotAmple;
        } else if (tensor_split(end_split(sc.v), *n).all_ample())
            it.status = GateStatus::Verified;
        else
            it.note += "; E (x) N has a non-ample summand";
        rep.items.push_back(std::move(it));
    }
    {
        GateItem it{"linear_rank_bound", GateStatus::NotVerified, "nu <= (dim X - 1)/2", std::nullopt};
        if (!rank_ok)
            it.note += "; rank condition fails";
        else if (!gate_halfdim(rep.dim_x, rep.nu))
            it.note += "; half-dimension gate fails";
        else {
            it.status = GateStatus::Undecidable;
            it.note += " holds; smoothness of Y and the decomposition N = G (x) A are not decided here";
        }
        rep.items.push_back(std::move(it));
    }
    {
        GateItem it{"formal_threshold", GateStatus::NotVerified, "N ample, nu <= dim X - 1; reports m_V", std::nullopt};
        if (rep.nu > rep.dim_x - 1)
            it.note += "; rank condition fails";
        else if (!n) {
            it.status = GateStatus::Undecidable;
            it.note += "; ";
            it.note += kQuotientNotAmple;
        } else if (!n_ample)
            it.note += "; N has a non-ample summand";
        else {
            it.status = GateStatus::Verified;
            it.threshold = m_threshold_V(sc.v, *n).m;
        }
        rep.items.push_back(std::move(it));
    }
    if (sc.f) {
        GateItem it{"cohom_threshold", GateStatus::NotVerified, "N ample; reports m_F", std::nullopt};
        if (!n) {
            it.status = GateStatus::Undecidable;
            it.note += "; ";
            it.note += kQuotientNotAmple;
        } else if (!n_ample)
            it.note += "; N has a non-ample summand";
        else {
            it.status = GateStatus::Verified;
            it.threshold = m_threshold_F(*sc.f, *n).m;
        }
        rep.items.push_back(std::move(it));

        GateItem ii{"cohom_quadratic", GateStatus::NotVerified, "f + (nu+1)^2/4 <= dim X and F^dual (x) N ample",
                    std::nullopt};
        if (!gate_quadratic(rep.dim_x, sc.f->rank(), rep.nu))
            ii.note += "; quadratic gate fails";
        else if (!n) {
            ii.status = GateStatus::Undecidable;
            ii.note += "; ";
            ii.note += kQuotientNotAmple;
        } else if (tensor_split(dual_split(*sc.f), *n).all_ample())
            ii.status = GateStatus::Verified;
        else
            ii.note += "; F^dual (x) N has a non-ample summand";
        rep.items.push_back(std::move(ii));
    }
    return rep;
}

} // namespace flagcoh

#endif // FLAGCOH_CRITERIA_HPP
