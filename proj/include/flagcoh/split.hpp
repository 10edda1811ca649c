#ifndef FLAGCOH_SPLIT_HPP
#define FLAGCOH_SPLIT_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "errors.hpp"
#include "schur.hpp"
#include "weights.hpp"

namespace flagcoh {

namespace detail {

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ResourceLimit("multiplicity overflow");
    return r;
}

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ResourceLimit("multiplicity overflow");
    return r;
}

inline Int to_int(const BigInt& x)
{
    if (x > std::numeric_limits<Int>::max())
        throw ResourceLimit("multiplicity overflow");
    return static_cast<Int>(x);
}

} // namespace detail

/// Line bundle on a flag variety, as block values modulo a global shift.
/// Stored normalized so that the last block value is 0.
inline std::vector<Int> normalize_line(std::vector<Int> values)
{
    if (values.empty())
        return values;
    const Int last = values.back();
    for (auto& v : values)
        v -= last;
    return values;
}

/// Ample iff the block values strictly decrease.
inline bool is_ample_line(std::span<const Int> block_values)
{
    for (std::size_t i = 1; i < block_values.size(); ++i)
        if (block_values[i - 1] <= block_values[i])
            return false;
    return true;
}

inline bool is_ample_line(const FlagShape& shape, const LeviWeight& w)
{
    if (!(w.shape() == shape) || !w.is_block_constant())
        throw PreconditionViolation("is_ample_line: expected a block-constant weight on " + shape.to_string());
    return is_ample_line(w.block_values());
}

/// Direct sum of line bundles with multiplicities. Summands are isotypical
/// classes: normalized block values, pairwise distinct, sorted.
class SplitBundle {
  public:
    struct Summand {
        std::vector<Int> values;
        Int multiplicity;
        friend bool operator==(const Summand&, const Summand&) = default;
    };

    explicit SplitBundle(FlagShape shape) : shape_(std::move(shape)) {}

    SplitBundle(FlagShape shape, const std::vector<std::pair<LeviWeight, Int>>& summands) : shape_(std::move(shape))
    {
        for (const auto& [w, mult] : summands)
            add(w, mult);
    }

    static SplitBundle from_values(const FlagShape& shape, const std::vector<std::pair<std::vector<Int>, Int>>& s)
    {
        SplitBundle b(shape);
        for (const auto& [v, mult] : s)
            b.add_values(v, mult);
        return b;
    }

    void add(const LeviWeight& w, Int multiplicity = 1)
    {
        if (!(w.shape() == shape_))
            throw InvalidArgument("SplitBundle: summand lives on a different flag shape");
        if (!w.is_block_constant())
            throw InvalidArgument("SplitBundle: summand weight must be block-constant");
        add_values(w.block_values(), multiplicity);
    }

    void add_values(std::vector<Int> values, Int multiplicity = 1)
    {
        if (values.size() != static_cast<std::size_t>(shape_.block_count()))
            throw InvalidArgument("SplitBundle: expected one value per block");
        if (multiplicity < 1)
            throw InvalidArgument("SplitBundle: multiplicities must be positive");
        values = normalize_line(std::move(values));
        auto it = std::lower_bound(summands_.begin(), summands_.end(), values,
                                   [](const Summand& s, const std::vector<Int>& v) { return s.values < v; });
        if (it != summands_.end() && it->values == values)
            it->multiplicity = detail::checked_add(it->multiplicity, multiplicity);
        else
            summands_.insert(it, Summand{std::move(values), multiplicity});
    }

    const FlagShape& shape() const { return shape_; }
    const std::vector<Summand>& summands() const { return summands_; }
    std::size_t class_count() const { return summands_.size(); }

    Int rank() const
    {
        Int r = 0;
        for (const auto& s : summands_)
            r = detail::checked_add(r, s.multiplicity);
        return r;
    }

    LeviWeight weight(std::size_t i) const { return LeviWeight::block_constant(shape_, summands_[i].values); }

    bool all_ample() const
    {
        return std::all_of(summands_.begin(), summands_.end(), [](const Summand& s) { return is_ample_line(s.values); });
    }

    friend bool operator==(const SplitBundle& a, const SplitBundle& b)
    {
        return a.shape_ == b.shape_ && a.summands_ == b.summands_;
    }

  private:
    FlagShape shape_;
    std::vector<Summand> summands_;
};

inline SplitBundle dual_split(const SplitBundle& b)
{
    SplitBundle out(b.shape());
    for (const auto& s : b.summands()) {
        std::vector<Int> v = s.values;
        for (auto& x : v)
            x = -x;
        out.add_values(std::move(v), s.multiplicity);
    }
    return out;
}

inline SplitBundle tensor_split(const SplitBundle& a, const SplitBundle& b)
{
    if (!(a.shape() == b.shape()))
        throw InvalidArgument("tensor_split: shapes differ");
    SplitBundle out(a.shape());
    for (const auto& x : a.summands())
        for (const auto& y : b.summands())
            out.add_values(add(x.values, y.values), detail::checked_mul(x.multiplicity, y.multiplicity));
    return out;
}

/// Twist every summand by a line bundle.
inline SplitBundle twist_split(const SplitBundle& b, std::span<const Int> line_values)
{
    SplitBundle out(b.shape());
    for (const auto& s : b.summands())
        out.add_values(add(s.values, line_values), s.multiplicity);
    return out;
}

inline LeviWeight det_split(const SplitBundle& b)
{
    std::vector<Int> total(b.shape().block_count(), 0);
    for (const auto& s : b.summands())
        for (std::size_t i = 0; i < total.size(); ++i)
            total[i] += s.multiplicity * s.values[i];
    return LeviWeight::block_constant(b.shape(), normalize_line(std::move(total)));
}

namespace detail {

inline void sym_compositions(const SplitBundle& b, std::size_t i, Int remaining, std::vector<Int>& acc, Int mult,
                             SplitBundle& out)
{
    const auto& s = b.summands();
    if (i + 1 == s.size()) {
        const Int e = remaining;
        std::vector<Int> v = acc;
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] += e * s[i].values[c];
        out.add_values(std::move(v), checked_mul(mult, to_int(binomial(s[i].multiplicity - 1 + e, e))));
        return;
    }
    for (Int e = 0; e <= remaining; ++e) {
        std::vector<Int> next = acc;
        for (std::size_t c = 0; c < next.size(); ++c)
            next[c] += e * s[i].values[c];
        sym_compositions(b, i + 1, remaining - e, next, checked_mul(mult, to_int(binomial(s[i].multiplicity - 1 + e, e))),
                         out);
    }
}

} // namespace detail

/// Sym^m of a split bundle: one summand per monomial of degree m.
inline SplitBundle sym_split(const SplitBundle& b, Int m)
{
    if (m < 0)
        throw InvalidArgument("sym_split: m must be non-negative");
    SplitBundle out(b.shape());
    if (b.summands().empty()) {
        if (m == 0)
            out.add_values(std::vector<Int>(b.shape().block_count(), 0));
        return out;
    }
    std::vector<Int> acc(b.shape().block_count(), 0);
    detail::sym_compositions(b, 0, m, acc, 1, out);
    return out;
}

/// End(V) = V (x) V^dual.
inline SplitBundle end_split(const SplitBundle& v) { return tensor_split(v, dual_split(v)); }

} // namespace flagcoh

#endif // FLAGCOH_SPLIT_HPP
