#ifndef FLAGCOH_WEIGHTS_HPP
#define FLAGCOH_WEIGHTS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace flagcoh {

using Int = std::int64_t;

/// Shape of a GL partial flag variety F(d_1,...,d_t; n).
///
/// `dims` holds d_1 < ... < d_t < d_{t+1} = n. Block j (0-based, j = 0..t)
/// is the index range [d_j, d_{j+1}) with d_0 = 0, so there are t+1 blocks
/// of lengths d_{j+1} - d_j. The variety has dimension
/// sum_{i<j} len_i * len_j.
class FlagShape {
  public:
    explicit FlagShape(std::vector<int> dims) : dims_(std::move(dims))
    {
        if (dims_.size() < 2)
            throw InvalidArgument("flag shape needs at least one proper step and the ambient dimension");
        int prev = 0;
        for (int d : dims_) {
            if (d <= prev)
                throw InvalidArgument("flag dimensions must be strictly increasing and positive");
            lengths_.push_back(d - prev);
            prev = d;
        }
    }

    static FlagShape grassmannian(int e, int d) { return FlagShape({e, d}); }
    static FlagShape projective_space(int n) { return FlagShape({1, n + 1}); }

    /// The shape (2, 4, ..., 2t; 2t+2).
    static FlagShape twos(int t)
    {
        if (t < 1)
            throw InvalidArgument("twos: t must be positive");
        std::vector<int> d;
        for (int j = 1; j <= t + 1; ++j)
            d.push_back(2 * j);
        return FlagShape(std::move(d));
    }

    int n() const { return dims_.back(); }
    int steps() const { return static_cast<int>(dims_.size()) - 1; }
    int block_count() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<int>& block_lengths() const { return lengths_; }

    // d_j with d_0 = 0, for j = 0..t+1.
    int d(int j) const { return j == 0 ? 0 : dims_[j - 1]; }
    int block_begin(int block) const { return d(block); }
    int block_end(int block) const { return d(block + 1); }

    int block_of(int index) const
    {
        auto it = std::upper_bound(dims_.begin(), dims_.end(), index);
        return static_cast<int>(it - dims_.begin());
    }

    Int dimension() const
    {
        Int total = 0;
        for (std::size_t i = 0; i < lengths_.size(); ++i)
            for (std::size_t j = i + 1; j < lengths_.size(); ++j)
                total += Int{lengths_[i]} * lengths_[j];
        return total;
    }

    bool is_grassmannian() const { return steps() == 1; }

    /// "d1,...,dt:n"
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i + 1 < dims_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(dims_[i]);
        }
        return out + ':' + std::to_string(dims_.back());
    }

    friend bool operator==(const FlagShape& a, const FlagShape& b) { return a.dims_ == b.dims_; }
    friend auto operator<=>(const FlagShape& a, const FlagShape& b) { return a.dims_ <=> b.dims_; }

  private:
    std::vector<int> dims_;
    std::vector<int> lengths_;
};

inline bool is_levi_dominant(std::span<const Int> entries, const FlagShape& shape)
{
    if (entries.size() != static_cast<std::size_t>(shape.n()))
        return false;
    for (int b = 0; b < shape.block_count(); ++b)
        for (int i = shape.block_begin(b) + 1; i < shape.block_end(b); ++i)
            if (entries[i - 1] < entries[i])
                return false;
    return true;
}

/// Integer weight of length n, non-increasing within each block of its shape.
/// Names an irreducible homogeneous bundle on the flag variety.
class LeviWeight {
  public:
    LeviWeight(FlagShape shape, std::vector<Int> entries) : shape_(std::move(shape)), entries_(std::move(entries))
    {
        if (entries_.size() != static_cast<std::size_t>(shape_.n()))
            throw InvalidArgument("weight length " + std::to_string(entries_.size()) + " does not match n = " +
                                  std::to_string(shape_.n()));
        if (!is_levi_dominant(entries_, shape_))
            throw InvalidArgument("weight is not non-increasing within the blocks of " + shape_.to_string());
    }

    static LeviWeight block_constant(const FlagShape& shape, std::span<const Int> values)
    {
        if (values.size() != static_cast<std::size_t>(shape.block_count()))
            throw InvalidArgument("expected one value per block");
        std::vector<Int> e;
        e.reserve(shape.n());
        for (int b = 0; b < shape.block_count(); ++b)
            e.insert(e.end(), shape.block_lengths()[b], values[b]);
        return LeviWeight(shape, std::move(e));
    }

    static LeviWeight zero(const FlagShape& shape) { return LeviWeight(shape, std::vector<Int>(shape.n(), 0)); }

    const FlagShape& shape() const { return shape_; }
    const std::vector<Int>& entries() const { return entries_; }
    Int operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }

    bool is_block_constant() const
    {
        for (int b = 0; b < shape_.block_count(); ++b)
            for (int i = shape_.block_begin(b) + 1; i < shape_.block_end(b); ++i)
                if (entries_[i] != entries_[i - 1])
                    return false;
        return true;
    }

    /// One value per block; meaningful for block-constant weights.
    std::vector<Int> block_values() const
    {
        std::vector<Int> v;
        for (int b = 0; b < shape_.block_count(); ++b)
            v.push_back(entries_[shape_.block_begin(b)]);
        return v;
    }

    friend bool operator==(const LeviWeight& a, const LeviWeight& b)
    {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }

  private:
    FlagShape shape_;
    std::vector<Int> entries_;
};

/// Weakly decreasing non-negative integers with trailing zeros removed.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw InvalidArgument("partition parts must be non-negative");
            if (i && parts_[i] > parts_[i - 1])
                throw InvalidArgument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }

    /// (m, 1^(j-1)); j = 0 gives the empty partition.
    static Partition hook(int m, int j)
    {
        if (j == 0)
            return {};
        std::vector<int> p{m};
        p.insert(p.end(), j - 1, 1);
        return Partition(std::move(p));
    }

    static Partition column(int j) { return Partition(std::vector<int>(j, 1)); }
    static Partition row(int m) { return Partition(std::vector<int>{m}); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::vector<Int> as_weight(int n) const
    {
        std::vector<Int> w(std::max(n, length()), 0);
        std::copy(parts_.begin(), parts_.end(), w.begin());
        return w;
    }

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            out += (i ? "," : "") + std::to_string(parts_[i]);
        return out + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  private:
    std::vector<int> parts_;
};

/// (n-1, n-2, ..., 1, 0)
inline std::vector<Int> rho(int n)
{
    if (n < 1)
        throw InvalidArgument("rho: n must be positive");
    std::vector<Int> r(n);
    for (int i = 0; i < n; ++i)
        r[i] = n - 1 - i;
    return r;
}

inline bool is_singular(std::span<const Int> v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j])
                return true;
    return false;
}

/// Pairs i < j with v_i < v_j: the inversions for the decreasing order.
inline std::int64_t inversion_count(std::span<const Int> v)
{
    std::int64_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j])
                throw PreconditionViolation("inversion_count: entries must be pairwise distinct");
            if (v[i] < v[j])
                ++count;
        }
    return count;
}

inline std::vector<Int> sort_descending(std::span<const Int> v)
{
    std::vector<Int> out(v.begin(), v.end());
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

inline LeviWeight shift(const LeviWeight& w, Int c)
{
    std::vector<Int> e = w.entries();
    for (auto& x : e)
        x += c;
    return LeviWeight(w.shape(), std::move(e));
}

inline std::vector<Int> add(std::span<const Int> a, std::span<const Int> b)
{
    if (a.size() != b.size())
        throw InvalidArgument("add: length mismatch");
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

inline std::vector<Int> subtract(std::span<const Int> a, std::span<const Int> b)
{
    if (a.size() != b.size())
        throw InvalidArgument("subtract: length mismatch");
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

inline std::string to_string(std::span<const Int> v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

/// All flag shapes with ambient dimension n, in lexicographic order of
/// (d_1, ..., d_t).
inline std::vector<FlagShape> flag_shapes(int n)
{
    if (n < 2)
        throw InvalidArgument("flag_shapes: n must be at least 2");
    std::vector<FlagShape> out;
    std::vector<int> d;
    auto rec = [&](auto&& self, int next) -> void {
        if (!d.empty()) {
            auto full = d;
            full.push_back(n);
            out.emplace_back(std::move(full));
        }
        for (int x = next; x < n; ++x) {
            d.push_back(x);
            self(self, x + 1);
            d.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace flagcoh

#endif // FLAGCOH_WEIGHTS_HPP
