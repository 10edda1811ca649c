#ifndef FLAGCOH_SCHUR_HPP
#define FLAGCOH_SCHUR_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "weights.hpp"

namespace flagcoh {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(Int top, Int bottom)
{
    if (bottom < 0 || top < 0 || bottom > top)
        return 0;
    bottom = std::min(bottom, top - bottom);
    BigInt r = 1;
    for (Int i = 1; i <= bottom; ++i) {
        r *= top - bottom + i;
        r /= i;
    }
    return r;
}

/// Formal sum of Schur functors, keyed by partition.
class SchurSum {
  public:
    using Terms = std::map<Partition, Int>;

    void add(const Partition& p, Int multiplicity = 1)
    {
        if (multiplicity <= 0)
            throw InvalidArgument("SchurSum: multiplicities must be positive");
        terms_[p] += multiplicity;
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    bool contains(const Partition& p) const { return terms_.count(p) != 0; }
    Int multiplicity(const Partition& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    friend bool operator==(const SchurSum&, const SchurSum&) = default;

  private:
    Terms terms_;
};

namespace detail {

inline void horizontal_strips(const Partition& lambda, int remaining, int rows, std::size_t i, std::vector<int>& mu,
                              SchurSum& out)
{
    const std::size_t limit = std::min<std::size_t>(rows, lambda.length() + 1);
    if (i == limit) {
        if (remaining == 0)
            out.add(Partition(mu));
        return;
    }
    const int lo = lambda[i];
    const int hi = i == 0 ? lo + remaining : std::min(lo + remaining, lambda[i - 1]);
    for (int v = lo; v <= hi; ++v) {
        mu.push_back(v);
        horizontal_strips(lambda, remaining - (v - lo), rows, i + 1, mu, out);
        mu.pop_back();
    }
}

inline void vertical_strips(const Partition& lambda, int remaining, std::size_t limit, std::size_t i,
                            std::vector<int>& mu, SchurSum& out)
{
    if (i == limit) {
        if (remaining == 0)
            out.add(Partition(mu));
        return;
    }
    for (int e = 0; e <= 1 && e <= remaining; ++e) {
        const int v = lambda[i] + e;
        if (i > 0 && v > mu[i - 1])
            continue;
        mu.push_back(v);
        vertical_strips(lambda, remaining - e, limit, i + 1, mu, out);
        mu.pop_back();
    }
}

} // namespace detail

/// S_lambda (x) Sym^m restricted to partitions with at most `rows` parts.
inline SchurSum pieri_row(const Partition& lambda, int m, int rows)
{
    if (m < 0 || rows < 1)
        throw InvalidArgument("pieri_row: need m >= 0 and rows >= 1");
    SchurSum out;
    if (lambda.length() > rows)
        return out;
    std::vector<int> mu;
    detail::horizontal_strips(lambda, m, rows, 0, mu, out);
    return out;
}

/// S_lambda (x) Lambda^j restricted to partitions with at most `rows` parts.
inline SchurSum pieri_col(const Partition& lambda, int j, int rows)
{
    if (j < 0 || rows < 1)
        throw InvalidArgument("pieri_col: need j >= 0 and rows >= 1");
    SchurSum out;
    if (lambda.length() > rows)
        return out;
    std::vector<int> mu;
    const std::size_t limit = std::min<std::size_t>(rows, lambda.length() + j);
    detail::vertical_strips(lambda, j, limit, 0, mu, out);
    return out;
}

/// Weyl dimension formula for GL_n:
///   prod_{i<j} (l_i - l_j + j - i) / (j - i).
/// Shorter inputs are padded with zeros; a partition with more than n nonzero
/// rows has dimension 0.
inline BigInt weyl_dimension(std::span<const Int> lambda, int n)
{
    if (n < 1)
        throw InvalidArgument("weyl_dimension: n must be positive");
    std::vector<Int> l(lambda.begin(), lambda.end());
    if (l.size() > static_cast<std::size_t>(n)) {
        for (std::size_t i = n; i < l.size(); ++i)
            if (l[i] < 0)
                throw InvalidArgument("weyl_dimension: vector longer than n with negative entries");
        for (std::size_t i = 1; i < l.size(); ++i)
            if (l[i] > l[i - 1])
                throw InvalidArgument("weyl_dimension: weight is not weakly decreasing");
        if (l[n] > 0)
            return 0;
        l.resize(n);
    }
    l.resize(n, 0);
    for (int i = 1; i < n; ++i)
        if (l[i] > l[i - 1])
            throw InvalidArgument("weyl_dimension: weight is not weakly decreasing");

    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= l[i] - l[j] + (j - i);
            den *= j - i;
        }
    return num / den;
}

inline BigInt weyl_dimension(const Partition& lambda, int n)
{
    if (lambda.length() > n)
        return 0;
    return weyl_dimension(lambda.as_weight(n), n);
}

inline constexpr int kSsytMaxBoxes = 40;
inline constexpr int kSsytMaxLetters = 8;

/// Counts semistandard tableaux by peeling off the horizontal strip that
/// holds the largest letter. Independent of the Weyl product formula.
/// Reuse one instance across many queries to share the memo table.
class SsytCounter {
  public:
    BigInt count(const Partition& lambda, int n)
    {
        if (n < 1)
            throw InvalidArgument("ssyt_count: n must be positive");
        if (lambda.size() > kSsytMaxBoxes || n > kSsytMaxLetters)
            throw ResourceLimit("ssyt_count: enumeration guard exceeded (|lambda| <= " +
                                std::to_string(kSsytMaxBoxes) + ", n <= " + std::to_string(kSsytMaxLetters) + ")");
        return count_rec(lambda.parts(), n);
    }

  private:
    BigInt count_rec(const std::vector<int>& lambda, int n)
    {
        if (lambda.empty())
            return 1;
        if (static_cast<int>(lambda.size()) > n)
            return 0;
        auto key = std::make_pair(lambda, n);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        BigInt total = 0;
        std::vector<int> mu;
        peel(lambda, n, 0, mu, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    // mu_i ranges over [lambda_{i+1}, lambda_i]; mu may use at most n-1 rows.
    void peel(const std::vector<int>& lambda, int n, std::size_t i, std::vector<int>& mu, BigInt& total)
    {
        if (i == lambda.size()) {
            std::vector<int> trimmed = mu;
            while (!trimmed.empty() && trimmed.back() == 0)
                trimmed.pop_back();
            if (static_cast<int>(trimmed.size()) <= n - 1)
                total += count_rec(trimmed, n - 1);
            return;
        }
        const int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
        for (int v = lo; v <= lambda[i]; ++v) {
            mu.push_back(v);
            peel(lambda, n, i + 1, mu, total);
            mu.pop_back();
        }
    }

    std::map<std::pair<std::vector<int>, int>, BigInt> memo_;
};

inline BigInt ssyt_count(const Partition& lambda, int n)
{
    SsytCounter counter;
    return counter.count(lambda, n);
}

/// Total dimension of a Schur sum evaluated on an n-dimensional space.
inline BigInt dimension(const SchurSum& sum, int n)
{
    BigInt total = 0;
    for (const auto& [p, mult] : sum.terms())
        total += BigInt(mult) * weyl_dimension(p, n);
    return total;
}

} // namespace flagcoh

#endif // FLAGCOH_SCHUR_HPP
