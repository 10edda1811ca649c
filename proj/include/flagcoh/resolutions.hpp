#ifndef FLAGCOH_RESOLUTIONS_HPP
#define FLAGCOH_RESOLUTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "bott.hpp"
#include "errors.hpp"
#include "schur.hpp"
#include "split.hpp"
#include "weights.hpp"

namespace flagcoh {

/// Formal direct sum of products of Schur functors, one partition per block.
/// Terms whose partition has more rows than its block are dropped (rank 0).
class FormalBundle {
  public:
    struct Term {
        std::vector<Partition> parts;
        Int multiplicity;
    };

    explicit FormalBundle(std::vector<int> block_lengths) : lengths_(std::move(block_lengths)) {}

    static FormalBundle schur(int rank, const Partition& p)
    {
        FormalBundle b({rank});
        b.add_term({p});
        return b;
    }

    void add_term(std::vector<Partition> parts, Int multiplicity = 1)
    {
        if (parts.size() != lengths_.size())
            throw InvalidArgument("FormalBundle: one partition per block expected");
        if (multiplicity < 1)
            throw InvalidArgument("FormalBundle: multiplicities must be positive");
        for (std::size_t b = 0; b < parts.size(); ++b)
            if (parts[b].length() > lengths_[b])
                return;
        terms_.push_back({std::move(parts), multiplicity});
    }

    const std::vector<int>& block_lengths() const { return lengths_; }
    const std::vector<Term>& terms() const { return terms_; }

    BigInt rank() const
    {
        BigInt total = 0;
        for (const auto& t : terms_) {
            BigInt r = t.multiplicity;
            for (std::size_t b = 0; b < lengths_.size(); ++b)
                r *= weyl_dimension(t.parts[b], lengths_[b]);
            total += r;
        }
        return total;
    }

  private:
    std::vector<int> lengths_;
    std::vector<Term> terms_;
};

/// Positioned terms of a resolution, positions strictly increasing
/// (position j holds the j-th syzygy term), augmenting to `augmentation`.
class FormalComplex {
  public:
    struct Entry {
        int position;
        FormalBundle term;
    };

    explicit FormalComplex(std::string augmentation) : augmentation_(std::move(augmentation)) {}

    void push(int position, FormalBundle term)
    {
        if (!entries_.empty() && position <= entries_.back().position)
            throw InvalidArgument("FormalComplex: positions must be strictly increasing");
        entries_.push_back({position, std::move(term)});
    }

    const std::vector<Entry>& entries() const { return entries_; }
    const std::string& augmentation() const { return augmentation_; }

    std::vector<BigInt> ranks() const
    {
        std::vector<BigInt> r;
        for (const auto& e : entries_)
            r.push_back(e.term.rank());
        return r;
    }

  private:
    std::string augmentation_;
    std::vector<Entry> entries_;
};

/// Lambda^j N^dual at position j, j = 1..nu, resolving I_Y.
inline FormalComplex koszul_complex(int nu)
{
    if (nu < 1)
        throw InvalidArgument("koszul_complex: nu must be positive");
    FormalComplex c("I_Y");
    for (int j = 1; j <= nu; ++j)
        c.push(j, FormalBundle::schur(nu, Partition::column(j)));
    return c;
}

/// L^j_m(N^dual) = S_(m,1^(j-1))(N^dual) at position j, resolving I_Y^m.
inline FormalComplex be_complex(int nu, int m)
{
    if (nu < 1 || m < 1)
        throw InvalidArgument("be_complex: nu and m must be positive");
    FormalComplex c("I_Y^" + std::to_string(m));
    for (int j = 1; j <= nu; ++j)
        c.push(j, FormalBundle::schur(nu, Partition::hook(m, j)));
    return c;
}

/// Alternating rank sum equals 1, the generic rank of I_Y^m.
inline bool euler_rank_check(const FormalComplex& c)
{
    BigInt sum = 0;
    for (const auto& e : c.entries()) {
        if (e.position % 2 == 1)
            sum += e.term.rank();
        else
            sum -= e.term.rank();
    }
    return sum == 1;
}

/// Sym^m (x) Lambda^(j-1) of a rank-nu space, decomposed by the column Pieri
/// rule. Contains the hooks (m,1^(j-1)) and (m+1,1^(j-2)).
inline SchurSum sym_wedge_decomposition(int nu, int m, int j)
{
    return pieri_col(Partition::row(m), j - 1, nu);
}

/// Generic ranks of the syzygy sheaves S_1, ..., S_nu splitting the
/// resolution of I_Y^m into short exact sequences
///   0 -> S_{j+1} -> L^j_m -> S_j -> 0,  S_1 = I_Y^m,  S_nu = L^nu_m.
inline std::vector<BigInt> split_sequence_terms(int nu, int m)
{
    if (nu < 2)
        throw PreconditionViolation("split_sequence_terms: nu must be at least 2");
    const auto ranks = be_complex(nu, m).ranks();
    std::vector<BigInt> s{BigInt(1)};
    for (int j = 1; j < nu; ++j)
        s.push_back(ranks[j - 1] - s.back());
    const BigInt top = weyl_dimension(Partition::row(m - 1), nu);
    if (s.back() != ranks.back() || s.back() != top)
        throw InternalError("split_sequence_terms: last syzygy rank " + s.back().str() +
                            " differs from rank of Sym^(m-1) (x) det = " + top.str());
    return s;
}

struct ChaseEntry {
    int j = 0;
    std::int64_t degree = 0;
    std::vector<Int> summand;
    Int multiplicity = 1;
    CohomologyResult bott;
    BigInt dimension = 0;
};

struct ChaseResult {
    // True certifies H^t(X, F (x) I_Y^m) = 0. False means "not certified".
    bool vanishes = true;
    int nu = 0;
    std::vector<ChaseEntry> ledger;
};

/// Weight of F_w (x) S_lambda(Q^dual) on Grs(e; d): Q^dual contributes
/// lambda on the second block.
inline LeviWeight grassmannian_schur_twist(const FlagShape& shape, std::span<const Int> line_values,
                                           const Partition& lambda)
{
    const int e = shape.d(1);
    std::vector<Int> w(shape.n());
    for (int i = 0; i < shape.n(); ++i)
        w[i] = line_values[i < e ? 0 : 1] + (i < e ? 0 : lambda[i - e]);
    return LeviWeight(shape, std::move(w));
}

/// Walks the chain H^t(F I_Y^m) c H^{t+1}(F S_2) c ... c H^{t+nu-1}(F L^nu_m)
/// for N = Q the universal quotient on Grs(e; d): every group
/// H^{t+j-1}(F (x) L^j_m(Q^dual)) is computed by Bott and recorded.
inline ChaseResult vanishing_chase(const FlagShape& shape, const SplitBundle& f, int m, int t)
{
    if (!shape.is_grassmannian())
        throw UnsupportedInput("vanishing_chase: expected a Grassmannian (one-step) flag, got " + shape.to_string());
    if (!(f.shape() == shape))
        throw InvalidArgument("vanishing_chase: F lives on a different shape");
    if (m < 1 || t < 0)
        throw InvalidArgument("vanishing_chase: need m >= 1 and t >= 0");
    ChaseResult out;
    out.nu = shape.n() - shape.d(1);
    for (int j = 1; j <= out.nu; ++j) {
        const auto hook = Partition::hook(m, j);
        for (const auto& s : f.summands()) {
            ChaseEntry entry;
            entry.j = j;
            entry.degree = t + j - 1;
            entry.summand = s.values;
            entry.multiplicity = s.multiplicity;
            entry.bott = cohomology(grassmannian_schur_twist(shape, s.values, hook));
            entry.dimension = BigInt(s.multiplicity) * entry.bott.dimension_in_degree(entry.degree);
            if (entry.dimension != 0)
                out.vanishes = false;
            out.ledger.push_back(std::move(entry));
        }
    }
    return out;
}

} // namespace flagcoh

#endif // FLAGCOH_RESOLUTIONS_HPP
