#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "mjack/exact.hpp"
#include "mjack/exec.hpp"
#include "mjack/partitions.hpp"

namespace mjack {

/// Image sequence of a permutation of {0..n−1}.
using Perm = std::vector<int>;

/// (a ∘ b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
/// Cycle type minus one in every part.
Partition reduced_type(const Perm& p);
/// A permutation of n points whose reduced type is κ: consecutive cycles of
/// lengths κ_i + 1, then fixed points. Requires |κ| + ℓ(κ) ≤ n.
Perm representative(const Partition& kappa, int n);

/// Default size limit for explicit group-algebra computations.
inline constexpr int kGroupGuard = 8;

/// All of S_n ranked in lexicographic order, with the lookups needed for
/// fast right multiplication by transpositions.
class SymmetricGroup {
public:
    static const SymmetricGroup& get(int n);

    int n() const noexcept { return n_; }
    std::size_t order() const noexcept { return perms_.size(); }
    const Perm& perm(std::size_t rank) const { return perms_[rank]; }
    std::size_t rank(const Perm& p) const;
    const Partition& type(std::size_t rank) const { return types_[rank]; }
    /// rank(perm(r) ∘ (i j)) for i < j.
    std::size_t times_transposition(std::size_t r, int i, int j) const {
        return transposition_table_[transposition_index(i, j) * perms_.size() + r];
    }

private:
    explicit SymmetricGroup(int n);
    std::size_t transposition_index(int i, int j) const {
        return static_cast<std::size_t>(j * (j - 1) / 2 + i);
    }

    int n_;
    std::vector<Perm> perms_;
    std::vector<Partition> types_;
    std::vector<std::size_t> transposition_table_;
};

/// Element of ℤS_n stored densely by permutation rank. Coefficients are
/// 64-bit; arithmetic throws std::overflow_error rather than wrapping.
struct GroupAlgebraElem {
    int n = 0;
    std::vector<std::int64_t> coeff;

    static GroupAlgebraElem zero(int n);
    static GroupAlgebraElem identity(int n);

    GroupAlgebraElem& operator+=(const GroupAlgebraElem& o);
    friend bool operator==(const GroupAlgebraElem&, const GroupAlgebraElem&) = default;
};

GroupAlgebraElem operator*(const GroupAlgebraElem& a, const GroupAlgebraElem& b);
/// a · 𝒥_i with 𝒥_i = Σ_{j<i} (j i), i counted from 1 (𝒥_1 = 0).
GroupAlgebraElem times_jucys_murphy(const GroupAlgebraElem& a, int i);

/// Σ coeff · C_λ(n), keyed by reduced cyclic type.
struct CentralElem {
    int n = 0;
    std::map<Partition, BigInt> coeffs;

    friend bool operator==(const CentralElem&, const CentralElem&) = default;
};

/// C_λ(n); the zero element when |λ| + ℓ(λ) > n.
CentralElem class_sum(const Partition& lambda, int n);
GroupAlgebraElem expand(const CentralElem& c);
/// Reads one coefficient per conjugacy class; throws TheoremViolation if the
/// element is not constant on classes.
CentralElem to_central(const GroupAlgebraElem& g);

/// e_l(𝒥_2, …, 𝒥_n).
GroupAlgebraElem jm_elementary(int n, int l, int guard = kGroupGuard);
/// m_μ(𝒥_2, …, 𝒥_n).
GroupAlgebraElem jm_monomial(int n, const Partition& mu, int guard = kGroupGuard);

/// ρ^κ_{λ,μ}(n): count σ of reduced type λ with σ⁻¹π of reduced type μ for a
/// fixed π of reduced type κ, by enumerating S_n.
BigInt rho(const Partition& kappa, const Partition& lambda, const Partition& mu, int n,
           int guard = kGroupGuard);
/// Every ρ^κ_{λ,μ}(n) for fixed κ, keyed by (λ, μ).
std::map<std::pair<Partition, Partition>, BigInt> rho_row(const Partition& kappa, int n,
                                                          int guard = kGroupGuard);

} // namespace mjack
