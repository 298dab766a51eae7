#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mjack/exact.hpp"
#include "mjack/exec.hpp"
#include "mjack/linalg.hpp"
#include "mjack/partitions.hpp"
#include "mjack/report.hpp"

namespace mjack {

/// Top-degree structure constants for one κ, keyed by (λ, μ) with |λ|+|μ| = |κ|.
using RhoTopRow = std::map<std::pair<Partition, Partition>, BigInt>;

/// Largest rank handled by rho_top; the largest cycle enumerated has r+1 points.
inline constexpr int kFhGuard = 8;

/// Counts geodesic factorizations of a fixed permutation π of reduced type κ.
/// Every geodesic factor preserves the cycles of π, so the count factors over
/// those cycles; each cycle length is enumerated once and memoized.
const RhoTopRow& rho_top_row(const Partition& kappa);
/// ρ^κ_{λ,μ} for |κ| = |λ| + |μ|; throws std::invalid_argument otherwise.
BigInt rho_top(const Partition& kappa, const Partition& lambda, const Partition& mu);
/// Rows for every κ ⊢ r, computed without the memo (reference and OpenMP kernels).
std::vector<RhoTopRow> rho_top_table(int r, Exec exec = Exec::Parallel);

/// Homogeneous element Σ coeff·𝔠_λ of degree r of the graded algebra.
struct GradedElem {
    int degree = 0;
    std::map<Partition, BigInt> coeffs; // no zero entries

    static GradedElem unit() { return GradedElem{0, {{Partition{}, BigInt(1)}}}; }
    static GradedElem basis(const Partition& lambda) { return GradedElem{lambda.size(), {{lambda, BigInt(1)}}}; }

    BigInt coefficient(const Partition& lambda) const;
    GradedElem& add(const GradedElem& o, const BigInt& scale = 1);
    friend bool operator==(const GradedElem&, const GradedElem&) = default;
};

GradedElem graded_multiply(const GradedElem& a, const GradedElem& b);

/// 𝔣_r = Σ_{λ⊢r} 𝔠_λ.
GradedElem f_elem(int r);
/// 𝔣_λ = ∏ 𝔣_{λ_i}.
GradedElem ff(const Partition& lambda);
/// 𝔪_μ = Σ_λ u_{λ,μ} 𝔣_λ.
GradedElem mf(const Partition& mu);
/// 𝔤_π = 𝔠_{π−1} 𝔣_{ℓ(π)}.
GradedElem gf(const Partition& pi);

/// [𝔠_ρ] 𝔤_π.
BigInt top_coeff_via_fh(const Partition& rho, const Partition& pi);

/// Coefficients of (𝔣_λ) in (𝔠_ρ): rows ρ increasing, columns λ in f_order.
LabeledMatrix matrix_F(int r);
LabeledMatrix matrix_U(int r);
/// Rows μ increasing, columns ρ increasing: c_ρ = Σ_μ L_{μ,ρ} 𝔪_μ.
LabeledMatrix matrix_L(int r);
/// Rows λ in f_order, columns ρ increasing: c_ρ = Σ_λ M_{λ,ρ} 𝔣_λ.
LabeledMatrix matrix_M(int r);
/// Rows λ with λ₁ ≤ i, columns ρ with ℓ(ρ) ≤ i.
LabeledMatrix matrix_M_sub(int r, int i);
/// Rows λ in f_order, columns π increasing: 𝔤_π = Σ_λ N_{λ,π} 𝔣_λ.
LabeledMatrix matrix_N(int r);
/// Q_{π,ρ} = tc^ρ_π with rows and columns in decreasing order.
LabeledMatrix matrix_Q(int r);

/// e_l(𝒥_2..𝒥_n) equals Σ_{λ⊢l} C_λ(n).
bool jm_elementary_check(int n, int l);
/// Top-degree part of m_μ(𝒥_2..𝒥_n) equals 𝔪_μ with classes absent from S_n dropped.
bool jm_monomial_check(int n, const Partition& mu);

/// Triangularity, M = UL, determinants and the block formula for N, at rank r.
CheckResult check_fh_matrices(int r);
/// top_coeff_via_fh against top_coeff_via_marginal for all ρ, π ⊢ r.
CheckResult check_top_coeff_paths(int r);
/// ρ^κ_{λ,μ}(n) against c(0) of the padded partitions, all valid triples at n.
CheckResult check_bridge(int n);
/// rho_top against brute-force ρ at the two smallest admissible degrees, |κ| ≤ r.
CheckResult check_stabilization(int r);
CheckResult check_jm_elementary(int n);
/// All μ with |μ| ≤ min(max_size, n−1).
CheckResult check_jm_monomial(int n, int max_size = 4);

} // namespace mjack
