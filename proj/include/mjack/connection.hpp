#pragma once

#include <memory>
#include <vector>

#include "mjack/exact.hpp"
#include "mjack/exec.hpp"
#include "mjack/partitions.hpp"
#include "mjack/report.hpp"

namespace mjack {

/// Per-degree data for the θ-sum. With D = lcm_θ j_θ and w_θ = D / j_θ,
///   c^λ_{μ,ν} = z_λ α^{ℓ(λ)} Σ_θ a_{θλ} a_{θμ} w_θ a_{θν} / D,
/// where a_{θλ} = [p_λ] J_θ (a polynomial in α).
struct DegreeKernel {
    int n = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<UniPoly>> a;   // [θ][λ]
    std::vector<UniPoly> w;                // [θ]
    UniPoly lcm_norm;                      // D
    std::vector<UniPoly> prefactor;        // [λ]: z_λ α^{ℓ(λ)}
};

/// Memoized; built from the Jack store.
const DegreeKernel& degree_kernel(int n);

/// Σ_θ [p_λ]J_θ [p_μ]J_θ [p_ν]J_θ / j_θ; symmetric in all three arguments.
RatFunc c_normalized(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Certification of c^λ_{μ,ν} without throwing (for reports).
Certification certify_c(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^λ_{μ,ν}(b). Throws TheoremViolation if it fails to certify in ℤ[b].
IntPoly c_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All c^λ_{μ,ν} of one size, stored densely by partition indices.
class CoeffTable {
public:
    explicit CoeffTable(int n);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Partition>& parts() const { return all_partitions(n_); }

    const IntPoly& at(std::size_t l, std::size_t m, std::size_t v) const {
        return entries_[(l * dim_ + m) * dim_ + v];
    }
    IntPoly& at(std::size_t l, std::size_t m, std::size_t v) {
        return entries_[(l * dim_ + m) * dim_ + v];
    }
    const IntPoly& at(const Partition& lambda, const Partition& mu, const Partition& nu) const;

    friend bool operator==(const CoeffTable& a, const CoeffTable& b) = default;

private:
    int n_;
    std::size_t dim_;
    std::vector<IntPoly> entries_;
};

/// Whole-degree table; the serial kernel is the reference for the parallel one.
CoeffTable compute_coeff_table(int n, Exec exec = Exec::Parallel);
/// Memoized compute_coeff_table(n).
std::shared_ptr<const CoeffTable> coeff_table(int n);

/// mc^λ_{μ,l} for all λ, μ ⊢ n and 1 ≤ l ≤ n.
class MarginalTable {
public:
    explicit MarginalTable(const CoeffTable& c);

    int n() const noexcept { return n_; }
    const IntPoly& at(std::size_t l, std::size_t m, int len) const {
        return entries_[(l * dim_ + m) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(len - 1)];
    }
    const IntPoly& at(const Partition& lambda, const Partition& mu, int len) const;

private:
    int n_;
    std::size_t dim_;
    std::vector<IntPoly> entries_;
};

std::shared_ptr<const MarginalTable> marginal_table(int n);

/// mc^λ_{μ,l} = Σ_{ℓ(ν)=l} c^λ_{μ,ν}; requires 1 ≤ l ≤ n.
IntPoly marginal(const Partition& lambda, const Partition& mu, int l);

/// Smallest size at which the top coefficient tc^ρ_π is read off:
/// r + max(ℓ(ρ), ℓ(π)).
int top_coeff_min_size(const Partition& rho, const Partition& pi);

/// tc^ρ_π = mc^κ_{ν,l} with κ = ρ ⊕ 1^{n−r}, ν = π ∪ 1^{n−r}, l = n − ℓ(π).
/// Throws TheoremViolation if that marginal is not a constant.
BigInt top_coeff_via_marginal(const Partition& rho, const Partition& pi);
BigInt top_coeff_via_marginal(const Partition& rho, const Partition& pi, int n);

/// c^λ_{μ⁰,…,μᵏ} by recursion over ξ; `mus` holds k+1 ≥ 2 partitions.
IntPoly c_multi(const Partition& lambda, const std::vector<Partition>& mus);
/// The defining θ-sum with k+2 Jack factors, certified; independent of c_multi.
IntPoly c_multi_direct(const Partition& lambda, const std::vector<Partition>& mus);

/// Cumulant d^λ_{μ⁰,…,μᵏ}: Möbius sum over set partitions of the parts of λ.
IntPoly cumulant_d(const Partition& lambda, const std::vector<Partition>& mus);
IntPoly cumulant_d(const Partition& lambda, const Partition& mu, const Partition& nu);

/// The same cumulant read off log(1 + F) term by term, with rational weights
/// (−1)^{s−1}/s over ordered tuples of sub-triples. Not certified; callers compare.
UniPoly cumulant_d_log(const Partition& lambda, const Partition& mu, const Partition& nu);

struct HCoeff {
    UniPoly h;          // n d / (z_λ (1+b)^{ℓ(λ)−1}), in b
    IntPoly scaled;     // (z_λ/n) h = d / (1+b)^{ℓ(λ)−1}
    bool integral = false;
};

/// Throws TheoremViolation if the division by (1+b)^{ℓ(λ)−1} is inexact, or if
/// λ = [n] and h is not in ℤ[b].
HCoeff h_coeff(const Partition& lambda, const std::vector<Partition>& mus);
HCoeff h_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Σ_μ c^λ_{μ,ν} = (n!/z_ν)(1+b)^{n−ℓ(ν)}.
bool check_row_sum(const Partition& lambda, const Partition& nu);

/// Σ_κ c^λ_{μ,κ} c^κ_{ν,ρ} = Σ_θ c^λ_{θ,ρ} c^θ_{μ,ν} over all tuples of size n.
CheckResult check_multiplicativity(int n);
/// Σ_κ c^λ_{μ,κ} mc^κ_{ν,l} = Σ_θ mc^λ_{θ,l} c^θ_{μ,ν} over all (λ,μ,ν,l).
CheckResult check_marginal_multiplicativity(int n);

} // namespace mjack
