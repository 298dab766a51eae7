#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "mjack/exact.hpp"
#include "mjack/linalg.hpp"
#include "mjack/partitions.hpp"

namespace mjack {

enum class Basis { PowerSum, Monomial, Elementary };

/// A homogeneous symmetric function of fixed degree, expanded in one basis,
/// with coefficients in ℚ(α). Zero coefficients are never stored.
class PSExpr {
public:
    PSExpr(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    int degree() const noexcept { return degree_; }
    Basis basis() const noexcept { return basis_; }
    const std::map<Partition, RatFunc>& terms() const noexcept { return terms_; }

    RatFunc coeff(const Partition& p) const;
    void add(const Partition& p, const RatFunc& c);

    PSExpr& operator+=(const PSExpr& o);
    PSExpr& operator*=(const RatFunc& c);
    friend bool operator==(const PSExpr& a, const PSExpr& b) {
        return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int degree_;
    Basis basis_;
    std::map<Partition, RatFunc> terms_;
};

/// Product of two power-sum expansions (p_λ p_μ = p_{λ∪μ}).
PSExpr multiply_powersum(const PSExpr& a, const PSExpr& b);

/// ⟨f, g⟩_α with ⟨p_λ, p_μ⟩ = δ z_λ α^{ℓ(λ)}.
RatFunc inner_alpha(const PSExpr& f, const PSExpr& g);

/// Transition matrix of power sums in monomials: rows λ, columns μ, both in
/// all_partitions(n) order, p_λ = Σ_μ P(λ,μ) m_μ.
const IntMatrix& powersum_in_monomial(int n);
/// The inverse: m_μ = Σ_λ M(μ,λ) p_λ.
const QMatrix& monomial_in_powersum(int n);

PSExpr monomial_to_powersum(const Partition& mu);
PSExpr elementary_to_powersum(const Partition& lambda);

/// Partitions of r in the row order used for the elementary / f-basis:
/// λ listed so that the conjugates λ′ increase under total_leq.
std::vector<Partition> f_order(int r);

/// u_{λ,μ} with m_μ = Σ_λ u_{λ,μ} e_λ; rows λ in f_order(r), columns μ in
/// all_partitions(r) order. Upper unitriangular.
LabeledMatrix monomial_in_elementary(int r);

/// j_θ = ∏_{cells} (α a + l + 1)(α a + l + α).
RatFunc jack_norm(const Partition& theta);

/// Arm and leg lengths of cell (i, j) (0-based) of θ.
int arm_length(const Partition& theta, int i, int j);
int leg_length(const Partition& theta, int i, int j);

/// All J-normalized Jack polynomials of one degree, indexed like all_partitions(n).
struct JackDegree {
    int n = 0;
    std::vector<PSExpr> powersum;       // J_θ in power sums
    std::vector<std::vector<RatFunc>> monomial; // [θ][μ] coefficient of m_μ
};

/// Gram–Schmidt over the monomial basis in total_leq order; no memo.
JackDegree compute_jack_degree(int n);

/// Process-wide memo of Jack expansions, optionally backed by an on-disk
/// cache. Concurrent readers; writers are serialized and idempotent.
class JackStore {
public:
    static JackStore& instance();

    /// Coefficients of J_θ for every θ ⊢ n (computes or loads on first use).
    std::shared_ptr<const JackDegree> degree(int n);
    void set_cache_dir(std::optional<std::filesystem::path> dir);
    const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
    void clear_memory();

private:
    JackStore();
    mutable std::shared_mutex mutex_;
    std::map<int, std::shared_ptr<const JackDegree>> degrees_;
    std::optional<std::filesystem::path> cache_dir_;
};

/// J_θ in the power-sum basis.
PSExpr jack(const Partition& theta);

} // namespace mjack
