#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mjack/report.hpp"

namespace mjack {

enum class Suite { Integrality, Multiplicativity, Matchings, Fh, Reconstruct, All };

Suite parse_suite(const std::string& s);
std::string suite_name(Suite s);

/// c^λ_{μ,ν} certifies in ℤ[b] for every triple at size n.
CheckResult check_c_integrality(int n);
/// Marginals have non-negative integer coefficients and
/// deg mc^λ_{μ,l} ≤ n − l + ℓ(λ) − ℓ(μ).
CheckResult check_marginal_theorem(int n);
/// The log-expansion cumulant certifies in ℤ[b] and equals the set-partition
/// form; (z_λ/n) h is integral, and h is integral for λ = [n].
CheckResult check_cumulants(int n);
/// Σ_μ c^λ_{μ,ν} = (n!/z_ν)(1+b)^{n−ℓ(ν)} for all λ, ν.
CheckResult check_row_sums(int n);

struct VerifyReport {
    std::string suite;
    int n = 0;
    int r = 0;
    std::vector<CheckResult> checks;
    /// Empirical facts that are reported but never asserted.
    std::vector<std::pair<std::string, std::string>> observations;

    bool passed() const;
    /// Deterministic JSON: no timings or environment data.
    std::string to_json() const;
};

/// Observed sign pattern and maximal degree of c at size n.
std::vector<std::pair<std::string, std::string>> observe_coefficients(int n);

/// Runs every check of the suite for all sizes 1..n (ranks 1..r for the
/// graded-algebra suite).
VerifyReport run_suite(Suite suite, int n, int r);

} // namespace mjack
