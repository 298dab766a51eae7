#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mjack/connection.hpp"
#include "mjack/exec.hpp"
#include "mjack/linalg.hpp"
#include "mjack/partitions.hpp"
#include "mjack/report.hpp"

namespace mjack {

/// Supplies mc^λ_{μ,l} for λ, μ ⊢ n and 1 ≤ l ≤ n. Lookups must be thread-safe.
struct MarginalSource {
    int n = 0;
    std::function<IntPoly(const Partition&, const Partition&, int)> get;
};

/// Marginals derived from the directly computed coefficient table.
MarginalSource marginals_from_connection(int n);
/// Parses { "n", "entries": [ {"lambda","mu","l","poly_b"} ] }, poly_b being
/// decimal coefficient strings from degree 0 upward. Every (λ, μ, l) must be
/// present exactly once; throws std::runtime_error otherwise.
MarginalSource marginals_from_json(const std::string& text);
MarginalSource marginals_from_file(const std::filesystem::path& path);

/// The pairs (π ∪ 1^{n−r}, n − ℓ(π)) for π ⊢ r, π increasing. Requires 1 ≤ r < n.
std::vector<std::pair<Partition, int>> condition_c2_pairs(int n, int r);

/// A coefficient table in which every c^λ_{μ,κ} with rk(κ) < complete_below
/// is known; the other entries are placeholders.
struct PartialCoeffTable {
    CoeffTable table;
    int complete_below = 0;

    explicit PartialCoeffTable(int n) : table(n) {}
};

/// The rank-0 base case c^λ_{μ,1^n} = δ_{λ,μ}, giving complete_below = 1.
PartialCoeffTable base_case(int n);

/// P = Σ_θ mc^λ_{θ,l} c^θ_{μ,ν} − Σ_{rk(κ)<r} c^λ_{μ,κ} mc^κ_{ν,l} for stratum r.
/// Throws std::logic_error if ranks below r are missing.
IntPoly rhs_value(const Partition& lambda, const Partition& mu, const Partition& nu, int l, int r,
                  const PartialCoeffTable& known, const MarginalSource& marginals);

/// A_{π,ρ} = mc^{ρ⊕1^{n−r}}_{π∪1^{n−r}, n−ℓ(π)} for ρ with ℓ(ρ) ≤ n−r, laid out like Q(r)
/// (decreasing labels) with the other columns erased.
LabeledMatrix assemble_rank_matrix(int n, int r, const MarginalSource& marginals);

using RankSolution = std::map<std::tuple<Partition, Partition, Partition>, IntPoly>;

/// Solves Q(r) X = Y for every (λ, μ) and returns c^λ_{μ,κ} for rk(κ) = r.
/// Throws TheoremViolation if the assembled matrix differs from Q(r), a marginal
/// of higher rank is non-zero, or a padded unknown is non-zero.
RankSolution solve_rank(int n, int r, const PartialCoeffTable& known, const MarginalSource& marginals,
                        Exec exec = Exec::Parallel);

/// Rebuilds the whole table from marginals alone.
CoeffTable reconstruct_all(int n, const MarginalSource& marginals, Exec exec = Exec::Parallel);

/// reconstruct_all from the direct marginals against coeff_table(n), plus the
/// structural assertions made along the way.
CheckResult check_reconstruct(int n);

} // namespace mjack
