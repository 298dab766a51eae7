#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mjack/connection.hpp"
#include "mjack/exec.hpp"
#include "mjack/partitions.hpp"
#include "mjack/report.hpp"

namespace mjack {

/// Perfect matching on the 2n points 0..n−1 (plain) and n..2n−1 (hatted,
/// point i's hat is n + i). `partner` is a fixed-point-free involution.
struct Matching {
    int n = 0;
    std::vector<int> partner;

    bool is_bipartite() const;
    bool valid() const;
    friend bool operator==(const Matching&, const Matching&) = default;
};

/// Default enumeration guard for exhaustive counts.
inline constexpr int kMatchingGuard = 6;

/// δ₁ = {i, î}; δ₂ joins i to the hat of its cyclic successor inside
/// consecutive blocks of sizes λ₁, λ₂, ….
std::pair<Matching, Matching> canonical_deltas(const Partition& lambda);

/// Half-sizes of the connected components of δa ∪ δb, sorted.
Partition lambda_of(const Matching& a, const Matching& b);

/// Calls `visit` on every perfect matching of 2n points (pairing order), or on
/// every bipartite one.
void for_each_matching(int n, bool bipartite_only, const std::function<void(const Matching&)>& visit);

/// a^λ_{μ,ν} (or ã when `bipartite_only`) for every triple at size n.
class CountTable {
public:
    CountTable(int n, bool bipartite_only);

    int n() const noexcept { return n_; }
    bool bipartite_only() const noexcept { return bipartite_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t at(std::size_t l, std::size_t m, std::size_t v) const {
        return counts_[(l * dim_ + m) * dim_ + v];
    }
    std::uint64_t& at(std::size_t l, std::size_t m, std::size_t v) {
        return counts_[(l * dim_ + m) * dim_ + v];
    }
    BigInt at(const Partition& lambda, const Partition& mu, const Partition& nu) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    int n_;
    bool bipartite_;
    std::size_t dim_;
    std::vector<std::uint64_t> counts_;
};

/// Exhaustive counts against the canonical pair of each λ. Throws
/// GuardExceeded when n > guard.
CountTable count_table(int n, bool bipartite_only, Exec exec = Exec::Parallel, int guard = kMatchingGuard);

/// Counts for one triple against an explicit pair (δ₁, δ₂).
BigInt count_a(const Matching& d1, const Matching& d2, const Partition& mu, const Partition& nu,
               bool bipartite_only);
BigInt count_a(const Partition& lambda, const Partition& mu, const Partition& nu, bool bipartite_only,
               int guard = kMatchingGuard);

/// c(1) = a and c(0) = ã for every triple, plus the marginal versions.
CheckResult verify_b01(int n, int guard = kMatchingGuard);
/// Both combinatorial multiplicativity identities at size n.
CheckResult verify_comb_multiplicativity(int n, int guard = kMatchingGuard);

} // namespace mjack
