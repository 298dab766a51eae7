#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mjack {

/// An integer partition, stored as weakly decreasing positive parts.
/// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Sorts the input descending and drops zero parts. Negative parts throw.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// |λ| − ℓ(λ)
    int rank() const noexcept { return size_ - length(); }
    int multiplicity(int part) const noexcept;

    /// Part-wise ordering on the stored vectors; only used for container keys.
    auto operator<=>(const Partition& other) const = default;
    bool operator==(const Partition& other) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// 1^k
Partition ones(int k);

Partition conjugate(const Partition& p);
mpz_class z_factor(const Partition& p);
Partition union_of(const Partition& a, const Partition& b);
Partition oplus(const Partition& a, const Partition& b);
Partition minus_one(const Partition& p);
/// λ with one part equal to `part` removed; throws if absent.
Partition remove_part(const Partition& p, int part);

bool dominated_by(const Partition& mu, const Partition& lambda);

/// Total order refining dominance: longer partitions are smaller, ties broken
/// lexicographically. Requires equal sizes.
bool total_leq(const Partition& mu, const Partition& lambda);
/// μ ≤′ λ iff λ′ ≤ μ′.
bool dual_leq(const Partition& mu, const Partition& lambda);

/// Comparator form of total_leq (strict) for sorting within one size class.
struct TotalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return a != b && total_leq(a, b);
    }
};

/// All partitions of n, ascending under total_leq. Memoized.
const std::vector<Partition>& all_partitions(int n);
/// Index of p inside all_partitions(|p|).
std::size_t partition_index(const Partition& p);
std::size_t partition_count(int n);

/// Textual codec: "3,1,1"; the empty partition is "-".
std::string encode(const Partition& p);
Partition parse_partition(std::string_view text);

/// A set partition of {0..n-1}; blocks listed by smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    std::size_t block_count() const noexcept { return blocks.size(); }
};

/// Every set partition of {0..n-1}, in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int n);

mpz_class factorial(int n);

} // namespace mjack

template <>
struct std::hash<mjack::Partition> {
    std::size_t operator()(const mjack::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};
