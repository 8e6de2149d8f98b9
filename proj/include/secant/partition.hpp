#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace secant {

/// Combinatorial quantities attached to a partition [d_1, ..., d_r].
/// `cofactor_sum[e]` is the sum of all parts other than part e, and
/// `cofactor_pairs[e]` is the sum of d_i d_j over pairs avoiding e.
/// Index 0 corresponds to the largest part.
struct DerivedQuantities {
    std::int64_t total_degree = 0;      // d
    std::int64_t pair_products = 0;     // D, number of points cut out by I_F
    std::int64_t ambient_dim = 0;       // N = C(d+2, 2) - 1
    std::vector<std::int64_t> cofactor_sum;
    std::vector<std::int64_t> cofactor_pairs;
    std::int64_t tail_sum = 0;          // s = cofactor_sum[0]
    std::int64_t tail_pairs = 0;        // p = cofactor_pairs[0]

    friend bool operator==(const DerivedQuantities&, const DerivedQuantities&) = default;
};

/// A partition with at least two parts, stored in non-increasing order.
/// Immutable; the derived quantities are computed once at construction.
class Partition {
public:
    /// Sorts `raw` into canonical order. Throws Error with EmptyInput,
    /// NonPositivePart, TooFewParts or Overflow.
    static Partition from_parts(std::span<const std::int64_t> raw);
    static Partition from_parts(std::initializer_list<std::int64_t> raw)
    {
        return from_parts(std::span<const std::int64_t>(raw.begin(), raw.size()));
    }

    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }
    std::int64_t largest() const noexcept { return parts_.front(); }

    const DerivedQuantities& derived() const noexcept { return derived_; }

    /// "[9,7,2]"
    std::string to_string() const;
    /// "9,7,2", the CLI input syntax
    std::string to_csv_list() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
    {
        return a.parts_ <=> b.parts_;
    }

private:
    explicit Partition(std::vector<std::int64_t> sorted_parts);

    std::vector<std::int64_t> parts_;
    DerivedQuantities derived_;
};

inline const DerivedQuantities& derived(const Partition& lambda) noexcept { return lambda.derived(); }

/// Every partition with r_min <= r <= r_max parts and total degree at most d_max.
/// Ordered by total degree, then part count, then lexicographically on the
/// (non-increasing) parts. Throws Error(InvalidRange).
std::vector<Partition> enumerate_partitions(std::int64_t d_max, std::int64_t r_min, std::int64_t r_max);

/// Every partition with r_min <= r <= r_max parts, each part at most max_part.
/// Same ordering as enumerate_partitions. Throws Error(InvalidRange).
std::vector<Partition> enumerate_bounded_parts(std::int64_t max_part, std::int64_t r_min, std::int64_t r_max);

/// Replaces part `index` (0-based) by part - 1 and re-sorts.
/// Throws Error(InvalidArgument) when that part is 1.
Partition lower_part(const Partition& lambda, std::size_t index);

}  // namespace secant
