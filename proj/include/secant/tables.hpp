#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secant/oracle.hpp"
#include "secant/partition.hpp"
#include "secant/report_io.hpp"

// Regenerated fixture tables and the figure grids. Every table renders to
// CSV (header row first) or JSON Lines.

namespace secant {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;  // scalars only

    std::string to_csv() const;
    std::string to_json_lines() const;
};

/// Balanced three- and four-factor partitions one step below d_1 = s, with the
/// partition obtained by lowering d_1 and its intersection dimension.
struct BelowHyperplaneRow {
    Partition lambda;
    std::int64_t exp_dim_IZ = 0;
    Partition lowered;
    std::int64_t dim_IZ_lowered = 0;
    std::optional<std::int64_t> measured_dim_IZ;
    std::optional<std::int64_t> measured_dim_IZ_lowered;
};
std::vector<BelowHyperplaneRow> below_hyperplane_rows(const OracleConfig* verify_with = nullptr);

/// [a, a, 1] with claimed dimension a + 3 and [a + 1, a, 1] with a + 4.
struct UnitTailFamilyRow {
    Partition lambda;
    std::int64_t a = 0;
    std::string family;  // "a,a,1" or "a+1,a,1"
    std::int64_t exp_dim_IZ = 0;
    std::int64_t dim_IZ = 0;
    std::int64_t claimed = 0;
    std::optional<std::int64_t> measured_dim_IZ;
};
std::vector<UnitTailFamilyRow> unit_tail_family_rows(std::int64_t a_max, const OracleConfig* verify_with = nullptr);

/// Every two-factor partition of degree at most d_max, with the closed form
/// ((d_1 - d_2)^2 + 3 (d_1 + d_2) + 2) / 2.
struct TwoFactorRow {
    Partition lambda;
    std::int64_t closed_form = 0;
    std::int64_t exp_dim_IZ = 0;
    std::int64_t dim_IZ = 0;
    std::optional<std::int64_t> measured_dim_IZ;
};
std::vector<TwoFactorRow> two_factor_rows(std::int64_t d_max, const OracleConfig* verify_with = nullptr);

Table to_table(const std::vector<BelowHyperplaneRow>& rows);
Table to_table(const std::vector<UnitTailFamilyRow>& rows);
Table to_table(const std::vector<TwoFactorRow>& rows);

/// Canonical table name for a user-supplied one; the numbered aliases
/// "lemma45", "lemma46" and "lemma47" are accepted too.
std::optional<std::string> canonical_table_name(std::string_view name);

/// Tails (d_2, ..., d_r) with every entry at most `bound`, one row each, with
/// s, 2p - 3s, the smallest unbalanced d_1 (= s), whether lambda = [s, tail]
/// is defective, and its case label. Throws Error(InvalidArgument) unless r is 3, 4 or 5.
Table figure_grid(int r, std::int64_t bound);

}  // namespace secant
