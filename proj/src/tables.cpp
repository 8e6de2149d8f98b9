#include "secant/tables.hpp"

#include "secant/error.hpp"
#include "secant/formulas.hpp"

namespace secant {

namespace {

std::string scalar_text(const Json& v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

Json optional_json(const std::optional<std::int64_t>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

bool any_measured(const auto& rows)
{
    for (const auto& r : rows) {
        if (r.measured_dim_IZ)
            return true;
    }
    return false;
}

void tails(int remaining, std::int64_t cap, std::vector<std::int64_t>& prefix, std::vector<std::vector<std::int64_t>>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::int64_t v = 1; v <= cap; ++v) {
        prefix.push_back(v);
        tails(remaining - 1, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::string Table::to_csv() const
{
    std::string out = csv_line(columns) + "\n";
    for (const auto& row : rows) {
        std::vector<std::string> fields;
        for (const auto& v : row)
            fields.push_back(scalar_text(v));
        out += csv_line(fields) + "\n";
    }
    return out;
}

std::string Table::to_json_lines() const
{
    std::string out;
    for (const auto& row : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < columns.size(); ++i)
            obj[columns[i]] = row[i];
        out += obj.dump() + "\n";
    }
    return out;
}

std::vector<BelowHyperplaneRow> below_hyperplane_rows(const OracleConfig* verify_with)
{
    static const std::initializer_list<std::int64_t> cases[] = {
        {3, 2, 2}, {4, 3, 2}, {5, 4, 2}, {6, 5, 2}, {2, 1, 1, 1}, {3, 2, 1, 1}, {4, 3, 1, 1},
    };
    std::vector<BelowHyperplaneRow> out;
    for (const auto& parts : cases) {
        const Partition lambda = Partition::from_parts(parts);
        const Partition lowered = lower_part(lambda, 0);
        BelowHyperplaneRow row{
            .lambda = lambda,
            .exp_dim_IZ = expected_dim_tangent_intersection(lambda),
            .lowered = lowered,
            .dim_IZ_lowered = dim_tangent_intersection(lowered),
        };
        if (verify_with) {
            row.measured_dim_IZ = measure_intersection_dim(lambda, *verify_with);
            row.measured_dim_IZ_lowered = measure_intersection_dim(lowered, *verify_with);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<UnitTailFamilyRow> unit_tail_family_rows(std::int64_t a_max, const OracleConfig* verify_with)
{
    std::vector<UnitTailFamilyRow> out;
    for (std::int64_t a = 1; a <= a_max; ++a) {
        for (int shifted = 0; shifted < 2; ++shifted) {
            const Partition lambda = Partition::from_parts({a + shifted, a, 1});
            UnitTailFamilyRow row{
                .lambda = lambda,
                .a = a,
                .family = shifted ? "a+1,a,1" : "a,a,1",
                .exp_dim_IZ = expected_dim_tangent_intersection(lambda),
                .dim_IZ = dim_tangent_intersection(lambda),
                .claimed = a + 3 + shifted,
            };
            if (verify_with)
                row.measured_dim_IZ = measure_intersection_dim(lambda, *verify_with);
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::vector<TwoFactorRow> two_factor_rows(std::int64_t d_max, const OracleConfig* verify_with)
{
    std::vector<TwoFactorRow> out;
    for (const auto& lambda : enumerate_partitions(d_max, 2, 2)) {
        const std::int64_t gap = lambda[0] - lambda[1];
        TwoFactorRow row{
            .lambda = lambda,
            .closed_form = (gap * gap + 3 * (lambda[0] + lambda[1]) + 2) / 2,
            .exp_dim_IZ = expected_dim_tangent_intersection(lambda),
            .dim_IZ = dim_tangent_intersection(lambda),
        };
        if (verify_with)
            row.measured_dim_IZ = measure_intersection_dim(lambda, *verify_with);
        out.push_back(std::move(row));
    }
    return out;
}

Table to_table(const std::vector<BelowHyperplaneRow>& rows)
{
    Table t{.columns = {"case", "exp_dim_IZ", "lambda_prime", "dim_IZ_prime"}};
    const bool measured = any_measured(rows);
    if (measured) {
        t.columns.push_back("measured_dim_IZ");
        t.columns.push_back("measured_dim_IZ_prime");
    }
    for (const auto& r : rows) {
        std::vector<Json> row{r.lambda.to_csv_list(), r.exp_dim_IZ, r.lowered.to_csv_list(), r.dim_IZ_lowered};
        if (measured) {
            row.push_back(optional_json(r.measured_dim_IZ));
            row.push_back(optional_json(r.measured_dim_IZ_lowered));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table to_table(const std::vector<UnitTailFamilyRow>& rows)
{
    Table t{.columns = {"lambda", "family", "a", "exp_dim_IZ", "dim_IZ", "claimed"}};
    const bool measured = any_measured(rows);
    if (measured)
        t.columns.push_back("measured_dim_IZ");
    for (const auto& r : rows) {
        std::vector<Json> row{r.lambda.to_csv_list(), r.family, r.a, r.exp_dim_IZ, r.dim_IZ, r.claimed};
        if (measured)
            row.push_back(optional_json(r.measured_dim_IZ));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table to_table(const std::vector<TwoFactorRow>& rows)
{
    Table t{.columns = {"lambda", "closed_form", "exp_dim_IZ", "dim_IZ"}};
    const bool measured = any_measured(rows);
    if (measured)
        t.columns.push_back("measured_dim_IZ");
    for (const auto& r : rows) {
        std::vector<Json> row{r.lambda.to_csv_list(), r.closed_form, r.exp_dim_IZ, r.dim_IZ};
        if (measured)
            row.push_back(optional_json(r.measured_dim_IZ));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::optional<std::string> canonical_table_name(std::string_view name)
{
    if (name == "unit-tail-family" || name == "lemma45")
        return "unit-tail-family";
    if (name == "below-hyperplane" || name == "lemma46")
        return "below-hyperplane";
    if (name == "two-factor" || name == "lemma47")
        return "two-factor";
    return std::nullopt;
}

Table figure_grid(int r, std::int64_t bound)
{
    if (r < 3 || r > 5)
        throw Error(ErrorCode::InvalidArgument, "figure data exists for r = 3, 4, 5 only");
    if (bound < 1)
        throw Error(ErrorCode::InvalidRange, "grid bound must be positive");

    Table t;
    for (int i = 2; i <= r; ++i)
        t.columns.push_back("d" + std::to_string(i));
    for (const char* c : {"s", "two_p_minus_three_s", "d1_min", "defective_above_hyperplane", "case_label"})
        t.columns.emplace_back(c);

    std::vector<std::vector<std::int64_t>> all;
    std::vector<std::int64_t> prefix;
    tails(r - 1, bound, prefix, all);

    for (const auto& tail : all) {
        std::int64_t s = 0;
        for (auto v : tail)
            s += v;
        std::vector<std::int64_t> parts{s};
        parts.insert(parts.end(), tail.begin(), tail.end());
        const Partition lambda = Partition::from_parts(parts);

        std::vector<Json> row(tail.begin(), tail.end());
        row.emplace_back(s);
        row.emplace_back(excess(lambda));
        row.emplace_back(s);
        row.emplace_back(is_defective(lambda));
        row.emplace_back(std::string(to_string(classify_case(lambda))));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace secant
