#include "secant/formulas.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "secant/checked.hpp"
#include "secant/error.hpp"

namespace secant {

namespace {

constexpr std::pair<CaseLabel, std::string_view> kLabelNames[] = {
    {CaseLabel::ThreeFactorsTwoTailLong, "r3_d3eq2_d2ge7"},
    {CaseLabel::ThreeFactorsThreeTailLong, "r3_d3eq3_d2ge4"},
    {CaseLabel::ThreeFactorsWideTail, "r3_d3ge4"},
    {CaseLabel::FourFactorsWideTail, "r4_d3ge2"},
    {CaseLabel::FourFactorsLongSecond, "r4_d3eq1_d2ge5"},
    {CaseLabel::FiveFactorsWideTail, "r5_d2ge2"},
    {CaseLabel::SixOrMoreFactors, "r_ge6"},
    {CaseLabel::TwoFactors, "r2"},
    {CaseLabel::ThreeFactorsUnitTail, "r3_tail_a1"},
    {CaseLabel::ThreeFactorsPair22, "r3_pair_22"},
    {CaseLabel::ThreeFactorsPair32, "r3_pair_32"},
    {CaseLabel::ThreeFactorsPair42, "r3_pair_42"},
    {CaseLabel::ThreeFactorsPair52, "r3_pair_52"},
    {CaseLabel::ThreeFactorsPair62, "r3_pair_62"},
    {CaseLabel::ThreeFactorsPair33, "r3_pair_33"},
    {CaseLabel::FourFactorsTail111, "r4_tail_111"},
    {CaseLabel::FourFactorsTail211, "r4_tail_211"},
    {CaseLabel::FourFactorsTail311, "r4_tail_311"},
    {CaseLabel::FourFactorsTail411, "r4_tail_411"},
    {CaseLabel::FiveFactorsAllOnesTail, "r5_all_ones_tail"},
};

std::int64_t line_count(const Partition& lambda)
{
    return choose2(checked_add(lambda.derived().total_degree, 2));
}

// C(d+2, 2) - 2D
std::int64_t independent_excess(const Partition& lambda)
{
    return checked_sub(line_count(lambda), checked_mul(2, lambda.derived().pair_products));
}

}  // namespace

std::string_view to_string(CaseLabel label) noexcept
{
    for (const auto& [l, name] : kLabelNames) {
        if (l == label)
            return name;
    }
    return "unknown";
}

std::optional<CaseLabel> case_label_from_string(std::string_view name) noexcept
{
    for (const auto& [l, n] : kLabelNames) {
        if (n == name)
            return l;
    }
    return std::nullopt;
}

bool has_positive_excess(CaseLabel label) noexcept
{
    switch (label) {
    case CaseLabel::ThreeFactorsTwoTailLong:
    case CaseLabel::ThreeFactorsThreeTailLong:
    case CaseLabel::ThreeFactorsWideTail:
    case CaseLabel::FourFactorsWideTail:
    case CaseLabel::FourFactorsLongSecond:
    case CaseLabel::FiveFactorsWideTail:
    case CaseLabel::SixOrMoreFactors:
        return true;
    default:
        return false;
    }
}

std::int64_t dim_variety(const Partition& lambda, int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "projective dimension n must be at least 1");
    std::int64_t total = 0;
    for (auto di : lambda.parts())
        total = checked_add(total, binomial(checked_add(di, n), n));
    return checked_sub(total, static_cast<std::int64_t>(lambda.size()));
}

std::int64_t expected_dim_secant(const Partition& lambda)
{
    const std::int64_t twice = checked_add(checked_mul(2, dim_variety(lambda)), 1);
    return std::min(lambda.derived().ambient_dim, twice);
}

std::int64_t excess(const Partition& lambda)
{
    const auto& q = lambda.derived();
    return checked_sub(checked_mul(2, q.tail_pairs), checked_mul(3, q.tail_sum));
}

std::int64_t hilbert_function_stable(const Partition& lambda, std::int64_t /*j*/)
{
    return lambda.derived().pair_products;
}

std::int64_t hilbert_function_cofactor_count(const Partition& lambda, std::int64_t j)
{
    const std::int64_t d = lambda.derived().total_degree;
    std::int64_t value = choose2(checked_add(j, 2));
    for (auto di : lambda.parts()) {
        const std::int64_t shift = std::max<std::int64_t>(j - d + di, -1);
        value = checked_sub(value, choose2(shift + 2));
    }
    return value;
}

std::int64_t hilbert_function(const Partition& lambda, std::int64_t j)
{
    if (j < 0)
        throw Error(ErrorCode::NegativeDegree, "Hilbert function degree must be non-negative");
    const std::int64_t d = lambda.derived().total_degree;
    if (j >= d)
        return hilbert_function_stable(lambda, j);
    const std::int64_t value = hilbert_function_cofactor_count(lambda, j);
    assert(j < d - 2 || value == hilbert_function_stable(lambda, j));
    return value;
}

bool is_defective(const Partition& lambda)
{
    return lambda.largest() >= lambda.derived().tail_sum && excess(lambda) > 0;
}

std::int64_t defect_branch_form(const Partition& lambda)
{
    if (independent_excess(lambda) > 0)
        return excess(lambda);
    return choose2(lambda.largest() - lambda.derived().tail_sum + 2);
}

std::int64_t defect_min_form(const Partition& lambda)
{
    return std::min(choose2(lambda.largest() - lambda.derived().tail_sum + 2), excess(lambda));
}

std::int64_t secant_defect(const Partition& lambda)
{
    if (!is_defective(lambda))
        return 0;
    const std::int64_t value = defect_min_form(lambda);
    assert(value == defect_branch_form(lambda));
    return value;
}

std::int64_t expected_dim_tangent_intersection(const Partition& lambda)
{
    return std::max<std::int64_t>(independent_excess(lambda), 0);
}

std::int64_t dim_tangent_intersection(const Partition& lambda)
{
    const std::int64_t value = checked_add(expected_dim_tangent_intersection(lambda), secant_defect(lambda));
    // on the unbalanced side with positive excess the only forms are multiples of F_2..F_r G_2..G_r
    assert(!(lambda.largest() >= lambda.derived().tail_sum - 1 && excess(lambda) > 0 && lambda.size() > 2)
           || value == choose2(lambda.largest() - lambda.derived().tail_sum + 2));
    return value;
}

std::int64_t dim_secant(const Partition& lambda)
{
    const std::int64_t value = checked_sub(expected_dim_secant(lambda), secant_defect(lambda));
    assert(value
           == checked_sub(checked_add(checked_mul(2, dim_variety(lambda)), 1), dim_tangent_intersection(lambda)));
    return value;
}

bool fills_ambient(const Partition& lambda)
{
    static const Partition exceptional = Partition::from_parts({2, 2, 2, 1});
    const bool value = excess(lambda) <= 0 || lambda == exceptional;
    assert(value == (dim_secant(lambda) == lambda.derived().ambient_dim));
    return value;
}

CaseLabel classify_case(const Partition& lambda)
{
    const std::size_t r = lambda.size();
    if (r == 2)
        return CaseLabel::TwoFactors;
    const std::int64_t d2 = lambda[1];
    const std::int64_t d3 = lambda[2];
    if (r == 3) {
        if (d3 == 1)
            return CaseLabel::ThreeFactorsUnitTail;
        if (d3 == 2) {
            switch (d2) {
            case 2: return CaseLabel::ThreeFactorsPair22;
            case 3: return CaseLabel::ThreeFactorsPair32;
            case 4: return CaseLabel::ThreeFactorsPair42;
            case 5: return CaseLabel::ThreeFactorsPair52;
            case 6: return CaseLabel::ThreeFactorsPair62;
            default: return CaseLabel::ThreeFactorsTwoTailLong;
            }
        }
        if (d3 == 3)
            return d2 == 3 ? CaseLabel::ThreeFactorsPair33 : CaseLabel::ThreeFactorsThreeTailLong;
        return CaseLabel::ThreeFactorsWideTail;
    }
    if (r == 4) {
        if (d3 >= 2)
            return CaseLabel::FourFactorsWideTail;
        switch (d2) {
        case 1: return CaseLabel::FourFactorsTail111;
        case 2: return CaseLabel::FourFactorsTail211;
        case 3: return CaseLabel::FourFactorsTail311;
        case 4: return CaseLabel::FourFactorsTail411;
        default: return CaseLabel::FourFactorsLongSecond;
        }
    }
    if (r == 5)
        return d2 >= 2 ? CaseLabel::FiveFactorsWideTail : CaseLabel::FiveFactorsAllOnesTail;
    return CaseLabel::SixOrMoreFactors;
}

ClassificationReport classify(const Partition& lambda)
{
    ClassificationReport rep{.lambda = lambda};
    rep.ambient_dim = lambda.derived().ambient_dim;
    rep.dim_X = dim_variety(lambda);
    rep.exp_dim_sigma2 = expected_dim_secant(lambda);
    rep.exp_dim_IZ = expected_dim_tangent_intersection(lambda);
    rep.defective = is_defective(lambda);
    rep.delta2 = secant_defect(lambda);
    rep.dim_sigma2 = dim_secant(lambda);
    rep.dim_IZ = dim_tangent_intersection(lambda);
    rep.fills_ambient = fills_ambient(lambda);
    rep.case_label = classify_case(lambda);
    return rep;
}

}  // namespace secant
