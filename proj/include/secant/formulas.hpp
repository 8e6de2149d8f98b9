#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "secant/partition.hpp"

// Closed-form dimension theory for the secant line variety of the variety
// X_lambda of plane curves that split as F_1 ... F_r with deg F_i = d_i.
//
// Notation used in comments: d = total degree, D = sum_{i<j} d_i d_j,
// s = d_2 + ... + d_r, p = D - d_1 s, I_Z = I_F cap I_G in degree d for two
// general points F, G of X_lambda.

namespace secant {

/// Families of tails (d_2, ..., d_r). The first group is exactly where
/// 2p - 3s > 0, the second exactly where 2p - 3s <= 0.
enum class CaseLabel {
    // 2p - 3s > 0
    ThreeFactorsTwoTailLong,  // r = 3, d_3 = 2, d_2 >= 7
    ThreeFactorsThreeTailLong,  // r = 3, d_3 = 3, d_2 >= 4
    ThreeFactorsWideTail,  // r = 3, d_3 >= 4
    FourFactorsWideTail,  // r = 4, d_3 >= 2
    FourFactorsLongSecond,  // r = 4, d_3 = 1, d_2 >= 5
    FiveFactorsWideTail,  // r = 5, d_2 >= 2
    SixOrMoreFactors,  // r >= 6
    // 2p - 3s <= 0
    TwoFactors,  // r = 2
    ThreeFactorsUnitTail,  // r = 3, [d_2, d_3] = [a, 1]
    ThreeFactorsPair22,
    ThreeFactorsPair32,
    ThreeFactorsPair42,
    ThreeFactorsPair52,
    ThreeFactorsPair62,
    ThreeFactorsPair33,
    FourFactorsTail111,
    FourFactorsTail211,
    FourFactorsTail311,
    FourFactorsTail411,
    FiveFactorsAllOnesTail,  // r = 5, [d_2, ..., d_5] = [1, 1, 1, 1]
};

inline constexpr CaseLabel kAllCaseLabels[] = {
    CaseLabel::ThreeFactorsTwoTailLong, CaseLabel::ThreeFactorsThreeTailLong,
    CaseLabel::ThreeFactorsWideTail, CaseLabel::FourFactorsWideTail,
    CaseLabel::FourFactorsLongSecond, CaseLabel::FiveFactorsWideTail,
    CaseLabel::SixOrMoreFactors, CaseLabel::TwoFactors,
    CaseLabel::ThreeFactorsUnitTail, CaseLabel::ThreeFactorsPair22,
    CaseLabel::ThreeFactorsPair32, CaseLabel::ThreeFactorsPair42,
    CaseLabel::ThreeFactorsPair52, CaseLabel::ThreeFactorsPair62,
    CaseLabel::ThreeFactorsPair33, CaseLabel::FourFactorsTail111,
    CaseLabel::FourFactorsTail211, CaseLabel::FourFactorsTail311,
    CaseLabel::FourFactorsTail411, CaseLabel::FiveFactorsAllOnesTail,
};

/// Stable wire name, e.g. "r3_d3eq2_d2ge7" or "r5_all_ones_tail".
std::string_view to_string(CaseLabel label) noexcept;
std::optional<CaseLabel> case_label_from_string(std::string_view name) noexcept;

/// True for the families where 2p - 3s > 0.
bool has_positive_excess(CaseLabel label) noexcept;

struct ClassificationReport {
    Partition lambda;
    std::int64_t ambient_dim = 0;
    std::int64_t dim_X = 0;
    std::int64_t exp_dim_sigma2 = 0;
    std::int64_t exp_dim_IZ = 0;
    bool defective = false;
    std::int64_t delta2 = 0;
    std::int64_t dim_sigma2 = 0;
    std::int64_t dim_IZ = 0;
    bool fills_ambient = false;
    CaseLabel case_label = CaseLabel::TwoFactors;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// dim X_{n,lambda} = sum_i C(d_i + n, n) - r. Throws Error(InvalidArgument) for n < 1.
std::int64_t dim_variety(const Partition& lambda, int n = 2);

/// min{N, 2 dim X + 1}
std::int64_t expected_dim_secant(const Partition& lambda);

/// 2p - 3s; its sign (with d_1 >= s) decides defectivity.
std::int64_t excess(const Partition& lambda);

/// Hilbert function of R/I_F in degree j for a general F in X_lambda.
/// Throws Error(NegativeDegree) for j < 0.
std::int64_t hilbert_function(const Partition& lambda, std::int64_t j);

/// The two closed forms of the Hilbert function, each on its own domain:
/// the stable value D (j >= d-2) and the cofactor count (j <= d-1).
std::int64_t hilbert_function_stable(const Partition& lambda, std::int64_t j);
std::int64_t hilbert_function_cofactor_count(const Partition& lambda, std::int64_t j);

/// d_1 >= s and 2p - 3s > 0
bool is_defective(const Partition& lambda);

/// Defect as a two-branch formula: 2p - 3s when C(d+2,2) - 2D > 0, otherwise
/// C(d_1 - s + 2, 2). Only meaningful for defective lambda.
std::int64_t defect_branch_form(const Partition& lambda);
/// Defect as min{C(d_1 - s + 2, 2), 2p - 3s}. Only meaningful for defective lambda.
std::int64_t defect_min_form(const Partition& lambda);

/// 0 when not defective; otherwise the common value of the two forms above.
std::int64_t secant_defect(const Partition& lambda);

/// max{C(d+2,2) - 2D, 0}, the count assuming Z imposes independent conditions.
std::int64_t expected_dim_tangent_intersection(const Partition& lambda);
/// dim (I_F cap I_G)_d for general F, G.
std::int64_t dim_tangent_intersection(const Partition& lambda);

/// dim sigma_2(X_lambda)
std::int64_t dim_secant(const Partition& lambda);

/// Whether sigma_2(X_lambda) is all of P^N: 3s - 2p >= 0 or lambda = [2,2,2,1].
bool fills_ambient(const Partition& lambda);

CaseLabel classify_case(const Partition& lambda);

ClassificationReport classify(const Partition& lambda);

}  // namespace secant
