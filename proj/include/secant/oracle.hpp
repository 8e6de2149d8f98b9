#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "secant/gf_poly.hpp"
#include "secant/matrix.hpp"
#include "secant/partition.hpp"

// Exact-rank measurement of the tangent-space dimensions that the closed-form
// theory predicts. Random factors stand in for a general point; a rank seen on
// any draw is a lower bound for the generic rank, so ranks aggregate by max and
// intersection dimensions (which only grow on special draws) aggregate by min.

namespace secant {

struct OracleConfig {
    PrimeField field{kDefaultPrime};
    int trials = 3;
    std::uint64_t base_seed = 1;

    /// Seed of trial t is base_seed + t.
    std::vector<std::uint64_t> trial_seeds() const;
    /// Throws Error(InvalidArgument) when trials < 1.
    void validate() const;
};

/// Rows are the coefficient vectors of m * (F / F_i) for every cofactor of
/// degree at most `degree` and every monomial m of the complementary degree.
struct TangentSliceBasis {
    Partition lambda;
    int degree = 0;
    Matrix rows;
};

/// Throws Error(InvalidArgument) for non-positive factor degrees or a negative degree.
TangentSliceBasis tangent_slice(std::span<const Form> factors, int degree);

/// Closed-form row count of tangent_slice: sum over i with degree >= d - d_i of C(degree - d + d_i + 2, 2).
std::size_t expected_slice_rows(const Partition& lambda, int degree);

/// Child seeds for a trial, drawn in order from std::mt19937_64(trial_seed).
class SeedStream {
public:
    explicit SeedStream(std::uint64_t trial_seed);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Factors of two independent general points F, G of X_lambda. The first r
/// child seeds give F_1..F_r (in part order), the next r give G_1..G_r.
struct FactorDraw {
    std::vector<Form> f;
    std::vector<Form> g;
};
FactorDraw draw_factors(const Partition& lambda, SeedStream& seeds, const PrimeField& field);

/// Rank of the degree-j tangent slice for the F drawn from `seed`.
std::int64_t measure_tangent_dim(const Partition& lambda, int degree, std::uint64_t seed, const PrimeField& field);
/// C(j+2, 2) minus measure_tangent_dim.
std::int64_t measure_hilbert(const Partition& lambda, int degree, std::uint64_t seed, const PrimeField& field);

/// Everything one trial measures in degree d.
struct TrialMeasurement {
    std::uint64_t seed = 0;
    std::int64_t dim_IF = 0;
    std::int64_t dim_IG = 0;
    std::int64_t stacked_rank = 0;
    /// Intersection measured through the kernel of the G slice, not through ranks of the stack.
    std::int64_t intersection_dim = 0;

    std::int64_t dim_sigma2() const noexcept { return stacked_rank - 1; }
    std::int64_t grassmann_intersection() const noexcept { return dim_IF + dim_IG - stacked_rank; }
    bool grassmann_consistent() const noexcept { return grassmann_intersection() == intersection_dim; }
};

/// Throws std::logic_error if the stacked rank exceeds the parameter count or the ambient space.
TrialMeasurement measure_trial(const Partition& lambda, std::uint64_t seed, const PrimeField& field);

/// Max over trials of the per-trial secant dimension.
std::int64_t measure_secant_dim(const Partition& lambda, const OracleConfig& config);
/// Min over trials of dim(I_F)_d + dim(I_G)_d - rank of the stack.
std::int64_t measure_intersection_dim(const Partition& lambda, const OracleConfig& config);

enum class SpecializationBranch {
    FixedComponent,  // 1 < d_e < s_e: the split-off line is a fixed component
    ExtraPoints,  // e = 1, d_1 > 1, d_1 >= s - 1: bound grows by d_1 - s + 1
};

std::string_view to_string(SpecializationBranch branch) noexcept;

/// Branches whose hypotheses hold for part `factor` (1-based).
std::vector<SpecializationBranch> applicable_branches(const Partition& lambda, std::size_t factor);

struct SpecializationCheck {
    SpecializationBranch branch;
    std::int64_t bound = 0;
    bool passed = false;
};

struct SpecializationReport {
    Partition lambda;
    std::size_t factor = 1;
    Partition lowered;  // part `factor` reduced by one
    std::int64_t dim_Z = 0;  // generic Z, degree d
    std::int64_t dim_Z_specialized = 0;  // F_e = l F_e', G_e = l G_e', degree d
    std::int64_t dim_Z_residual = 0;  // the lowered partition, degree d - 1
    std::vector<SpecializationCheck> checks;
    std::vector<std::int64_t> sigma2_per_trial;
    bool passed = false;
};

/// Measures the generic, split-line and residual intersections and checks
/// dim_Z <= dim_Z_specialized <= bound for every applicable branch.
/// Throws Error(InapplicableHypotheses) when no branch applies.
SpecializationReport specialization_check(const Partition& lambda, std::size_t factor, const OracleConfig& config);

enum class Verdict { Match, OracleBelowTheory, OracleAboveTheory };

std::string_view to_string(Verdict verdict) noexcept;

struct OracleQuantities {
    std::int64_t dim_IF_d = 0;
    std::vector<std::int64_t> hilbert;  // degrees 0..d
    std::int64_t dim_sigma2 = 0;
    std::int64_t dim_IZ = 0;

    friend bool operator==(const OracleQuantities&, const OracleQuantities&) = default;
};

struct OracleReport {
    Partition lambda;
    std::uint32_t prime = kDefaultPrime;
    std::vector<std::uint64_t> seeds;
    int trials = 0;
    OracleQuantities measured;
    OracleQuantities predicted;
    std::vector<std::int64_t> sigma2_per_trial;
    bool grassmann_consistent = true;
    Verdict verdict = Verdict::Match;

    bool passed() const noexcept { return verdict == Verdict::Match && grassmann_consistent; }

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Theory values for every quantity verify() measures.
OracleQuantities predicted_quantities(const Partition& lambda);

/// AboveTheory when any measurement lands where a general point cannot reach
/// (a rank above its prediction or a corank/intersection below it); otherwise
/// BelowTheory on any mismatch.
Verdict compare(const OracleQuantities& measured, const OracleQuantities& predicted);

OracleReport verify(const Partition& lambda, const OracleConfig& config);

}  // namespace secant
