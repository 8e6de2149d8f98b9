#include "secant/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "secant/checked.hpp"
#include "secant/error.hpp"
#include "secant/formulas.hpp"

namespace secant {

namespace {

std::int64_t monomial_count(std::int64_t degree)
{
    return choose2(degree + 2);
}

Partition partition_of(std::span<const Form> factors)
{
    std::vector<std::int64_t> degrees;
    degrees.reserve(factors.size());
    for (const auto& f : factors)
        degrees.push_back(f.degree());
    return Partition::from_parts(degrees);
}

struct SliceRanks {
    std::int64_t dim_IF = 0;
    std::int64_t dim_IG = 0;
    std::int64_t stacked_rank = 0;
    std::int64_t intersection_dim = 0;
};

SliceRanks measure_factors(std::span<const Form> f, std::span<const Form> g, const PrimeField& field)
{
    const Partition lambda = partition_of(f);
    const int d = static_cast<int>(lambda.derived().total_degree);
    const Matrix sf = tangent_slice(f, d).rows;
    const Matrix sg = tangent_slice(g, d).rows;

    SliceRanks out;
    out.dim_IF = static_cast<std::int64_t>(rank(sf, field));
    out.dim_IG = static_cast<std::int64_t>(rank(sg, field));
    out.stacked_rank = static_cast<std::int64_t>(rank(Matrix::stack(sf, sg), field));
    out.intersection_dim = static_cast<std::int64_t>(row_space_intersection_dim(sf, sg, field));
    return out;
}

}  // namespace

std::vector<std::uint64_t> OracleConfig::trial_seeds() const
{
    std::vector<std::uint64_t> seeds;
    for (int t = 0; t < trials; ++t)
        seeds.push_back(base_seed + static_cast<std::uint64_t>(t));
    return seeds;
}

void OracleConfig::validate() const
{
    if (trials < 1)
        throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
}

TangentSliceBasis tangent_slice(std::span<const Form> factors, int degree)
{
    if (degree < 0)
        throw Error(ErrorCode::InvalidArgument, "slice degree must be non-negative");
    for (const auto& f : factors) {
        if (f.degree() < 1)
            throw Error(ErrorCode::InvalidArgument, "factors must have positive degree");
    }
    TangentSliceBasis basis{.lambda = partition_of(factors), .degree = degree, .rows = Matrix(0, monomial_index::count(degree))};
    for (const auto& cofactor : cofactor_products(factors)) {
        for (const auto& row : monomial_multiples(cofactor, degree))
            basis.rows.append_row(row.coeffs());
    }
    return basis;
}

std::size_t expected_slice_rows(const Partition& lambda, int degree)
{
    const std::int64_t d = lambda.derived().total_degree;
    std::int64_t rows = 0;
    for (auto di : lambda.parts()) {
        if (degree >= d - di)
            rows += monomial_count(degree - d + di);
    }
    return static_cast<std::size_t>(rows);
}

SeedStream::SeedStream(std::uint64_t trial_seed)
    : engine_(trial_seed)
{}

FactorDraw draw_factors(const Partition& lambda, SeedStream& seeds, const PrimeField& field)
{
    FactorDraw draw;
    for (auto di : lambda.parts())
        draw.f.push_back(random_form(static_cast<int>(di), seeds.next(), field));
    for (auto di : lambda.parts())
        draw.g.push_back(random_form(static_cast<int>(di), seeds.next(), field));
    return draw;
}

std::int64_t measure_tangent_dim(const Partition& lambda, int degree, std::uint64_t seed, const PrimeField& field)
{
    SeedStream seeds(seed);
    const FactorDraw draw = draw_factors(lambda, seeds, field);
    return static_cast<std::int64_t>(rank(tangent_slice(draw.f, degree).rows, field));
}

std::int64_t measure_hilbert(const Partition& lambda, int degree, std::uint64_t seed, const PrimeField& field)
{
    return monomial_count(degree) - measure_tangent_dim(lambda, degree, seed, field);
}

TrialMeasurement measure_trial(const Partition& lambda, std::uint64_t seed, const PrimeField& field)
{
    SeedStream seeds(seed);
    const FactorDraw draw = draw_factors(lambda, seeds, field);
    const SliceRanks ranks = measure_factors(draw.f, draw.g, field);

    TrialMeasurement t{.seed = seed,
                       .dim_IF = ranks.dim_IF,
                       .dim_IG = ranks.dim_IG,
                       .stacked_rank = ranks.stacked_rank,
                       .intersection_dim = ranks.intersection_dim};
    if (t.dim_sigma2() > expected_dim_secant(lambda) || t.dim_sigma2() > lambda.derived().ambient_dim)
        throw std::logic_error("stacked tangent rank for " + lambda.to_string() + " exceeds its parameter count");
    return t;
}

std::int64_t measure_secant_dim(const Partition& lambda, const OracleConfig& config)
{
    config.validate();
    std::int64_t best = -1;
    for (auto seed : config.trial_seeds())
        best = std::max(best, measure_trial(lambda, seed, config.field).dim_sigma2());
    return best;
}

std::int64_t measure_intersection_dim(const Partition& lambda, const OracleConfig& config)
{
    config.validate();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (auto seed : config.trial_seeds())
        best = std::min(best, measure_trial(lambda, seed, config.field).grassmann_intersection());
    return best;
}

std::string_view to_string(SpecializationBranch branch) noexcept
{
    switch (branch) {
    case SpecializationBranch::FixedComponent: return "fixed_component";
    case SpecializationBranch::ExtraPoints: return "extra_points";
    }
    return "unknown";
}

std::vector<SpecializationBranch> applicable_branches(const Partition& lambda, std::size_t factor)
{
    if (factor < 1 || factor > lambda.size())
        throw Error(ErrorCode::InvalidArgument, "factor index out of range");
    const auto& q = lambda.derived();
    const std::int64_t de = lambda[factor - 1];
    std::vector<SpecializationBranch> out;
    if (de > 1 && de < q.cofactor_sum[factor - 1])
        out.push_back(SpecializationBranch::FixedComponent);
    if (factor == 1 && de > 1 && de >= q.tail_sum - 1)
        out.push_back(SpecializationBranch::ExtraPoints);
    return out;
}

SpecializationReport specialization_check(const Partition& lambda, std::size_t factor, const OracleConfig& config)
{
    config.validate();
    const auto branches = applicable_branches(lambda, factor);
    if (branches.empty())
        throw Error(ErrorCode::InapplicableHypotheses,
                    "no residual inequality applies to part " + std::to_string(factor) + " of " + lambda.to_string());

    const std::size_t e = factor - 1;
    const int lowered_degree = static_cast<int>(lambda[e] - 1);
    const PrimeField& field = config.field;

    SpecializationReport rep{.lambda = lambda, .factor = factor, .lowered = lower_part(lambda, e)};
    rep.dim_Z = std::numeric_limits<std::int64_t>::max();
    rep.dim_Z_specialized = rep.dim_Z;
    rep.dim_Z_residual = rep.dim_Z;

    for (auto seed : config.trial_seeds()) {
        SeedStream seeds(seed);
        FactorDraw draw = draw_factors(lambda, seeds, field);
        const Form line = random_form(1, seeds.next(), field);
        const Form f_rest = random_form(lowered_degree, seeds.next(), field);
        const Form g_rest = random_form(lowered_degree, seeds.next(), field);

        const SliceRanks generic = measure_factors(draw.f, draw.g, field);
        rep.dim_Z = std::min(rep.dim_Z, generic.dim_IF + generic.dim_IG - generic.stacked_rank);
        rep.sigma2_per_trial.push_back(generic.stacked_rank - 1);

        FactorDraw split = draw;
        split.f[e] = line * f_rest;
        split.g[e] = line * g_rest;
        const SliceRanks special = measure_factors(split.f, split.g, field);
        rep.dim_Z_specialized = std::min(rep.dim_Z_specialized, special.dim_IF + special.dim_IG - special.stacked_rank);

        FactorDraw residual = draw;
        residual.f[e] = f_rest;
        residual.g[e] = g_rest;
        const SliceRanks res = measure_factors(residual.f, residual.g, field);
        rep.dim_Z_residual = std::min(rep.dim_Z_residual, res.dim_IF + res.dim_IG - res.stacked_rank);
    }

    const auto& q = lambda.derived();
    rep.passed = true;
    for (auto branch : branches) {
        SpecializationCheck check{.branch = branch, .bound = rep.dim_Z_residual};
        if (branch == SpecializationBranch::ExtraPoints)
            check.bound += lambda.largest() - q.tail_sum + 1;
        check.passed = rep.dim_Z <= rep.dim_Z_specialized && rep.dim_Z_specialized <= check.bound;
        rep.passed = rep.passed && check.passed;
        rep.checks.push_back(check);
    }
    return rep;
}

std::string_view to_string(Verdict verdict) noexcept
{
    switch (verdict) {
    case Verdict::Match: return "MATCH";
    case Verdict::OracleBelowTheory: return "ORACLE_BELOW_THEORY";
    case Verdict::OracleAboveTheory: return "ORACLE_ABOVE_THEORY";
    }
    return "unknown";
}

OracleQuantities predicted_quantities(const Partition& lambda)
{
    const auto& q = lambda.derived();
    OracleQuantities out;
    out.dim_IF_d = monomial_count(q.total_degree) - q.pair_products;
    for (std::int64_t j = 0; j <= q.total_degree; ++j)
        out.hilbert.push_back(hilbert_function(lambda, j));
    out.dim_sigma2 = dim_secant(lambda);
    out.dim_IZ = dim_tangent_intersection(lambda);
    return out;
}

Verdict compare(const OracleQuantities& measured, const OracleQuantities& predicted)
{
    bool above = measured.dim_IF_d > predicted.dim_IF_d || measured.dim_sigma2 > predicted.dim_sigma2
                 || measured.dim_IZ < predicted.dim_IZ || measured.hilbert.size() != predicted.hilbert.size();
    for (std::size_t j = 0; !above && j < measured.hilbert.size(); ++j)
        above = measured.hilbert[j] < predicted.hilbert[j];
    if (above)
        return Verdict::OracleAboveTheory;
    return measured == predicted ? Verdict::Match : Verdict::OracleBelowTheory;
}

OracleReport verify(const Partition& lambda, const OracleConfig& config)
{
    config.validate();
    const PrimeField& field = config.field;
    const int d = static_cast<int>(lambda.derived().total_degree);

    OracleReport rep{.lambda = lambda, .prime = field.modulus(), .seeds = config.trial_seeds(), .trials = config.trials};
    rep.predicted = predicted_quantities(lambda);

    OracleQuantities& m = rep.measured;
    m.dim_IF_d = -1;
    m.hilbert.assign(static_cast<std::size_t>(d) + 1, std::numeric_limits<std::int64_t>::max());
    m.dim_sigma2 = -1;
    m.dim_IZ = std::numeric_limits<std::int64_t>::max();

    for (auto seed : rep.seeds) {
        SeedStream seeds(seed);
        const FactorDraw draw = draw_factors(lambda, seeds, field);
        for (int j = 0; j <= d; ++j) {
            const auto r = static_cast<std::int64_t>(rank(tangent_slice(draw.f, j).rows, field));
            m.hilbert[j] = std::min(m.hilbert[j], monomial_count(j) - r);
        }

        const TrialMeasurement t = measure_trial(lambda, seed, field);
        m.dim_IF_d = std::max(m.dim_IF_d, t.dim_IF);
        m.dim_sigma2 = std::max(m.dim_sigma2, t.dim_sigma2());
        m.dim_IZ = std::min(m.dim_IZ, t.grassmann_intersection());
        rep.sigma2_per_trial.push_back(t.dim_sigma2());
        rep.grassmann_consistent = rep.grassmann_consistent && t.grassmann_consistent();
    }

    rep.verdict = compare(rep.measured, rep.predicted);
    return rep;
}

}  // namespace secant
