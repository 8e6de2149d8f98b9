// One line per acceptance criterion; exits non-zero if any fails.

#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "secant/formulas.hpp"
#include "secant/oracle.hpp"
#include "secant/parallel.hpp"
#include "secant/partition.hpp"
#include "secant/tables.hpp"

using namespace secant;

namespace {

using Tail = std::vector<std::int64_t>;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    failures += ok ? 0 : 1;
}

Partition P(std::initializer_list<std::int64_t> parts)
{
    return Partition::from_parts(parts);
}

// Per-trial secant dimensions that came out above the closed form.
std::vector<std::string> sigma2_overshoots;

void guard_sigma2(const Partition& lambda, const std::vector<std::int64_t>& per_trial)
{
    const std::int64_t predicted = dim_secant(lambda);
    for (auto v : per_trial)
        if (v > predicted)
            sigma2_overshoots.push_back(lambda.to_string() + "=" + std::to_string(v));
}

void exhaustive_agreement(const OracleConfig& config)
{
    const auto all = enumerate_partitions(10, 2, 10);
    const auto reports = parallel_map(all.size(), [&](std::size_t i) { return verify(all[i], config); });
    std::size_t matches = 0;
    std::string first_bad;
    for (const auto& rep : reports) {
        guard_sigma2(rep.lambda, rep.sigma2_per_trial);
        if (rep.passed())
            ++matches;
        else if (first_bad.empty())
            first_bad = rep.lambda.to_string() + " " + std::string(to_string(rep.verdict));
    }
    std::ostringstream detail;
    detail << matches << "/" << reports.size() << " MATCH, p=" << config.field.modulus() << ", trials="
           << config.trials << ", exact";
    if (!first_bad.empty())
        detail << ", first failure " << first_bad;
    report(1, matches == reports.size() && reports.size() == 128, "exhaustive oracle agreement d<=10", detail.str());
}

void hilbert_reproduction(const OracleConfig& config)
{
    std::size_t branch_checks = 0, branch_bad = 0;
    for (const auto& lambda : enumerate_partitions(30, 2, 30)) {
        const std::int64_t d = lambda.derived().total_degree;
        for (std::int64_t j : {d - 2, d - 1}) {
            ++branch_checks;
            if (hilbert_function_cofactor_count(lambda, j) != hilbert_function_stable(lambda, j))
                ++branch_bad;
        }
    }

    const auto small = enumerate_partitions(8, 2, 8);
    const auto bad = parallel_map(small.size(), [&](std::size_t i) {
        std::size_t mismatches = 0;
        const int d = static_cast<int>(small[i].derived().total_degree);
        for (auto seed : config.trial_seeds())
            for (int j = 0; j <= d; ++j)
                mismatches += measure_hilbert(small[i], j, seed, config.field) != hilbert_function(small[i], j);
        return mismatches;
    });
    std::size_t oracle_bad = 0;
    for (auto b : bad)
        oracle_bad += b;

    std::ostringstream detail;
    detail << branch_checks - branch_bad << "/" << branch_checks << " branch checks d<=30, " << oracle_bad
           << " oracle mismatches over " << small.size() << " partitions d<=8, exact";
    report(2, branch_bad == 0 && oracle_bad == 0, "Hilbert function branches and oracle", detail.str());
}

void below_hyperplane_table(const OracleConfig& config)
{
    const std::vector<std::pair<Partition, Partition>> expected_cases = {
        {P({3, 2, 2}), P({2, 2, 2})}, {P({4, 3, 2}), P({3, 3, 2})}, {P({5, 4, 2}), P({4, 4, 2})},
        {P({6, 5, 2}), P({5, 5, 2})}, {P({2, 1, 1, 1}), P({1, 1, 1, 1})}, {P({3, 2, 1, 1}), P({2, 2, 1, 1})},
        {P({4, 3, 1, 1}), P({3, 3, 1, 1})},
    };
    const std::vector<std::int64_t> expected_values = {4, 3, 2, 1, 3, 2, 1};

    const auto rows = below_hyperplane_rows(&config);
    bool ok = rows.size() == expected_cases.size();
    std::ostringstream values;
    for (std::size_t i = 0; ok && i < rows.size(); ++i) {
        const auto& row = rows[i];
        const std::int64_t v = expected_values[i];
        ok = row.lambda == expected_cases[i].first && row.lowered == expected_cases[i].second
             && row.exp_dim_IZ == v && row.dim_IZ_lowered == v && row.measured_dim_IZ == v
             && row.measured_dim_IZ_lowered == v;
        values << (i ? "," : "") << row.dim_IZ_lowered;
    }
    report(3, ok, "below-hyperplane table", "values " + values.str() + " (expected 4,3,2,1,3,2,1), oracle confirmed, exact");
}

void unit_tail_family(const OracleConfig& config)
{
    const auto rows = unit_tail_family_rows(6, &config);
    bool ok = rows.size() == 12;
    for (const auto& row : rows) {
        const bool equal_tail = row.lambda[0] == row.lambda[1];
        const std::int64_t claim = row.a + (equal_tail ? 3 : 4);
        ok = ok && row.claimed == claim && row.dim_IZ == claim && row.measured_dim_IZ == claim;
    }
    report(4, ok, "[a,a,1] and [a+1,a,1] family a=1..6",
           std::to_string(rows.size()) + " rows, theory and oracle equal a+3 / a+4, exact");
}

void classification_lists()
{
    std::map<std::size_t, std::set<Tail>> found, tails_seen;
    for (const auto& lambda : enumerate_bounded_parts(14, 2, 7)) {
        const Tail tail(lambda.parts().begin() + 1, lambda.parts().end());
        tails_seen[lambda.size()].insert(tail);
        if (excess(lambda) <= 0)
            found[lambda.size()].insert(tail);
    }

    std::map<std::size_t, std::set<Tail>> expected;
    expected[2] = tails_seen[2];
    for (std::int64_t a = 1; a <= 14; ++a)
        expected[3].insert({a, 1});
    for (const Tail& t : {Tail{2, 2}, Tail{3, 2}, Tail{4, 2}, Tail{5, 2}, Tail{6, 2}, Tail{3, 3}})
        expected[3].insert(t);
    expected[4] = {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}};
    expected[5] = {{1, 1, 1, 1}};
    for (std::size_t r = 6; r <= 7; ++r)
        expected[r] = {};

    bool ok = expected[2].size() == 14;
    std::ostringstream detail;
    for (std::size_t r = 2; r <= 7; ++r) {
        ok = ok && found[r] == expected[r];
        detail << (r > 2 ? ", " : "") << "r=" << r << ":" << found[r].size();
    }
    report(5, ok, "non-positive excess tails, r<=7, parts<=14", detail.str() + ", set equality");
}

void fills_ambient_check()
{
    std::size_t checked = 0, bad = 0;
    std::vector<std::string> exceptional;
    for (const auto& lambda : enumerate_partitions(12, 2, 12)) {
        ++checked;
        const bool fills = fills_ambient(lambda);
        if (fills != (dim_secant(lambda) == lambda.derived().ambient_dim))
            ++bad;
        const auto& q = lambda.derived();
        if (fills && 3 * q.tail_sum - 2 * q.tail_pairs < 0)
            exceptional.push_back(lambda.to_string());
    }
    const bool ok = bad == 0 && exceptional == std::vector<std::string>{"[2,2,2,1]"};
    std::string ex;
    for (const auto& e : exceptional)
        ex += (ex.empty() ? "" : " ") + e;
    report(6, ok, "fills ambient iff dim = N, d<=12",
           std::to_string(checked - bad) + "/" + std::to_string(checked) + " agree, exceptions {" + ex + "}, exact");
}

void defect_consistency()
{
    std::size_t defective = 0, bad = 0;
    for (const auto& lambda : enumerate_partitions(20, 2, 20)) {
        if (!is_defective(lambda))
            continue;
        ++defective;
        if (defect_branch_form(lambda) != defect_min_form(lambda))
            ++bad;
    }
    report(7, bad == 0 && defective > 0, "defect branch form equals min form, d<=20",
           std::to_string(defective - bad) + "/" + std::to_string(defective) + " defective partitions agree, exact");
}

void specialization_suite(const OracleConfig& config)
{
    std::vector<std::pair<Partition, std::size_t>> cases;
    for (const auto& lambda : enumerate_partitions(9, 2, 9))
        for (std::size_t e = 1; e <= lambda.size(); ++e)
            if (!applicable_branches(lambda, e).empty())
                cases.emplace_back(lambda, e);

    const auto reports = parallel_map(cases.size(), [&](std::size_t i) {
        return specialization_check(cases[i].first, cases[i].second, config);
    });
    std::size_t passed = 0, inequalities = 0;
    std::string first_bad;
    for (const auto& rep : reports) {
        guard_sigma2(rep.lambda, rep.sigma2_per_trial);
        inequalities += rep.checks.size();
        if (rep.passed)
            ++passed;
        else if (first_bad.empty())
            first_bad = rep.lambda.to_string() + " e=" + std::to_string(rep.factor);
    }
    std::ostringstream detail;
    detail << passed << "/" << reports.size() << " (lambda, e) pairs, " << inequalities << " inequalities";
    if (!first_bad.empty())
        detail << ", first failure " << first_bad;
    report(8, passed == reports.size() && !reports.empty(), "specialization inequalities d<=9", detail.str());
}

}  // namespace

int main()
{
    const OracleConfig config{.field = PrimeField(kDefaultPrime), .trials = 3, .base_seed = 1};

    exhaustive_agreement(config);
    hilbert_reproduction(config);
    below_hyperplane_table(config);
    unit_tail_family(config);
    classification_lists();
    fills_ambient_check();
    defect_consistency();
    specialization_suite(config);

    std::string over = sigma2_overshoots.empty() ? "none" : sigma2_overshoots.front();
    report(9, sigma2_overshoots.empty(), "no per-trial secant dimension above theory in runs 1 and 8",
           std::to_string(sigma2_overshoots.size()) + " overshoots (" + over + ")");

    return failures == 0 ? 0 : 1;
}
