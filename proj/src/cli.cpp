#include "secant/cli.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "secant/error.hpp"
#include "secant/formulas.hpp"
#include "secant/oracle.hpp"
#include "secant/parallel.hpp"
#include "secant/report_io.hpp"
#include "secant/tables.hpp"

namespace secant {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr const char* kFooter = R"(Configuration precedence: command-line flags, then the environment
variables SECANT_PRIME, SECANT_SEED and SECANT_TRIALS, then built-in defaults
(prime 1000003, seed 1, 3 trials).

Exit codes: 0 success / MATCH, 1 oracle mismatch, 2 usage or validation error.)";

struct Options {
    std::uint32_t prime = kDefaultPrime;
    int trials = 3;
    std::uint64_t seed = 1;
    std::string format;
    std::size_t jobs = 0;

    std::string partition;

    std::int64_t d_max = 0;
    std::int64_t r_min = 2;
    std::int64_t r_max = 0;
    std::int64_t r_exact = 0;
    std::int64_t max_part = 0;
    std::string mode = "classify";

    int figure_r = 0;
    std::int64_t bound = 12;

    std::string table;
    bool table_verify = false;
    std::int64_t a_max = 6;
    std::int64_t table_d_max = 10;

    OracleConfig oracle() const
    {
        OracleConfig c{.field = PrimeField(prime), .trials = trials, .base_seed = seed};
        c.validate();
        return c;
    }

    bool csv(const char* fallback) const { return (format.empty() ? std::string(fallback) : format) == "csv"; }
};

void add_format(CLI::App* sub, Options& o, const char* fallback)
{
    sub->add_option("--format", o.format, std::string("Output format (default ") + fallback + ")")
        ->check(CLI::IsMember({"json", "csv"}));
}

void add_oracle_options(CLI::App* sub, Options& o)
{
    sub->add_option("--prime", o.prime, "Prime modulus of the oracle field")->envname("SECANT_PRIME");
    sub->add_option("--trials", o.trials, "Random trials per partition")
        ->envname("SECANT_TRIALS")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed of the first trial; trial t uses seed + t")->envname("SECANT_SEED");
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    out << csv_line(fields) << '\n';
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const ClassificationReport rep = classify(parse_partition(o.partition));
    if (o.csv("json")) {
        write_csv_row(out, classification_csv_header());
        write_csv_row(out, classification_csv_fields(rep));
    } else {
        out << to_json(rep).dump() << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const Partition lambda = parse_partition(o.partition);
    const OracleReport rep = verify(lambda, o.oracle());
    if (o.csv("json")) {
        write_csv_row(out, oracle_csv_header());
        write_csv_row(out, oracle_csv_fields(rep));
    } else {
        out << to_json(rep).dump() << '\n';
    }
    return rep.passed() ? kExitOk : kExitMismatch;
}

std::vector<Partition> sweep_partitions(const Options& o)
{
    std::int64_t r_min = o.r_min;
    std::int64_t r_max = o.r_max;
    if (o.r_exact)
        r_min = r_max = o.r_exact;
    if (o.max_part > 0) {
        if (r_max == 0)
            throw Error(ErrorCode::InvalidRange, "--max-part needs --r-max or --r");
        return enumerate_bounded_parts(o.max_part, r_min, r_max);
    }
    if (o.d_max == 0)
        throw Error(ErrorCode::InvalidRange, "sweep needs --d-max or --max-part");
    if (r_max == 0)
        r_max = o.d_max;
    return enumerate_partitions(o.d_max, r_min, r_max);
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto partitions = sweep_partitions(o);
    const bool csv = o.csv("json");
    const std::size_t jobs = o.jobs ? o.jobs : default_worker_count();

    if (o.mode == "classify") {
        const auto reports = parallel_map(partitions.size(), [&](std::size_t i) { return classify(partitions[i]); }, jobs);
        if (csv)
            write_csv_row(out, classification_csv_header());
        for (const auto& rep : reports) {
            if (csv)
                write_csv_row(out, classification_csv_fields(rep));
            else
                out << to_json(rep).dump() << '\n';
        }
        return kExitOk;
    }

    const OracleConfig config = o.oracle();
    const auto reports =
        parallel_map(partitions.size(), [&](std::size_t i) { return verify(partitions[i], config); }, jobs);
    std::size_t matches = 0;
    if (csv)
        write_csv_row(out, oracle_csv_header());
    for (const auto& rep : reports) {
        matches += rep.passed() ? 1 : 0;
        if (csv)
            write_csv_row(out, oracle_csv_fields(rep));
        else
            out << to_json(rep).dump() << '\n';
    }
    const std::size_t mismatches = reports.size() - matches;
    if (csv) {
        err << "records: " << reports.size() << ", matches: " << matches << ", mismatches: " << mismatches << '\n';
    } else {
        const Json summary{{"summary", Json{{"records", reports.size()}, {"matches", matches}, {"mismatches", mismatches}}}};
        out << summary.dump() << '\n';
    }
    return mismatches ? kExitMismatch : kExitOk;
}

int cmd_figure_data(const Options& o, std::ostream& out)
{
    const Table t = figure_grid(o.figure_r, o.bound);
    out << (o.csv("csv") ? t.to_csv() : t.to_json_lines());
    return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out)
{
    const auto name = canonical_table_name(o.table);
    if (!name)
        throw Error(ErrorCode::InvalidArgument, "unknown table '" + o.table + "'");

    std::optional<OracleConfig> config;
    if (o.table_verify)
        config = o.oracle();
    const OracleConfig* with = config ? &*config : nullptr;

    Table t;
    if (*name == "below-hyperplane")
        t = to_table(below_hyperplane_rows(with));
    else if (*name == "unit-tail-family")
        t = to_table(unit_tail_family_rows(o.a_max, with));
    else
        t = to_table(two_factor_rows(o.table_d_max, with));
    out << (o.csv("csv") ? t.to_csv() : t.to_json_lines());
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dimension and defectivity of secant line varieties of reducible plane curves", "secant"};
    app.footer(kFooter);
    app.require_subcommand(1);

    Options o;

    auto* classify_cmd = app.add_subcommand("classify", "Closed-form classification of one partition");
    classify_cmd->add_option("partition", o.partition, "Comma-separated parts, e.g. 9,7,2")->required();
    add_format(classify_cmd, o, "json");

    auto* verify_cmd = app.add_subcommand("verify", "Check every predicted dimension against exact ranks");
    verify_cmd->add_option("partition", o.partition, "Comma-separated parts, e.g. 6,5,2")->required();
    add_oracle_options(verify_cmd, o);
    add_format(verify_cmd, o, "json");

    auto* sweep_cmd = app.add_subcommand("sweep", "Classify or verify every partition in a range");
    sweep_cmd->add_option("--d-max", o.d_max, "Largest total degree");
    sweep_cmd->add_option("--r-min", o.r_min, "Fewest parts (default 2)");
    sweep_cmd->add_option("--r-max", o.r_max, "Most parts (default: no limit below d-max)");
    sweep_cmd->add_option("--r", o.r_exact, "Exact number of parts");
    sweep_cmd->add_option("--max-part", o.max_part, "Bound every part instead of the total degree");
    sweep_cmd->add_option("--mode", o.mode, "classify or verify")->check(CLI::IsMember({"classify", "verify"}));
    sweep_cmd->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
    add_oracle_options(sweep_cmd, o);
    add_format(sweep_cmd, o, "json");

    auto* figure_cmd = app.add_subcommand("figure-data", "Grid of tails for the r = 3, 4, 5 region plots");
    figure_cmd->add_option("--r", o.figure_r, "Number of parts: 3, 4 or 5")->required();
    figure_cmd->add_option("--bound", o.bound, "Largest tail entry (default 12)");
    add_format(figure_cmd, o, "csv");

    auto* table_cmd = app.add_subcommand("table", "Regenerate a fixture table");
    table_cmd->add_option("name", o.table, "below-hyperplane (lemma46), unit-tail-family (lemma45), two-factor (lemma47)")
        ->required();
    table_cmd->add_flag("--verify", o.table_verify, "Add oracle-measured columns");
    table_cmd->add_option("--a-max", o.a_max, "Largest a for unit-tail-family (default 6)");
    table_cmd->add_option("--d-max", o.table_d_max, "Largest degree for two-factor (default 10)");
    add_oracle_options(table_cmd, o);
    add_format(table_cmd, o, "csv");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(o, out);
        if (*verify_cmd)
            return cmd_verify(o, out);
        if (*sweep_cmd)
            return cmd_sweep(o, out, err);
        if (*figure_cmd)
            return cmd_figure_data(o, out);
        return cmd_table(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    }
}

}  // namespace secant
