#include "secant/report_io.hpp"

#include <charconv>

#include "secant/error.hpp"

namespace secant {

namespace {

Verdict verdict_from_string(const std::string& name)
{
    for (auto v : {Verdict::Match, Verdict::OracleBelowTheory, Verdict::OracleAboveTheory}) {
        if (to_string(v) == name)
            return v;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown verdict '" + name + "'");
}

std::string join_ints(const std::vector<std::int64_t>& values, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string bool_field(bool v)
{
    return v ? "true" : "false";
}

void add_diff(Json& diff, const std::string& name, std::int64_t measured, std::int64_t predicted)
{
    if (measured != predicted)
        diff.push_back(Json{{"name", name}, {"measured", measured}, {"predicted", predicted}});
}

}  // namespace

Json to_json(const Partition& lambda)
{
    return Json(lambda.parts());
}

Partition partition_from_json(const Json& j)
{
    return Partition::from_parts(j.get<std::vector<std::int64_t>>());
}

Json to_json(const ClassificationReport& rep)
{
    return Json{
        {"lambda", to_json(rep.lambda)},
        {"N", rep.ambient_dim},
        {"dim_X", rep.dim_X},
        {"exp_dim_sigma2", rep.exp_dim_sigma2},
        {"exp_dim_IZ", rep.exp_dim_IZ},
        {"defective", rep.defective},
        {"delta2", rep.delta2},
        {"dim_sigma2", rep.dim_sigma2},
        {"dim_IZ", rep.dim_IZ},
        {"fills_ambient", rep.fills_ambient},
        {"case_label", std::string(to_string(rep.case_label))},
    };
}

ClassificationReport classification_from_json(const Json& j)
{
    const auto label_name = j.at("case_label").get<std::string>();
    const auto label = case_label_from_string(label_name);
    if (!label)
        throw Error(ErrorCode::InvalidArgument, "unknown case label '" + label_name + "'");
    return ClassificationReport{
        .lambda = partition_from_json(j.at("lambda")),
        .ambient_dim = j.at("N").get<std::int64_t>(),
        .dim_X = j.at("dim_X").get<std::int64_t>(),
        .exp_dim_sigma2 = j.at("exp_dim_sigma2").get<std::int64_t>(),
        .exp_dim_IZ = j.at("exp_dim_IZ").get<std::int64_t>(),
        .defective = j.at("defective").get<bool>(),
        .delta2 = j.at("delta2").get<std::int64_t>(),
        .dim_sigma2 = j.at("dim_sigma2").get<std::int64_t>(),
        .dim_IZ = j.at("dim_IZ").get<std::int64_t>(),
        .fills_ambient = j.at("fills_ambient").get<bool>(),
        .case_label = *label,
    };
}

Json to_json(const OracleQuantities& q)
{
    return Json{
        {"dim_IF_d", q.dim_IF_d},
        {"hilbert", q.hilbert},
        {"dim_sigma2", q.dim_sigma2},
        {"dim_IZ", q.dim_IZ},
    };
}

OracleQuantities quantities_from_json(const Json& j)
{
    return OracleQuantities{
        .dim_IF_d = j.at("dim_IF_d").get<std::int64_t>(),
        .hilbert = j.at("hilbert").get<std::vector<std::int64_t>>(),
        .dim_sigma2 = j.at("dim_sigma2").get<std::int64_t>(),
        .dim_IZ = j.at("dim_IZ").get<std::int64_t>(),
    };
}

Json to_json(const OracleReport& rep)
{
    Json diff = Json::array();
    add_diff(diff, "dim_IF_d", rep.measured.dim_IF_d, rep.predicted.dim_IF_d);
    for (std::size_t j = 0; j < rep.measured.hilbert.size() && j < rep.predicted.hilbert.size(); ++j)
        add_diff(diff, "hilbert[" + std::to_string(j) + "]", rep.measured.hilbert[j], rep.predicted.hilbert[j]);
    add_diff(diff, "dim_sigma2", rep.measured.dim_sigma2, rep.predicted.dim_sigma2);
    add_diff(diff, "dim_IZ", rep.measured.dim_IZ, rep.predicted.dim_IZ);

    return Json{
        {"lambda", to_json(rep.lambda)},
        {"prime", rep.prime},
        {"seeds", rep.seeds},
        {"trials", rep.trials},
        {"measured", to_json(rep.measured)},
        {"predicted", to_json(rep.predicted)},
        {"sigma2_per_trial", rep.sigma2_per_trial},
        {"grassmann_consistent", rep.grassmann_consistent},
        {"verdict", std::string(to_string(rep.verdict))},
        {"diff", diff},
    };
}

OracleReport oracle_report_from_json(const Json& j)
{
    return OracleReport{
        .lambda = partition_from_json(j.at("lambda")),
        .prime = j.at("prime").get<std::uint32_t>(),
        .seeds = j.at("seeds").get<std::vector<std::uint64_t>>(),
        .trials = j.at("trials").get<int>(),
        .measured = quantities_from_json(j.at("measured")),
        .predicted = quantities_from_json(j.at("predicted")),
        .sigma2_per_trial = j.at("sigma2_per_trial").get<std::vector<std::int64_t>>(),
        .grassmann_consistent = j.at("grassmann_consistent").get<bool>(),
        .verdict = verdict_from_string(j.at("verdict").get<std::string>()),
    };
}

Json to_json(const SpecializationReport& rep)
{
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        checks.push_back(Json{
            {"branch", std::string(to_string(c.branch))},
            {"bound", c.bound},
            {"passed", c.passed},
        });
    }
    return Json{
        {"lambda", to_json(rep.lambda)},
        {"factor", rep.factor},
        {"lowered", to_json(rep.lowered)},
        {"dim_Z", rep.dim_Z},
        {"dim_Z_specialized", rep.dim_Z_specialized},
        {"dim_Z_residual", rep.dim_Z_residual},
        {"checks", checks},
        {"sigma2_per_trial", rep.sigma2_per_trial},
        {"passed", rep.passed},
    };
}

std::vector<std::string> classification_csv_header()
{
    return {"lambda", "N", "dim_X", "exp_dim_sigma2", "exp_dim_IZ", "defective", "delta2",
            "dim_sigma2", "dim_IZ", "fills_ambient", "case_label"};
}

std::vector<std::string> classification_csv_fields(const ClassificationReport& rep)
{
    return {rep.lambda.to_csv_list(),
            std::to_string(rep.ambient_dim),
            std::to_string(rep.dim_X),
            std::to_string(rep.exp_dim_sigma2),
            std::to_string(rep.exp_dim_IZ),
            bool_field(rep.defective),
            std::to_string(rep.delta2),
            std::to_string(rep.dim_sigma2),
            std::to_string(rep.dim_IZ),
            bool_field(rep.fills_ambient),
            std::string(to_string(rep.case_label))};
}

std::vector<std::string> oracle_csv_header()
{
    return {"lambda", "prime", "trials", "measured_dim_IF_d", "predicted_dim_IF_d", "measured_hilbert",
            "predicted_hilbert", "measured_dim_sigma2", "predicted_dim_sigma2", "measured_dim_IZ",
            "predicted_dim_IZ", "grassmann_consistent", "verdict"};
}

std::vector<std::string> oracle_csv_fields(const OracleReport& rep)
{
    return {rep.lambda.to_csv_list(),
            std::to_string(rep.prime),
            std::to_string(rep.trials),
            std::to_string(rep.measured.dim_IF_d),
            std::to_string(rep.predicted.dim_IF_d),
            join_ints(rep.measured.hilbert, ' '),
            join_ints(rep.predicted.hilbert, ' '),
            std::to_string(rep.measured.dim_sigma2),
            std::to_string(rep.predicted.dim_sigma2),
            std::to_string(rep.measured.dim_IZ),
            std::to_string(rep.predicted.dim_IZ),
            bool_field(rep.grassmann_consistent),
            std::string(to_string(rep.verdict))};
}

std::string csv_line(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\" \t\n") == std::string::npos) {
            out += f;
            continue;
        }
        out += '"';
        for (char c : f) {
            if (c == '"')
                out += '"';
            out += c;
        }
        out += '"';
    }
    return out;
}

Partition parse_partition(const std::string& text)
{
    std::vector<std::int64_t> parts;
    if (text.empty())
        throw Error(ErrorCode::EmptyInput, "empty partition");
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos)
            end = text.size();
        std::string_view token(text.data() + start, end - start);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw Error(ErrorCode::InvalidArgument, "'" + std::string(token) + "' is not an integer");
        parts.push_back(value);
        start = end + 1;
    }
    return Partition::from_parts(parts);
}

}  // namespace secant
