#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "secant/formulas.hpp"
#include "secant/oracle.hpp"

// JSON and CSV encodings of the report types. JSON objects are emitted with
// a fixed key order so identical reports serialize to identical bytes.

namespace secant {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
/// Throws Error (from Partition validation) or nlohmann::json::exception.
Partition partition_from_json(const Json& j);

Json to_json(const ClassificationReport& rep);
ClassificationReport classification_from_json(const Json& j);

Json to_json(const OracleQuantities& q);
OracleQuantities quantities_from_json(const Json& j);

/// Includes a "diff" array listing every quantity where measured != predicted.
Json to_json(const OracleReport& rep);
OracleReport oracle_report_from_json(const Json& j);

Json to_json(const SpecializationReport& rep);

std::vector<std::string> classification_csv_header();
std::vector<std::string> classification_csv_fields(const ClassificationReport& rep);

std::vector<std::string> oracle_csv_header();
std::vector<std::string> oracle_csv_fields(const OracleReport& rep);

/// One CSV line (no trailing newline); fields containing ',', '"' or
/// whitespace are quoted.
std::string csv_line(const std::vector<std::string>& fields);

/// Partition syntax of the command line: comma-separated positive integers,
/// any order. Throws Error(InvalidArgument) on malformed text, plus the
/// Partition validation errors.
Partition parse_partition(const std::string& text);

}  // namespace secant
