#pragma once

#include "polyhahn/domain.hpp"
#include "polyhahn/limits.hpp"
#include "polyhahn/operators.hpp"
#include "polyhahn/spectra.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace polyhahn {

inline constexpr const char* kReportSchema = "polyhahn/1";

enum class Format { Json, Csv };

/// "json" or "csv"; throws OutOfRange otherwise.
Format parse_format(std::string_view text);

// JSON bodies (objects without the schema field) and CSV tables. Rationals
// appear as "p/q" strings; decimals only in limit scans.

std::string to_json(const LatticeDomain& v);
std::string to_csv(const LatticeDomain& v);
std::string to_json(const IndexSet& h);
std::string to_csv(const IndexSet& h);
std::string to_json(const GramMatrix& g);
std::string to_csv(const GramMatrix& g);
std::string to_json(const IdentityReport& r);
std::string to_csv(const IdentityReport& r);
std::string to_json(const OrthogonalityReport& r);
std::string to_json(const SpectraReport& r);
std::string to_csv(const SpectraReport& r);
std::string to_json(const ShuffleReport& r);
std::string to_json(const ProjectionShuffleReport& r);
std::string to_json(const CountingReport& r);
std::string to_csv(const CountingReport& r);
std::string to_json(const LimitScan& s);
/// rung parameter, probe id, error decimal, fitted order
std::string to_csv(const LimitScan& s);
/// Nonzero entries with the points they connect.
std::string to_json(const SparseMatrix& m, const LatticeDomain& domain);
std::string to_csv(const SparseMatrix& m, const LatticeDomain& domain);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(std::string_view text);

/// Writes to a temporary file in the target directory, then renames it over
/// the destination.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace polyhahn
