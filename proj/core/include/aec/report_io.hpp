#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "aec/engine.hpp"
#include "aec/shap.hpp"
#include "aec/stability.hpp"

namespace aec {

/// CSV bodies for the report types. Rows are ordered by rank (top feature
/// first); rank columns are 1-based. All real values use 17-significant-digit
/// formatting.
std::string aec_report_csv(const AecReport& report);
std::string shap_report_csv(const ShapReport& report);
std::string comparison_csv(const PairedRanking& table);
std::string nmr_csv(const NmrResult& result);
std::string nmr_comparison_csv(const std::vector<NmrComparisonRow>& rows);

void write_aec_report_csv(const AecReport& report, const std::filesystem::path& path);
void write_shap_report_csv(const ShapReport& report, const std::filesystem::path& path);
void write_comparison_csv(const PairedRanking& table, const std::filesystem::path& path);
void write_nmr_csv(const NmrResult& result, const std::filesystem::path& path);
void write_nmr_comparison_csv(const std::vector<NmrComparisonRow>& rows,
                              const std::filesystem::path& path);

}  // namespace aec
