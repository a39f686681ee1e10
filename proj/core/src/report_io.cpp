#include "aec/report_io.hpp"

#include <cmath>

#include "aec/csv.hpp"

namespace aec {

std::string aec_report_csv(const AecReport& report) {
  std::string body = "feature,target_slope,collinearity_sum,score,abs_score,rank\n";
  for (std::size_t r = 0; r < report.rank.size(); ++r) {
    const auto j = static_cast<std::size_t>(report.rank[r]);
    const auto idx = static_cast<Eigen::Index>(j);
    body += report.names[j];
    body += ',';
    body += format_value(report.target_slope(idx));
    body += ',';
    body += format_value(report.collinearity_sum(idx));
    body += ',';
    body += format_value(report.score(idx));
    body += ',';
    body += format_value(std::abs(report.score(idx)));
    body += ',';
    body += std::to_string(r + 1);
    body += '\n';
  }
  return body;
}

std::string shap_report_csv(const ShapReport& report) {
  std::string body = "feature,global_importance,rank\n";
  for (std::size_t r = 0; r < report.rank.size(); ++r) {
    const auto j = static_cast<std::size_t>(report.rank[r]);
    body += report.names[j];
    body += ',';
    body += format_value(report.global_importance(static_cast<Eigen::Index>(j)));
    body += ',';
    body += std::to_string(r + 1);
    body += '\n';
  }
  return body;
}

std::string comparison_csv(const PairedRanking& table) {
  std::string body = "rank,aec,linear_shap,displacement\n";
  for (std::size_t r = 0; r < table.aec_order.size(); ++r) {
    body += std::to_string(r + 1);
    body += ',';
    body += table.aec_order[r];
    body += ',';
    body += table.shap_order[r];
    body += ',';
    body += std::to_string(table.displacement[r]);
    body += '\n';
  }
  return body;
}

std::string nmr_csv(const NmrResult& result) {
  std::string body = "step,removed_feature,movement_count,remaining_count\n";
  long movements = 0;
  long remaining = 0;
  for (std::size_t s = 0; s < result.steps.size(); ++s) {
    const NmrStep& step = result.steps[s];
    body += std::to_string(s + 1);
    body += ',';
    body += step.removed_feature;
    body += ',';
    body += std::to_string(step.movement_count);
    body += ',';
    body += std::to_string(step.remaining_count);
    body += '\n';
    movements += step.movement_count;
    remaining += step.remaining_count;
  }
  body += "nmr," + format_value(result.nmr) + ',' + std::to_string(movements) + ',' +
          std::to_string(remaining) + '\n';
  return body;
}

std::string nmr_comparison_csv(const std::vector<NmrComparisonRow>& rows) {
  std::string body = "method,nmr\n";
  for (const auto& row : rows) {
    body += row.method;
    body += ',';
    body += format_value(row.nmr);
    body += '\n';
  }
  return body;
}

void write_aec_report_csv(const AecReport& report, const std::filesystem::path& path) {
  write_text_file(path, aec_report_csv(report));
}

void write_shap_report_csv(const ShapReport& report, const std::filesystem::path& path) {
  write_text_file(path, shap_report_csv(report));
}

void write_comparison_csv(const PairedRanking& table, const std::filesystem::path& path) {
  write_text_file(path, comparison_csv(table));
}

void write_nmr_csv(const NmrResult& result, const std::filesystem::path& path) {
  write_text_file(path, nmr_csv(result));
}

void write_nmr_comparison_csv(const std::vector<NmrComparisonRow>& rows,
                              const std::filesystem::path& path) {
  write_text_file(path, nmr_comparison_csv(rows));
}

}  // namespace aec
