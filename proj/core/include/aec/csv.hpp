#pragma once

#include <filesystem>
#include <string>

#include "aec/dataset.hpp"

namespace aec {

/// Formats a double with 17 significant digits ("%.17g"), enough for an
/// exact parse-back. Every CSV emitter in the library uses this.
std::string format_value(double v);

/// Loads a comma-separated file (UTF-8, header row, '.' decimal point, no
/// quoting). The target column is split off as the target vector; remaining
/// columns keep their file order as features.
Dataset load_csv(const std::filesystem::path& path, const std::string& target_column,
                 TaskKind task);

/// Writes feature columns in order followed by the target as the last column.
void write_dataset_csv(const Dataset& d, const std::filesystem::path& path,
                       const std::string& target_name = "target");

/// Matrix CSV with a leading name column and a name header row.
void write_correlation_csv(const CorrelationMatrix& c, const std::filesystem::path& path);

/// Overwrites `path` with `content`, creating parent directories as needed.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace aec
