#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "skillscope/bench/metrics.hpp"

namespace skillscope {

enum class ReportFormat { Machine, Markdown };

ReportFormat report_format_from_string(std::string_view text);

/// {"tables": [{"label", "skipped", "rows": [{"skill", "n", "accuracy",
/// "f1", "routing_accuracy"}...], "overall": {...}, "errors": [{"id",
/// "message"}...]}]} with keys in that order and every rate printed with
/// exactly four decimals.
std::string machine_report(std::span<const MetricsTable> tables);

/// One section per table: a row per enabled skill then an "Avg." row.
std::string markdown_report(std::span<const MetricsTable> tables);

std::string render_report(std::span<const MetricsTable> tables, ReportFormat format);
void emit_report(std::span<const MetricsTable> tables, ReportFormat format, const std::filesystem::path& path);

}  // namespace skillscope
