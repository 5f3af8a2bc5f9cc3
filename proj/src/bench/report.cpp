#include "skillscope/bench/report.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {

namespace {

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

void rates(std::string& out, int n, double acc, double f, double routing) {
  out += "\"n\": " + std::to_string(n);
  out += ", \"accuracy\": " + fixed4(acc);
  out += ", \"f1\": " + fixed4(f);
  out += ", \"routing_accuracy\": " + fixed4(routing);
}

}  // namespace

ReportFormat report_format_from_string(std::string_view text) {
  const std::string t = to_lower(trim(text));
  if (t == "machine" || t == "json") return ReportFormat::Machine;
  if (t == "markdown" || t == "md") return ReportFormat::Markdown;
  throw Error(ErrorCode::ConfigError, "unknown report format '" + std::string(text) + "'");
}

std::string machine_report(std::span<const MetricsTable> tables) {
  std::string out = "{\n  \"tables\": [";
  for (std::size_t ti = 0; ti < tables.size(); ++ti) {
    const auto& t = tables[ti];
    out += ti == 0 ? "\n" : ",\n";
    out += "    {\n";
    out += "      \"label\": " + json_string(t.label) + ",\n";
    out += "      \"skipped\": " + std::to_string(t.skipped) + ",\n";
    out += "      \"rows\": [";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto& r = t.rows[i];
      out += i == 0 ? "\n" : ",\n";
      out += "        {\"skill\": " + json_string(r.skill.name()) + ", ";
      rates(out, r.n, r.accuracy, r.f1, r.routing_accuracy);
      out += "}";
    }
    out += t.rows.empty() ? "],\n" : "\n      ],\n";
    out += "      \"overall\": {";
    rates(out, t.overall.n, t.overall.accuracy, t.overall.f1, t.overall.routing_accuracy);
    out += "},\n";
    out += "      \"errors\": [";
    for (std::size_t i = 0; i < t.errors.size(); ++i) {
      out += i == 0 ? "\n" : ",\n";
      out += "        {\"id\": " + json_string(t.errors[i].id) + ", \"message\": " + json_string(t.errors[i].message) + "}";
    }
    out += t.errors.empty() ? "]\n" : "\n      ]\n";
    out += "    }";
  }
  out += tables.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string markdown_report(std::span<const MetricsTable> tables) {
  std::string out;
  for (const auto& t : tables) {
    if (!out.empty()) out += "\n";
    out += "### " + t.label + "\n\n";
    out += "| Skill | N | ACC | F1 | Routing |\n";
    out += "|---|---:|---:|---:|---:|\n";
    for (const auto& r : t.rows) {
      out += "| " + std::string(r.skill.name()) + " | " + std::to_string(r.n) + " | ";
      if (r.n == 0) {
        out += "- | - | - |\n";
      } else {
        out += fixed4(r.accuracy) + " | " + fixed4(r.f1) + " | " + fixed4(r.routing_accuracy) + " |\n";
      }
    }
    out += "| Avg. | " + std::to_string(t.overall.n) + " | " + fixed4(t.overall.accuracy) + " | " +
           fixed4(t.overall.f1) + " | " + fixed4(t.overall.routing_accuracy) + " |\n";
    if (!t.errors.empty()) {
      out += "\nErrors:\n\n";
      for (const auto& e : t.errors) out += "- `" + e.id + "`: " + e.message + "\n";
    }
  }
  return out;
}

std::string render_report(std::span<const MetricsTable> tables, ReportFormat format) {
  return format == ReportFormat::Machine ? machine_report(tables) : markdown_report(tables);
}

void emit_report(std::span<const MetricsTable> tables, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write report " + path.string());
  out << render_report(tables, format);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

}  // namespace skillscope
