#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shades/classify.hpp"

namespace shades {

enum class OutputFormat { Jsonl, Text, Latex, Csv };

/// Parses "jsonl" | "text" | "latex" | "csv"; throws std::invalid_argument.
OutputFormat parse_format(const std::string& s);

/// One emitted shade plus (optionally) its classification, in serializable
/// form. Rationals are lowest-terms "p/q" strings; generic forms are rendered
/// strings like "2 v1 - v3".
struct OutputRecord {
  int n = 0;
  int index = 0;  // 1-based position in emission order
  std::vector<std::vector<int>> matrix;

  bool classified = false;
  bool is_shadow = false;
  bool is_essential = false;
  bool self_opposite = false;
  std::string filter_verdict;
  std::vector<std::vector<std::string>> nullspace_basis;
  std::vector<std::string> x;        // generic nullspace vector, n forms
  std::vector<std::string> c_upper;  // generic kernel, upper triangle raster
  int kernel_parameter_count = 0;
  std::optional<std::vector<std::vector<long long>>> witness;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(int index, const SkewIntMatrix& matrix);
OutputRecord make_record(int index, const ClassificationRecord& rec);

std::string to_jsonl(const OutputRecord& rec);
OutputRecord from_jsonl(const std::string& line);

/// Renders one record: jsonl is one JSON object; text shows the matrix, the
/// generic x as a column and the upper triangle of the generic C with "."
/// below the diagonal; latex emits a bmatrix triple; csv is not a per-record
/// format (throws).
std::string render_record(const OutputRecord& rec, OutputFormat format);

struct ReportRow {
  int n = 0;
  long shades = 0;
  long shadows = 0;
  long essential = 0;
};

struct EnumerationReport {
  std::vector<ReportRow> rows;
};

std::string render_report_csv(const EnumerationReport& report);
std::string render_report_text(const EnumerationReport& report);

}  // namespace shades
