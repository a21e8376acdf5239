#include "shades/records.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace shades {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
  if (s == "jsonl") return OutputFormat::Jsonl;
  if (s == "text") return OutputFormat::Text;
  if (s == "latex") return OutputFormat::Latex;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format: " + s);
}

OutputRecord make_record(int index, const SkewIntMatrix& matrix) {
  OutputRecord rec;
  rec.n = matrix.size();
  rec.index = index;
  rec.matrix = matrix.rows();
  return rec;
}

OutputRecord make_record(int index, const ClassificationRecord& c) {
  OutputRecord rec = make_record(index, c.matrix);
  rec.classified = true;
  rec.is_shadow = c.is_shadow;
  rec.is_essential = c.is_essential;
  rec.self_opposite = c.self_opposite;
  rec.filter_verdict = filter_kind_name(c.filter.kind);
  for (auto& vec : c.nullspace_basis) {
    std::vector<std::string> row;
    row.reserve(vec.size());
    for (auto& v : vec) row.push_back(to_fraction_string(v));
    rec.nullspace_basis.push_back(std::move(row));
  }
  for (auto& f : c.x.entries) rec.x.push_back(f.to_string("v"));
  for (auto& f : c.c_generic.upper) rec.c_upper.push_back(f.to_string("c"));
  rec.kernel_parameter_count = c.c_generic.param_count;
  if (c.witness) {
    std::vector<std::vector<long long>> w;
    for (auto& row : *c.witness) {
      std::vector<long long> r;
      for (auto& v : row) r.push_back(v.convert_to<long long>());
      w.push_back(std::move(r));
    }
    rec.witness = std::move(w);
  }
  return rec;
}

std::string to_jsonl(const OutputRecord& rec) {
  json j;
  j["n"] = rec.n;
  j["index"] = rec.index;
  j["matrix"] = rec.matrix;
  if (rec.classified) {
    j["is_shadow"] = rec.is_shadow;
    j["is_essential"] = rec.is_essential;
    j["self_opposite"] = rec.self_opposite;
    j["filter_verdict"] = rec.filter_verdict;
    j["nullspace_basis"] = rec.nullspace_basis;
    j["x"] = rec.x;
    j["c_upper"] = rec.c_upper;
    j["kernel_parameter_count"] = rec.kernel_parameter_count;
    if (rec.witness) j["witness"] = *rec.witness;
  }
  return j.dump();
}

OutputRecord from_jsonl(const std::string& line) {
  json j = json::parse(line);
  OutputRecord rec;
  rec.n = j.at("n").get<int>();
  rec.index = j.at("index").get<int>();
  rec.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
  if (j.contains("filter_verdict")) {
    rec.classified = true;
    rec.is_shadow = j.at("is_shadow").get<bool>();
    rec.is_essential = j.at("is_essential").get<bool>();
    rec.self_opposite = j.at("self_opposite").get<bool>();
    rec.filter_verdict = j.at("filter_verdict").get<std::string>();
    rec.nullspace_basis = j.at("nullspace_basis").get<std::vector<std::vector<std::string>>>();
    rec.x = j.at("x").get<std::vector<std::string>>();
    rec.c_upper = j.at("c_upper").get<std::vector<std::string>>();
    rec.kernel_parameter_count = j.at("kernel_parameter_count").get<int>();
    if (j.contains("witness"))
      rec.witness = j.at("witness").get<std::vector<std::vector<long long>>>();
  }
  return rec;
}

namespace {

std::string render_matrix_rows(const std::vector<std::vector<int>>& m) {
  std::ostringstream os;
  for (auto& row : m) {
    os << '[';
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << row[j];
    }
    os << "]\n";
  }
  return os.str();
}

std::string render_text(const OutputRecord& rec) {
  std::ostringstream os;
  os << '(' << rec.index << ") n=" << rec.n;
  if (rec.classified) {
    os << (rec.is_shadow ? " shadow" : " non-shadow");
    if (rec.is_essential) os << " essential";
    if (rec.self_opposite) os << " self-opposite";
  }
  os << '\n' << render_matrix_rows(rec.matrix);
  if (rec.classified) {
    os << "x:\n";
    for (auto& f : rec.x) os << "  " << f << '\n';
    os << "C:\n";
    int n = rec.n;
    for (int i = 0; i < n; ++i) {
      os << "  ";
      for (int j = 0; j < n; ++j) {
        if (j) os << "  ";
        if (j < i) os << '.';
        else os << rec.c_upper[upper_index(n, i, j)];
      }
      os << '\n';
    }
    if (rec.witness) {
      os << "witness:\n";
      for (auto& row : *rec.witness) {
        os << "  [";
        for (size_t j = 0; j < row.size(); ++j) {
          if (j) os << ' ';
          os << row[j];
        }
        os << "]\n";
      }
    }
  }
  return os.str();
}

std::string render_latex(const OutputRecord& rec) {
  std::ostringstream os;
  os << "% (" << rec.index << ")\n$\n  \\begin{bmatrix}\n";
  for (auto& row : rec.matrix) {
    os << "    ";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << " & ";
      os << row[j];
    }
    os << " \\\\\n";
  }
  os << "  \\end{bmatrix}\n";
  if (rec.classified) {
    os << "\\begin{bmatrix} ";
    for (size_t i = 0; i < rec.x.size(); ++i) {
      if (i) os << " \\\\ ";
      os << rec.x[i];
    }
    os << " \\end{bmatrix}\n  \\begin{bmatrix}\n";
    int n = rec.n;
    for (int i = 0; i < n; ++i) {
      os << "    ";
      for (int j = 0; j < n; ++j) {
        if (j) os << " & ";
        if (j < i) os << "\\cdot";
        else os << rec.c_upper[upper_index(n, i, j)];
      }
      os << " \\\\\n";
    }
    os << "  \\end{bmatrix}\n";
  }
  os << "$\n";
  return os.str();
}

}  // namespace

std::string render_record(const OutputRecord& rec, OutputFormat format) {
  switch (format) {
    case OutputFormat::Jsonl: return to_jsonl(rec) + "\n";
    case OutputFormat::Text: return render_text(rec) + "\n";
    case OutputFormat::Latex: return render_latex(rec) + "\n";
    case OutputFormat::Csv:
      throw std::invalid_argument("csv renders counts, not records");
  }
  throw std::invalid_argument("unknown format");
}

std::string render_report_csv(const EnumerationReport& report) {
  std::ostringstream os;
  os << "n,shades,shadows,essential\n";
  for (auto& r : report.rows)
    os << r.n << ',' << r.shades << ',' << r.shadows << ',' << r.essential << '\n';
  return os.str();
}

std::string render_report_text(const EnumerationReport& report) {
  std::ostringstream os;
  os << "  n     shades    shadows  essential\n";
  for (auto& r : report.rows) {
    os.width(3);
    os << r.n;
    os.width(11);
    os << r.shades;
    os.width(11);
    os << r.shadows;
    os.width(11);
    os << r.essential;
    os << '\n';
  }
  return os.str();
}

}  // namespace shades
