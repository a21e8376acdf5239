#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "shades/classify.hpp"
#include "shades/enumerate.hpp"
#include "shades/oracle.hpp"
#include "shades/records.hpp"

namespace {

using namespace shades;

unsigned default_threads() {
  if (const char* env = std::getenv("SHADES_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

struct EnumerateArgs {
  int n = 0;
  bool classify_flag = false;
  bool essential_only = false;
  std::string format = "jsonl";
  std::string out;
  unsigned threads = default_threads();
  bool paper_order = false;
  bool stop_at_zero = false;
  bool prune = false;
};

int run_enumerate(const EnumerateArgs& args) {
  OutputFormat format = parse_format(args.format);
  auto shades_list = enumerate_basic_shades({.n = args.n,
                                             .stop_at_zero = args.stop_at_zero,
                                             .workers = args.threads,
                                             .pruning = args.prune});
  bool need_classify = args.classify_flag || args.essential_only ||
                       args.paper_order || format == OutputFormat::Csv;

  std::ofstream file;
  std::ostream& os = open_output(file, args.out);

  if (!need_classify) {
    int index = 0;
    for (auto& m : shades_list) os << render_record(make_record(++index, m), format);
    return 0;
  }

  std::vector<ClassificationRecord> records;
  records.reserve(shades_list.size());
  bool witnesses_ok = true;
  for (auto& m : shades_list) {
    records.push_back(classify(m));
    auto& rec = records.back();
    if (rec.witness && !witness_valid(m, *rec.witness)) witnesses_ok = false;
  }

  if (format == OutputFormat::Csv) {
    EnumerationReport report;
    ReportRow row{args.n, static_cast<long>(records.size()), 0, 0};
    for (auto& r : records) {
      row.shadows += r.is_shadow;
      row.essential += r.is_essential;
    }
    report.rows.push_back(row);
    os << render_report_csv(report);
    return witnesses_ok ? 0 : 1;
  }

  std::vector<const ClassificationRecord*> ordered;
  if (args.paper_order) {
    for (auto& r : records)
      if (r.is_essential) ordered.push_back(&r);
    for (auto& r : records)
      if (r.is_shadow && !r.is_essential) ordered.push_back(&r);
    for (auto& r : records)
      if (!r.is_shadow) ordered.push_back(&r);
  } else {
    for (auto& r : records) ordered.push_back(&r);
  }

  int index = 0;
  for (auto* r : ordered) {
    if (args.essential_only && !r->is_essential) continue;
    os << render_record(make_record(++index, *r), format);
  }
  if (!witnesses_ok) {
    std::cerr << "error: a computed witness failed validation\n";
    return 1;
  }
  return 0;
}

int run_report(int max_n, const std::string& format, unsigned threads) {
  EnumerationReport report;
  for (int n = 1; n <= max_n; ++n) {
    auto shades_list = enumerate_basic_shades({.n = n, .workers = threads, .pruning = true});
    ReportRow row{n, static_cast<long>(shades_list.size()), 0, 0};
    for (auto& m : shades_list) {
      auto rec = classify(m);
      row.shadows += rec.is_shadow;
      row.essential += rec.is_essential;
    }
    report.rows.push_back(row);
  }
  if (format == "csv") std::cout << render_report_csv(report);
  else std::cout << render_report_text(report);
  return 0;
}

int run_verify(int n) {
  auto generated = enumerate_basic_shades({.n = n});
  auto reference = oracle::brute_force_basic_shades(n);
  bool equal = generated.size() == reference.size() &&
               std::equal(generated.begin(), generated.end(), reference.begin());
  std::cout << "n=" << n << ": generator " << generated.size() << ", brute force "
            << reference.size() << (equal ? " [OK]\n" : " [MISMATCH]\n");
  return equal ? 0 : 1;
}

int run_classify_file(const std::string& in_path, const std::string& format_name,
                      const std::string& out_path) {
  OutputFormat format = parse_format(format_name);
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open input file: " + in_path);
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);

  bool witnesses_ok = true;
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = from_jsonl(line);
    auto m = SkewIntMatrix::from_rows(rec.matrix);
    auto c = classify(m);
    if (c.witness && !witness_valid(m, *c.witness)) witnesses_ok = false;
    os << render_record(make_record(++index, c), format);
  }
  return witnesses_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumeration and classification of basic shades and tame periodicity shadows"};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* cmd_enum = app.add_subcommand("enumerate", "Generate all basic shades of size n");
  cmd_enum->add_option("--n", enum_args.n, "matrix size (1..8)")->required();
  cmd_enum->add_flag("--classify", enum_args.classify_flag, "attach classification to each record");
  cmd_enum->add_flag("--essential-only", enum_args.essential_only, "emit only essential shadows");
  cmd_enum->add_option("--format", enum_args.format, "jsonl|text|latex|csv (default jsonl)");
  cmd_enum->add_option("--out", enum_args.out, "output file (default stdout)");
  cmd_enum->add_option("--threads", enum_args.threads, "worker count (default $SHADES_THREADS or hardware)");
  cmd_enum->add_flag("--paper-order", enum_args.paper_order,
                     "group records as essential, other shadows, non-shadows");
  cmd_enum->add_flag("--stop-at-zero", enum_args.stop_at_zero, "stop after the zero matrix");
  cmd_enum->add_flag("--prune", enum_args.prune, "enable prefix pruning");

  int report_max_n = 5;
  std::string report_format = "text";
  unsigned report_threads = default_threads();
  auto* cmd_report = app.add_subcommand("report", "Counts table (n, shades, shadows, essential)");
  cmd_report->add_option("--max-n", report_max_n, "largest size to include (default 5)");
  cmd_report->add_option("--format", report_format, "text|csv (default text)");
  cmd_report->add_option("--threads", report_threads, "worker count");

  int verify_n = 0;
  auto* cmd_verify = app.add_subcommand("verify", "Compare the generator against brute force (n <= 4)");
  cmd_verify->add_option("--n", verify_n, "matrix size (1..4)")->required();

  std::string classify_in, classify_format = "jsonl", classify_out;
  auto* cmd_classify = app.add_subcommand("classify", "Classify matrices from a JSONL file");
  cmd_classify->add_option("--in", classify_in, "input JSONL file")->required();
  cmd_classify->add_option("--format", classify_format, "jsonl|text|latex (default jsonl)");
  cmd_classify->add_option("--out", classify_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_enum) return run_enumerate(enum_args);
    if (*cmd_report) return run_report(report_max_n, report_format, report_threads);
    if (*cmd_verify) return run_verify(verify_n);
    if (*cmd_classify) return run_classify_file(classify_in, classify_format, classify_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
