#include "locdesc/report.hpp"

#include <sys/stat.h>

#include <cstdio>
#include <ctime>
#include <sstream>

#include "json.hpp"
#include "locdesc/version.hpp"

namespace locdesc {

namespace {

std::string mtime_utc(const std::string& path) {
  struct stat st{};
  if (path.empty() || ::stat(path.c_str(), &st) != 0) return "";
  std::tm tm{};
  gmtime_r(&st.st_mtime, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* measure_name(OverlapMeasure m) {
  switch (m) {
    case OverlapMeasure::GoldCoverage: return "gold_coverage";
    case OverlapMeasure::PredictionCoverage: return "prediction_coverage";
    case OverlapMeasure::Jaccard: return "jaccard";
  }
  return "gold_coverage";
}

std::string threshold_text(double threshold) {
  std::ostringstream out;
  out << threshold;
  return out.str();
}

// Shared "# key: value" preamble for the text and CSV renderings.
std::string manifest_lines(const RunManifest& m, const MatchPolicy& policy) {
  std::string out;
  out += "# tool_version: " + m.tool_version + "\n";
  out += "# corpus: " + m.corpus_path;
  if (!m.corpus_mtime.empty()) out += " (mtime " + m.corpus_mtime + ")";
  out += "\n";
  if (!m.run_path.empty()) {
    out += "# run: " + m.run_path;
    if (!m.run_mtime.empty()) out += " (mtime " + m.run_mtime + ")";
    out += "\n";
  }
  out += "# bank: " + m.bank_name + "  prompt_mode: " + m.prompt_mode +
         "  extractor: " + m.extractor_name + "\n";
  out += "# policy: " + describe_policy(policy) + "\n";
  return out;
}

struct MetricsRows {
  std::vector<std::pair<std::string, const MetricRow*>> rows;  // label + row
};

MetricsRows collect_rows(const CategoryMetrics& metrics) {
  MetricsRows out;
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    out.rows.emplace_back(std::string(category_code(static_cast<Category>(i))),
                          &metrics.per_category[i]);
  }
  out.rows.emplace_back("overall", &metrics.overall);
  return out;
}

constexpr std::size_t kMatrixSize = ConfusionMatrix::kSize;

std::string matrix_row_label(std::size_t row) {
  if (row == ConfusionMatrix::kNotInGroundTruth) return "Not in ground truth";
  return std::string(category_code(static_cast<Category>(row)));
}

std::string matrix_col_label(std::size_t col) {
  if (col == ConfusionMatrix::kMissed) return "Missed";
  return std::string(category_code(static_cast<Category>(col)));
}

}  // namespace

RunManifest make_manifest(const std::string& corpus_path, const std::string& run_path,
                          const std::string& bank_name, const std::string& prompt_mode,
                          const std::string& extractor_name) {
  RunManifest m;
  m.tool_version = kToolVersion;
  m.corpus_path = corpus_path;
  m.corpus_mtime = mtime_utc(corpus_path);
  m.run_path = run_path;
  m.run_mtime = mtime_utc(run_path);
  m.bank_name = bank_name;
  m.prompt_mode = prompt_mode;
  m.extractor_name = extractor_name;
  return m;
}

std::string describe_policy(const MatchPolicy& policy) {
  std::string out;
  if (policy.mode == MatchMode::Strict) {
    out = "strict";
  } else {
    out = "relaxed measure=" + std::string(measure_name(policy.measure)) + " threshold>" +
          threshold_text(policy.threshold);
  }
  out += policy.category_aware ? " category-aware" : " category-agnostic";
  return out;
}

std::string render_metrics_table(const RunManifest& manifest, const MatchPolicy& policy,
                                 const CategoryMetrics& metrics) {
  std::string out = manifest_lines(manifest, policy);
  char line[160];
  std::snprintf(line, sizeof line, "%-9s %9s %10s %9s %10s %8s %8s\n", "category", "correct",
                "predicted", "gold", "precision", "recall", "f_score");
  out += line;
  for (const auto& [label, row] : collect_rows(metrics).rows) {
    std::snprintf(line, sizeof line, "%-9s %9zu %10zu %9zu %10s %8s %8s\n", label.c_str(),
                  row->correct, row->predicted, row->gold, fixed3(row->precision).c_str(),
                  fixed3(row->recall).c_str(), fixed3(row->f_score).c_str());
    out += line;
  }
  return out;
}

std::string render_metrics_csv(const RunManifest& manifest, const MatchPolicy& policy,
                               const CategoryMetrics& metrics) {
  std::string out = manifest_lines(manifest, policy);
  out += "category,correct,predicted,gold,precision,recall,f_score\n";
  for (const auto& [label, row] : collect_rows(metrics).rows) {
    out += label + "," + std::to_string(row->correct) + "," + std::to_string(row->predicted) +
           "," + std::to_string(row->gold) + "," + fixed3(row->precision) + "," +
           fixed3(row->recall) + "," + fixed3(row->f_score) + "\n";
  }
  return out;
}

std::string render_metrics_json(const RunManifest& manifest, const MatchPolicy& policy,
                                const CategoryMetrics& metrics) {
  nlohmann::ordered_json manifest_doc = {
      {"tool_version", manifest.tool_version},
      {"corpus_path", manifest.corpus_path},
      {"corpus_mtime", manifest.corpus_mtime},
      {"run_path", manifest.run_path},
      {"run_mtime", manifest.run_mtime},
      {"bank", manifest.bank_name},
      {"prompt_mode", manifest.prompt_mode},
      {"extractor", manifest.extractor_name},
  };
  nlohmann::ordered_json policy_doc = {
      {"mode", policy.mode == MatchMode::Strict ? "strict" : "relaxed"},
      {"measure", measure_name(policy.measure)},
      {"threshold", policy.threshold},
      {"category_aware", policy.category_aware},
  };
  auto row_doc = [](const MetricRow& row) {
    return nlohmann::ordered_json{{"correct", row.correct}, {"predicted", row.predicted},
                                  {"gold", row.gold},       {"precision", row.precision},
                                  {"recall", row.recall},   {"f_score", row.f_score}};
  };
  nlohmann::ordered_json per_category = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    per_category[std::string(category_code(static_cast<Category>(i)))] =
        row_doc(metrics.per_category[i]);
  }
  nlohmann::ordered_json doc = {{"manifest", manifest_doc},
                                {"policy", policy_doc},
                                {"per_category", per_category},
                                {"overall", row_doc(metrics.overall)}};
  return doc.dump(2) + "\n";
}

std::string render_matrix_table(const RunManifest& manifest, const MatchPolicy& policy,
                                const ConfusionMatrix& matrix) {
  std::string out = manifest_lines(manifest, policy);
  // Cells render as "count percent". Compute one shared cell width.
  std::vector<std::vector<std::string>> cells(kMatrixSize,
                                              std::vector<std::string>(kMatrixSize));
  std::size_t width = 7;
  for (std::size_t r = 0; r < kMatrixSize; ++r) {
    for (std::size_t c = 0; c < kMatrixSize; ++c) {
      cells[r][c] = std::to_string(matrix.counts[r][c]) + " " +
                    format_percent(matrix.percent_hundredths(r, c));
      width = std::max(width, cells[r][c].size());
    }
  }
  std::size_t label_width = std::string("Not in ground truth").size();
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out += pad("gold \\ predicted", label_width);
  for (std::size_t c = 0; c < kMatrixSize; ++c) out += "  " + pad(matrix_col_label(c), width);
  out += "\n";
  for (std::size_t r = 0; r < kMatrixSize; ++r) {
    out += pad(matrix_row_label(r), label_width);
    for (std::size_t c = 0; c < kMatrixSize; ++c) out += "  " + pad(cells[r][c], width);
    out += "\n";
  }
  return out;
}

std::string render_matrix_csv(const RunManifest& manifest, const MatchPolicy& policy,
                              const ConfusionMatrix& matrix) {
  std::string out = manifest_lines(manifest, policy);
  auto header = [&] {
    std::string h = "gold";
    for (std::size_t c = 0; c < kMatrixSize; ++c) h += "," + matrix_col_label(c);
    return h + "\n";
  };
  out += "# counts\n";
  out += header();
  for (std::size_t r = 0; r < kMatrixSize; ++r) {
    out += matrix_row_label(r);
    for (std::size_t c = 0; c < kMatrixSize; ++c) {
      out += "," + std::to_string(matrix.counts[r][c]);
    }
    out += "\n";
  }
  out += "# percentages\n";
  out += header();
  for (std::size_t r = 0; r < kMatrixSize; ++r) {
    out += matrix_row_label(r);
    for (std::size_t c = 0; c < kMatrixSize; ++c) {
      std::int64_t h = matrix.percent_hundredths(r, c);
      char buf[32];
      std::snprintf(buf, sizeof buf, ",%lld.%02lld", static_cast<long long>(h / 100),
                    static_cast<long long>(h % 100));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace locdesc
