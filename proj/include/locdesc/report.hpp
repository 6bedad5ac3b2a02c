#pragma once

#include <string>

#include "locdesc/eval.hpp"

namespace locdesc {

// Everything a reader needs to reproduce a report. Timestamps are the
// input files' mtimes (ISO-8601 UTC), not the render time, so re-running
// over unchanged inputs produces byte-identical output.
struct RunManifest {
  std::string tool_version;
  std::string corpus_path;
  std::string corpus_mtime;
  std::string run_path;   // empty when no run file is involved
  std::string run_mtime;
  std::string bank_name;
  std::string prompt_mode;
  std::string extractor_name;
};

// Fills tool_version and the mtime fields; missing files get empty mtimes.
RunManifest make_manifest(const std::string& corpus_path, const std::string& run_path,
                          const std::string& bank_name, const std::string& prompt_mode,
                          const std::string& extractor_name);

// One-line policy summary, e.g.
// "relaxed measure=gold_coverage threshold>0.75 category-agnostic".
std::string describe_policy(const MatchPolicy& policy);

std::string render_metrics_table(const RunManifest& manifest, const MatchPolicy& policy,
                                 const CategoryMetrics& metrics);
std::string render_metrics_csv(const RunManifest& manifest, const MatchPolicy& policy,
                               const CategoryMetrics& metrics);
std::string render_metrics_json(const RunManifest& manifest, const MatchPolicy& policy,
                                const CategoryMetrics& metrics);

// The matrix renders as a count grid and a row-percentage grid.
std::string render_matrix_table(const RunManifest& manifest, const MatchPolicy& policy,
                                const ConfusionMatrix& matrix);
std::string render_matrix_csv(const RunManifest& manifest, const MatchPolicy& policy,
                              const ConfusionMatrix& matrix);

}  // namespace locdesc
