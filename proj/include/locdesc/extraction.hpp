#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locdesc/prompting.hpp"

namespace locdesc {

// One model answer, as returned by an extractor for one message.
struct RawAnswer {
  std::string message_id;
  std::string text;
};

// One location description claimed by an answer. category is empty when the
// answer piece carried no parsable "Ck:" prefix.
struct Prediction {
  std::optional<Category> category;
  std::string surface;

  bool operator==(const Prediction&) const = default;
};

// A prediction anchored to the message text; range is empty when the surface
// does not occur in the text at all.
struct AlignedPrediction {
  Prediction prediction;
  std::optional<CharRange> range;

  bool operator==(const AlignedPrediction&) const = default;
};

// Total parser for answer lines in the "<code>: <surface>; ..." grammar.
// Never throws: the sentinels "", "None", "N/A" (case-insensitive, after
// trimming) yield an empty list; pieces without a valid category code become
// category-less predictions over the whole piece.
std::vector<Prediction> parse_answer(std::string_view answer);

// Anchors surfaces to the message's canonical text: ASCII-case-insensitive,
// whitespace runs compare equal to a single space. Each prediction takes the
// leftmost occurrence that does not overlap an already-aligned range; if all
// occurrences are taken, the leftmost is reused; if none exist, the
// prediction stays unaligned.
std::vector<AlignedPrediction> align(const AnnotatedMessage& message,
                                     const std::vector<Prediction>& predictions);

// All occurrences of `surface` in `text` under the alignment equivalence.
std::vector<CharRange> find_occurrences(std::string_view text, std::string_view surface);

class Extractor {
 public:
  virtual ~Extractor() = default;
  virtual std::string name() const = 0;
  // Answer text for one message. `prompt` is the fully rendered prompt;
  // offline extractors may ignore it.
  virtual std::string answer(const AnnotatedMessage& message, const std::string& prompt) = 0;
};

// Replays the gold annotation as the answer; the evaluation fixed point.
std::unique_ptr<Extractor> make_echo_gold();

// Rule-based baseline over the token stream: street suffixes (rd/st/ave/
// blvd/ln/dr), "exit <N>", "X & Y" intersections, and 5-digit ZIP
// attachment. Emits category-less predictions.
std::unique_ptr<Extractor> make_regex_baseline();

// Configuration for the remote completion-endpoint extractor. The auth token
// itself is never stored: only the name of the environment variable that
// holds it.
struct ExtractorConfig {
  std::string endpoint;            // e.g. "https://api.example.com/v1/completions"
  std::string request_template;    // JSON body with {{PROMPT}} (and optional {{TEMPERATURE}})
  std::string response_text_path;  // JSON pointer ("/choices/0/text") or dotted path
  std::string auth_env_var = "LLM_API_TOKEN";
  int max_retries = 3;       // additional attempts after the first
  int backoff_base_ms = 250; // delay doubles per retry
  int max_in_flight = 2;
  int timeout_ms = 30000;
  double temperature = 0.0;
};

// Parses and validates a config JSON object; throws RemoteError(BadConfig).
ExtractorConfig parse_extractor_config(std::string_view json_text);

std::unique_ptr<Extractor> make_remote(ExtractorConfig config);

// One line of a run file: the answer for one message plus enough context to
// evaluate it later.
struct RunRecord {
  std::string id;
  std::string answer;
  std::string prompt_mode;  // "geo" | "default"
  std::string bank;         // bank name, or "default"

  bool operator==(const RunRecord&) const = default;
};

std::vector<RunRecord> read_run_file(const std::string& path);

// How prompts are built during a run: mode "default" ignores the bank;
// mode "geo" requires one.
struct PromptPlan {
  std::string mode = "geo";
  const ExampleBank* bank = nullptr;
};

struct RunProgress {
  std::size_t answered = 0;  // answers produced this run
  std::size_t skipped = 0;   // ids already present in the run file
};

// Runs the extractor over every message, appending one JSONL record per
// answer to `run_path` in corpus order. Ids already present in the file are
// skipped, so interrupted runs resume. `concurrency` bounds in-flight
// extractor calls (clamped to at least 1).
RunProgress run_extraction(const Corpus& corpus, Extractor& extractor, const PromptPlan& plan,
                           const std::string& run_path, int concurrency = 1);

}  // namespace locdesc
