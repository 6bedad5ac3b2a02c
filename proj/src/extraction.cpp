#include "locdesc/extraction.hpp"

#include <cctype>
#include <fstream>
#include <future>
#include <unordered_set>

#include "json.hpp"
#include "locdesc/errors.hpp"

namespace locdesc {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower(c);
  return out;
}

// Collapses internal whitespace runs to single spaces and trims the ends.
std::string collapse_ws(std::string_view s) {
  std::string out;
  bool in_run = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out += ' ';
    in_run = false;
    out += c;
  }
  return out;
}

// Matches `needle` (whitespace-collapsed) at text[pos]; a ' ' in the needle
// consumes a whole whitespace run in the text. Returns one-past-the-end of
// the match, or npos.
std::size_t match_at(std::string_view text, std::size_t pos, std::string_view needle) {
  std::size_t i = pos;
  for (std::size_t j = 0; j < needle.size(); ++j) {
    if (needle[j] == ' ') {
      if (i >= text.size() || !is_space(text[i])) return std::string_view::npos;
      while (i < text.size() && is_space(text[i])) ++i;
    } else {
      if (i >= text.size() || lower(text[i]) != lower(needle[j])) return std::string_view::npos;
      ++i;
    }
  }
  return i;
}

}  // namespace

std::vector<CharRange> find_occurrences(std::string_view text, std::string_view surface) {
  std::vector<CharRange> occurrences;
  std::string needle = collapse_ws(surface);
  if (needle.empty()) return occurrences;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    std::size_t end = match_at(text, pos, needle);
    if (end != std::string_view::npos) occurrences.push_back({pos, end});
  }
  return occurrences;
}

std::vector<Prediction> parse_answer(std::string_view answer) {
  std::vector<Prediction> predictions;
  std::string_view whole = trim(answer);
  std::string lowered = lower_copy(whole);
  if (lowered.empty() || lowered == "none" || lowered == "n/a") return predictions;

  std::size_t pos = 0;
  while (pos <= whole.size()) {
    std::size_t semi = whole.find(';', pos);
    std::string_view piece =
        whole.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    pos = semi == std::string_view::npos ? whole.size() + 1 : semi + 1;

    piece = trim(piece);
    if (piece.empty()) continue;
    std::size_t colon = piece.find(':');
    if (colon != std::string_view::npos) {
      if (auto cat = parse_category_code(piece.substr(0, colon))) {
        std::string_view rest = trim(piece.substr(colon + 1));
        if (!rest.empty()) predictions.push_back({*cat, std::string(rest)});
        continue;
      }
    }
    predictions.push_back({std::nullopt, std::string(piece)});
  }
  return predictions;
}

std::vector<AlignedPrediction> align(const AnnotatedMessage& message,
                                     const std::vector<Prediction>& predictions) {
  std::vector<AlignedPrediction> aligned;
  aligned.reserve(predictions.size());
  std::vector<CharRange> claimed;
  for (const auto& p : predictions) {
    auto occurrences = find_occurrences(message.canonical_text, p.surface);
    std::optional<CharRange> chosen;
    for (const auto& occ : occurrences) {
      bool taken = false;
      for (const auto& c : claimed) {
        if (occ.overlaps(c)) {
          taken = true;
          break;
        }
      }
      if (!taken) {
        chosen = occ;
        break;
      }
    }
    if (!chosen && !occurrences.empty()) chosen = occurrences.front();
    if (chosen) claimed.push_back(*chosen);
    aligned.push_back({p, chosen});
  }
  return aligned;
}

namespace {

class EchoGoldExtractor : public Extractor {
 public:
  std::string name() const override { return "echo_gold"; }
  std::string answer(const AnnotatedMessage& message, const std::string&) override {
    return serialize_answer(message.gold);
  }
};

// Token classification for the rule-based baseline.

std::string_view strip_trailing_punct(std::string_view t) {
  while (!t.empty()) {
    char c = t.back();
    if (c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?') {
      t.remove_suffix(1);
    } else {
      break;
    }
  }
  return t;
}

bool is_street_suffix(std::string_view token) {
  static const std::unordered_set<std::string> kSuffixes = {"rd", "st", "ave", "blvd", "ln", "dr"};
  return kSuffixes.count(lower_copy(strip_trailing_punct(token))) > 0;
}

bool is_digits(std::string_view t, std::size_t min_len, std::size_t max_len) {
  if (t.size() < min_len || t.size() > max_len) return false;
  for (char c : t) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// A token that can start or extend a name: capitalized or numeric.
bool is_namey(std::string_view token) {
  std::string_view t = strip_trailing_punct(token);
  if (t.empty()) return false;
  char c = t.front();
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

class RegexBaselineExtractor : public Extractor {
 public:
  std::string name() const override { return "regex_baseline"; }

  std::string answer(const AnnotatedMessage& message, const std::string&) override {
    const auto& toks = message.tokens;
    struct Hit {
      std::size_t start, end;  // half-open token range
    };
    std::vector<Hit> hits;
    auto covered = [&]() { return hits.empty() ? std::size_t{0} : hits.back().end; };

    // Pass 1, left to right: street phrases (with optional ZIP attachment)
    // and "exit <N>" phrases.
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i < covered()) continue;
      if (is_street_suffix(toks[i]) && i > covered() && is_namey(toks[i - 1])) {
        std::size_t start = i - 1;
        while (start > covered() && i - start < 3 && is_namey(toks[start - 1]) &&
               !is_street_suffix(toks[start - 1])) {
          --start;
        }
        std::size_t end = i + 1;
        // ZIP attachment: [","] [name] <5 digits>, e.g. "St , Houston 77124".
        std::size_t z = end;
        if (z < toks.size() && toks[z] == ",") ++z;
        if (z < toks.size() && is_namey(toks[z]) && !is_digits(strip_trailing_punct(toks[z]), 5, 5))
          ++z;
        if (z < toks.size() && is_digits(strip_trailing_punct(toks[z]), 5, 5)) end = z + 1;
        hits.push_back({start, end});
        i = end - 1;
        continue;
      }
      if (lower_copy(strip_trailing_punct(toks[i])) == "exit" && i + 1 < toks.size() &&
          is_digits(strip_trailing_punct(toks[i + 1]), 1, 4)) {
        hits.push_back({i, i + 2});
        i += 1;
      }
    }

    // Pass 2: join "X & Y" across a standalone '&' token. Each side is an
    // adjacent pass-1 hit or a single namey token.
    for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
      if (toks[i] != "&") continue;
      auto left = std::find_if(hits.begin(), hits.end(), [&](const Hit& h) { return h.end == i; });
      auto right =
          std::find_if(hits.begin(), hits.end(), [&](const Hit& h) { return h.start == i + 1; });
      bool left_token = left == hits.end() && is_namey(toks[i - 1]) &&
                        std::none_of(hits.begin(), hits.end(), [&](const Hit& h) {
                          return h.start <= i - 1 && i - 1 < h.end;
                        });
      bool right_token = right == hits.end() && is_namey(toks[i + 1]) &&
                         std::none_of(hits.begin(), hits.end(), [&](const Hit& h) {
                           return h.start <= i + 1 && i + 1 < h.end;
                         });
      std::size_t start, end;
      if (left != hits.end()) {
        start = left->start;
      } else if (left_token) {
        start = i - 1;
      } else {
        continue;
      }
      if (right != hits.end()) {
        end = right->end;
      } else if (right_token) {
        end = i + 2;
      } else {
        continue;
      }
      hits.erase(std::remove_if(hits.begin(), hits.end(),
                                [&](const Hit& h) { return h.start >= start && h.end <= end; }),
                 hits.end());
      hits.push_back({start, end});
    }

    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.start < b.start; });

    std::string out;
    for (const auto& h : hits) {
      std::string surface;
      for (std::size_t t = h.start; t < h.end; ++t) {
        if (t > h.start) surface += ' ';
        surface += toks[t];
      }
      if (surface.find(';') != std::string::npos) continue;  // cannot survive the grammar
      if (!out.empty()) out += "; ";
      out += surface;
    }
    return out;
  }
};

}  // namespace

std::unique_ptr<Extractor> make_echo_gold() { return std::make_unique<EchoGoldExtractor>(); }

std::unique_ptr<Extractor> make_regex_baseline() {
  return std::make_unique<RegexBaselineExtractor>();
}

std::vector<RunRecord> read_run_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::vector<RunRecord> records;
  if (!in) return records;  // missing file = empty run
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw CorpusError(CorpusErrorKind::BadJson, line_no,
                        std::string("invalid run record: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc.contains("answer") ||
        !doc.contains("prompt_mode") || !doc.contains("bank")) {
      throw CorpusError(CorpusErrorKind::BadJson, line_no,
                        "run record needs 'id', 'answer', 'prompt_mode', 'bank'");
    }
    records.push_back({doc["id"].get<std::string>(), doc["answer"].get<std::string>(),
                       doc["prompt_mode"].get<std::string>(), doc["bank"].get<std::string>()});
  }
  return records;
}

namespace {

std::string run_record_line(const RunRecord& r) {
  nlohmann::ordered_json doc = {
      {"id", r.id}, {"answer", r.answer}, {"prompt_mode", r.prompt_mode}, {"bank", r.bank}};
  return doc.dump() + "\n";
}

std::string render_for(const PromptPlan& plan, const AnnotatedMessage& message) {
  if (plan.mode == "default") return render_default_prompt(message.canonical_text).text;
  return render_geo_prompt(*plan.bank, message.canonical_text).text;
}

}  // namespace

RunProgress run_extraction(const Corpus& corpus, Extractor& extractor, const PromptPlan& plan,
                           const std::string& run_path, int concurrency) {
  if (plan.mode != "default" && plan.bank == nullptr) {
    throw std::invalid_argument("geo prompt plan needs a bank");
  }
  std::unordered_set<std::string> done;
  for (const auto& r : read_run_file(run_path)) done.insert(r.id);

  std::vector<const AnnotatedMessage*> todo;
  RunProgress progress;
  for (const auto& m : corpus.messages) {
    if (done.count(m.id)) {
      ++progress.skipped;
    } else {
      todo.push_back(&m);
    }
  }
  if (todo.empty()) return progress;

  std::ofstream out(run_path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot open run file for writing: " + run_path);

  std::string bank_name = plan.mode == "default" ? "default" : plan.bank->name;
  if (concurrency < 1) concurrency = 1;

  // Answers are written in corpus order and flushed batch by batch, so a
  // killed run leaves a clean prefix that the next invocation resumes from.
  for (std::size_t base = 0; base < todo.size(); base += concurrency) {
    std::size_t batch = std::min<std::size_t>(concurrency, todo.size() - base);
    std::vector<std::string> answers(batch);
    if (concurrency == 1) {
      answers[0] = extractor.answer(*todo[base], render_for(plan, *todo[base]));
    } else {
      std::vector<std::future<std::string>> futures;
      futures.reserve(batch);
      for (std::size_t k = 0; k < batch; ++k) {
        const AnnotatedMessage* msg = todo[base + k];
        futures.push_back(std::async(std::launch::async, [&, msg] {
          return extractor.answer(*msg, render_for(plan, *msg));
        }));
      }
      for (std::size_t k = 0; k < batch; ++k) answers[k] = futures[k].get();
    }
    for (std::size_t k = 0; k < batch; ++k) {
      out << run_record_line({todo[base + k]->id, answers[k], plan.mode, bank_name});
      ++progress.answered;
    }
    out.flush();
  }
  return progress;
}

}  // namespace locdesc
