#include "locdesc/geoknowledge.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "locdesc/bank_seeds.hpp"
#include "locdesc/errors.hpp"
#include "locdesc/extraction.hpp"

namespace locdesc {

namespace {

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

// Builds one bank example from a sentence plus its answer line. The answer's
// surfaces are anchored to the sentence with the same leftmost-unclaimed rule
// predictions use, then widened to covering token ranges.
AnnotatedMessage build_bank_example(std::string id, const char* sentence, const char* answer) {
  AnnotatedMessage m;
  m.id = std::move(id);
  m.tokens = split_whitespace(sentence);
  m.canonical_text = canonical_text(m.tokens);

  std::vector<std::size_t> offsets(m.tokens.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < m.tokens.size(); ++i) {
    offsets[i] = pos;
    pos += m.tokens[i].size() + 1;
  }

  auto predictions = parse_answer(answer);
  auto aligned = align(m, predictions);
  for (std::size_t i = 0; i < aligned.size(); ++i) {
    const auto& ap = aligned[i];
    if (!ap.prediction.category || !ap.range) {
      throw std::runtime_error("bank example '" + m.id + "': answer piece '" +
                               ap.prediction.surface + "' does not anchor to the sentence");
    }
    GoldSpan s;
    s.category = *ap.prediction.category;
    s.char_start = ap.range->begin;
    s.char_end = ap.range->end;
    s.surface = m.canonical_text.substr(s.char_start, s.char_end - s.char_start);
    // Covering token range: the tokens whose extents intersect the chars.
    s.token_start = m.tokens.size();
    for (std::size_t t = 0; t < m.tokens.size(); ++t) {
      std::size_t tok_begin = offsets[t];
      std::size_t tok_end = offsets[t] + m.tokens[t].size();
      if (tok_begin < s.char_end && s.char_start < tok_end) {
        s.token_start = std::min(s.token_start, t);
        s.token_end = t + 1;
      }
    }
    m.gold.push_back(std::move(s));
  }
  std::sort(m.gold.begin(), m.gold.end(),
            [](const GoldSpan& a, const GoldSpan& b) { return a.char_start < b.char_start; });
  return m;
}

ExampleBank build_bank(std::string name, const detail::SeedExample* seeds, std::size_t count) {
  ExampleBank bank;
  bank.name = std::move(name);
  for (std::size_t i = 0; i < count; ++i) {
    std::ostringstream id;
    id << bank.name << "-" << (i + 1);
    bank.examples.push_back(build_bank_example(id.str(), seeds[i].sentence, seeds[i].answer));
  }
  return bank;
}

}  // namespace

std::vector<BankFinding> validate_bank(const ExampleBank& bank) {
  std::vector<BankFinding> findings;
  std::unordered_set<std::size_t> covered;
  for (std::size_t e = 0; e < bank.examples.size(); ++e) {
    const auto& ex = bank.examples[e];
    std::string where = "example " + std::to_string(e + 1) + " ('" + ex.id + "')";
    for (const auto& s : ex.gold) {
      covered.insert(category_ordinal(s.category));
      if (find_occurrences(ex.canonical_text, s.surface).empty()) {
        findings.push_back({BankFinding::Kind::SurfaceNotPresent,
                            where + ": surface '" + s.surface + "' not present in the text"});
      }
    }
    for (std::size_t i = 0; i < ex.gold.size(); ++i) {
      for (std::size_t j = i + 1; j < ex.gold.size(); ++j) {
        if (ex.gold[i].char_range().overlaps(ex.gold[j].char_range())) {
          findings.push_back({BankFinding::Kind::OverlappingSpans,
                              where + ": spans '" + ex.gold[i].surface + "' and '" +
                                  ex.gold[j].surface + "' overlap"});
        }
      }
    }
  }
  for (Category c : all_categories()) {
    if (!covered.count(category_ordinal(c))) {
      findings.push_back({BankFinding::Kind::MissingCategory,
                          "no example covers " + std::string(category_code(c))});
    }
  }
  return findings;
}

const ExampleBank& bank_geo22() {
  static const ExampleBank bank =
      build_bank("geo22", detail::kGeo22Seed, detail::kSeedBankSize);
  return bank;
}

const ExampleBank& bank_set2() {
  static const ExampleBank bank = build_bank("set2", detail::kSet2Seed, detail::kSeedBankSize);
  return bank;
}

const ExampleBank& bank_synthetic() {
  static const ExampleBank bank =
      build_bank("synthetic", detail::kSyntheticSeed, detail::kSeedBankSize);
  return bank;
}

const ExampleBank& bank_geo11() {
  static const ExampleBank bank = select_one_per_category(bank_geo22(), "geo11");
  return bank;
}

ExampleBank select_one_per_category(const ExampleBank& bank, std::string name) {
  std::vector<bool> taken(bank.examples.size(), false);
  for (Category c : all_categories()) {
    for (std::size_t i = 0; i < bank.examples.size(); ++i) {
      if (taken[i]) continue;
      const auto& gold = bank.examples[i].gold;
      bool has = std::any_of(gold.begin(), gold.end(),
                             [&](const GoldSpan& s) { return s.category == c; });
      if (has) {
        taken[i] = true;
        break;
      }
    }
  }
  ExampleBank out;
  out.name = std::move(name);
  for (std::size_t i = 0; i < bank.examples.size(); ++i) {
    if (taken[i]) out.examples.push_back(bank.examples[i]);
  }
  return out;
}

ExampleBank parse_bank_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(CorpusErrorKind::BadJson, 0, std::string("invalid bank JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("messages") ||
      !doc["name"].is_string() || !doc["messages"].is_array()) {
    throw CorpusError(CorpusErrorKind::BadJson, 0,
                      "bank JSON must be {\"name\": ..., \"messages\": [...]}");
  }
  ExampleBank bank;
  bank.name = doc["name"].get<std::string>();
  Corpus corpus = parse_json(doc["messages"].dump());
  bank.examples = std::move(corpus.messages);
  return bank;
}

std::string emit_bank_json(const ExampleBank& bank) {
  Corpus corpus;
  corpus.messages = bank.examples;
  nlohmann::ordered_json doc = {{"name", bank.name},
                                {"messages", nlohmann::ordered_json::parse(emit_json(corpus))}};
  return doc.dump(2) + "\n";
}

const ExampleBank* find_builtin_bank(std::string_view name) {
  if (name == "geo22") return &bank_geo22();
  if (name == "set2") return &bank_set2();
  if (name == "synthetic") return &bank_synthetic();
  if (name == "geo11") return &bank_geo11();
  return nullptr;
}

}  // namespace locdesc
