#include "locdesc/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "locdesc/errors.hpp"

namespace locdesc {

namespace {

constexpr std::string_view kIdDirective = "# id:";

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\n\r\f\v") != std::string_view::npos;
}

std::string padded_ordinal(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06zu", n);
  return buf;
}

// Byte offset of each token within the canonical text.
std::vector<std::size_t> token_offsets(const std::vector<std::string>& tokens) {
  std::vector<std::size_t> offsets(tokens.size(), 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    offsets[i] = pos;
    pos += tokens[i].size() + 1;  // single joining space
  }
  return offsets;
}

struct TagParts {
  bool begin = false;  // B- vs I-
  Category category = Category::C1;
};

// "O" yields nullopt; B-/I-Location-Ck yields its parts; anything else throws.
std::optional<TagParts> parse_tag(const std::string& tag, std::size_t line) {
  if (tag == "O") return std::nullopt;
  std::string_view t = tag;
  TagParts parts;
  if (t.rfind("B-Location-", 0) == 0) {
    parts.begin = true;
  } else if (t.rfind("I-Location-", 0) == 0) {
    parts.begin = false;
  } else {
    throw CorpusError(CorpusErrorKind::UnknownTag, line, "unknown tag '" + tag + "'");
  }
  auto cat = parse_category_code(t.substr(11));
  if (!cat) {
    throw CorpusError(CorpusErrorKind::UnknownTag, line, "unknown tag '" + tag + "'");
  }
  parts.category = *cat;
  return parts;
}

std::vector<GoldSpan> build_spans(const std::vector<std::string>& tokens,
                                  const std::vector<std::string>& tags,
                                  const std::vector<std::size_t>& lines) {
  std::vector<GoldSpan> spans;
  int open = -1;  // ordinal of the open span's category, -1 when none
  std::size_t open_start = 0;
  auto close = [&](std::size_t end_token) {
    if (open < 0) return;
    GoldSpan s;
    s.category = static_cast<Category>(open);
    s.token_start = open_start;
    s.token_end = end_token;
    spans.push_back(s);
    open = -1;
  };
  for (std::size_t i = 0; i < tags.size(); ++i) {
    auto parts = parse_tag(tags[i], lines[i]);
    if (!parts) {
      close(i);
    } else if (parts->begin) {
      close(i);
      open = static_cast<int>(category_ordinal(parts->category));
      open_start = i;
    } else {
      if (open != static_cast<int>(category_ordinal(parts->category))) {
        throw CorpusError(CorpusErrorKind::DanglingInside, lines[i],
                          "'" + tags[i] + "' without a matching B- tag");
      }
    }
  }
  close(tokens.size());
  return spans;
}

nlohmann::ordered_json message_to_json(const AnnotatedMessage& m) {
  nlohmann::ordered_json spans = nlohmann::ordered_json::array();
  for (const auto& s : m.gold) {
    spans.push_back({{"category", std::string(category_code(s.category))},
                     {"token_start", s.token_start},
                     {"token_end", s.token_end}});
  }
  return {{"id", m.id}, {"tokens", m.tokens}, {"spans", std::move(spans)}};
}

}  // namespace

std::string canonical_text(const std::vector<std::string>& tokens) {
  std::string text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) text += ' ';
    text += tokens[i];
  }
  return text;
}

AnnotatedMessage make_message(std::string id, std::vector<std::string> tokens,
                              std::vector<GoldSpan> spans, std::size_t line) {
  for (const auto& t : tokens) {
    if (t.empty() || has_whitespace(t)) {
      throw CorpusError(CorpusErrorKind::MalformedLine, line,
                        "token must be non-empty and whitespace-free");
    }
  }
  std::stable_sort(spans.begin(), spans.end(), [](const GoldSpan& a, const GoldSpan& b) {
    return a.token_start < b.token_start;
  });
  auto offsets = token_offsets(tokens);
  AnnotatedMessage m;
  m.id = std::move(id);
  m.tokens = std::move(tokens);
  m.canonical_text = canonical_text(m.tokens);
  for (auto& s : spans) {
    if (s.token_start >= s.token_end || s.token_end > m.tokens.size()) {
      throw CorpusError(CorpusErrorKind::MalformedLine, line,
                        "span token range [" + std::to_string(s.token_start) + ", " +
                            std::to_string(s.token_end) + ") out of bounds");
    }
    s.char_start = offsets[s.token_start];
    s.char_end = offsets[s.token_end - 1] + m.tokens[s.token_end - 1].size();
    s.surface = m.canonical_text.substr(s.char_start, s.char_end - s.char_start);
  }
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].token_start < spans[i - 1].token_end) {
      throw CorpusError(CorpusErrorKind::OverlappingSpans, line,
                        "spans '" + spans[i - 1].surface + "' and '" + spans[i].surface +
                            "' overlap");
    }
  }
  m.gold = std::move(spans);
  return m;
}

std::vector<GoldSpan> spans_from_tags(const std::vector<std::string>& tokens,
                                      const std::vector<std::string>& tags) {
  if (tokens.size() != tags.size()) {
    throw CorpusError(CorpusErrorKind::MalformedLine, 0,
                      "token/tag count mismatch: " + std::to_string(tokens.size()) + " vs " +
                          std::to_string(tags.size()));
  }
  std::vector<std::size_t> lines(tags.size());
  for (std::size_t i = 0; i < lines.size(); ++i) lines[i] = i + 1;
  auto spans = build_spans(tokens, tags, lines);
  // Anchor surfaces and char ranges the same way make_message does.
  auto offsets = token_offsets(tokens);
  auto text = canonical_text(tokens);
  for (auto& s : spans) {
    s.char_start = offsets[s.token_start];
    s.char_end = offsets[s.token_end - 1] + tokens[s.token_end - 1].size();
    s.surface = text.substr(s.char_start, s.char_end - s.char_start);
  }
  return spans;
}

std::vector<std::string> tags_from_spans(const AnnotatedMessage& message) {
  std::vector<std::string> tags(message.tokens.size(), "O");
  for (const auto& s : message.gold) {
    tags[s.token_start] = "B-Location-" + std::string(category_code(s.category));
    for (std::size_t i = s.token_start + 1; i < s.token_end; ++i) {
      tags[i] = "I-Location-" + std::string(category_code(s.category));
    }
  }
  return tags;
}

Corpus parse_iob(std::string_view text) {
  Corpus corpus;
  std::unordered_map<std::string, std::size_t> seen_ids;  // id -> first line

  std::vector<std::string> tokens;
  std::vector<std::string> tags;
  std::vector<std::size_t> token_lines;
  std::optional<std::string> pending_id;
  std::size_t pending_id_line = 0;
  std::size_t first_token_line = 0;

  auto flush = [&](std::size_t at_line) {
    if (tokens.empty()) {
      if (pending_id) {
        throw CorpusError(CorpusErrorKind::MalformedLine, pending_id_line,
                          "id directive is not followed by token lines");
      }
      return;
    }
    std::string id = pending_id ? *pending_id : padded_ordinal(corpus.messages.size());
    auto [it, inserted] = seen_ids.emplace(id, first_token_line);
    if (!inserted) {
      throw CorpusError(CorpusErrorKind::DuplicateId, at_line, "duplicate message id '" + id + "'");
    }
    auto spans = build_spans(tokens, tags, token_lines);
    corpus.messages.push_back(make_message(std::move(id), std::move(tokens), std::move(spans),
                                           first_token_line));
    tokens.clear();
    tags.clear();
    token_lines.clear();
    pending_id.reset();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      if (pos == text.size()) break;  // no final newline; the last line still counts
      eol = text.size();
    }
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (line.empty()) {
      flush(line_no);
      continue;
    }
    if (line.rfind(kIdDirective, 0) == 0) {
      if (pending_id) {
        throw CorpusError(CorpusErrorKind::MalformedLine, line_no,
                          "second id directive before any token line");
      }
      if (!tokens.empty()) {
        throw CorpusError(CorpusErrorKind::MalformedLine, line_no,
                          "id directive must precede the message's token lines");
      }
      pending_id = std::string(line.substr(kIdDirective.size()));
      pending_id_line = line_no;
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw CorpusError(CorpusErrorKind::MalformedLine, line_no,
                        "expected token<TAB>tag, got '" + std::string(line) + "'");
    }
    std::string_view token = line.substr(0, tab);
    std::string_view tag = line.substr(tab + 1);
    if (token.empty() || tag.empty() || has_whitespace(token) || has_whitespace(tag)) {
      throw CorpusError(CorpusErrorKind::MalformedLine, line_no,
                        "expected token<TAB>tag, got '" + std::string(line) + "'");
    }
    if (tokens.empty()) first_token_line = line_no;
    tokens.emplace_back(token);
    tags.emplace_back(tag);
    token_lines.push_back(line_no);
  }
  flush(line_no + 1);
  return corpus;
}

std::string emit_iob(const Corpus& corpus) {
  std::string out;
  for (std::size_t m = 0; m < corpus.messages.size(); ++m) {
    const auto& msg = corpus.messages[m];
    if (m > 0) out += '\n';
    out += kIdDirective;
    out += msg.id;
    out += '\n';
    auto tags = tags_from_spans(msg);
    for (std::size_t i = 0; i < msg.tokens.size(); ++i) {
      out += msg.tokens[i];
      out += '\t';
      out += tags[i];
      out += '\n';
    }
  }
  return out;
}

Corpus parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(CorpusErrorKind::BadJson, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw CorpusError(CorpusErrorKind::BadJson, 0, "corpus JSON must be an array of messages");
  }
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("id") || !entry.contains("tokens") ||
        !entry.contains("spans") || !entry["id"].is_string() || !entry["tokens"].is_array() ||
        !entry["spans"].is_array()) {
      throw CorpusError(CorpusErrorKind::BadJson, 0,
                        "each message needs string 'id', array 'tokens', array 'spans'");
    }
    std::string id = entry["id"].get<std::string>();
    if (!seen_ids.insert(id).second) {
      throw CorpusError(CorpusErrorKind::DuplicateId, 0, "duplicate message id '" + id + "'");
    }
    std::vector<std::string> tokens;
    for (const auto& t : entry["tokens"]) {
      if (!t.is_string()) {
        throw CorpusError(CorpusErrorKind::BadJson, 0, "tokens must be strings");
      }
      tokens.push_back(t.get<std::string>());
    }
    std::vector<GoldSpan> spans;
    for (const auto& s : entry["spans"]) {
      if (!s.is_object() || !s.contains("category") || !s.contains("token_start") ||
          !s.contains("token_end") || !s["category"].is_string() ||
          !s["token_start"].is_number_unsigned() || !s["token_end"].is_number_unsigned()) {
        throw CorpusError(CorpusErrorKind::BadJson, 0,
                          "each span needs 'category', 'token_start', 'token_end'");
      }
      auto cat = parse_category_code(s["category"].get<std::string>());
      if (!cat) {
        throw CorpusError(CorpusErrorKind::UnknownTag, 0,
                          "unknown category '" + s["category"].get<std::string>() + "'");
      }
      GoldSpan span;
      span.category = *cat;
      span.token_start = s["token_start"].get<std::size_t>();
      span.token_end = s["token_end"].get<std::size_t>();
      spans.push_back(span);
    }
    corpus.messages.push_back(make_message(std::move(id), std::move(tokens), std::move(spans)));
  }
  return corpus;
}

std::string emit_json(const Corpus& corpus) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& m : corpus.messages) doc.push_back(message_to_json(m));
  return doc.dump(2) + "\n";
}

std::pair<Corpus, Corpus> split_holdout(const Corpus& corpus,
                                        const std::vector<std::string>& holdout_ids) {
  std::unordered_set<std::string> wanted(holdout_ids.begin(), holdout_ids.end());
  std::unordered_set<std::string> present;
  for (const auto& m : corpus.messages) present.insert(m.id);
  for (const auto& id : wanted) {
    if (!present.count(id)) {
      throw CorpusError(CorpusErrorKind::UnknownId, 0, "holdout id '" + id + "' not in corpus");
    }
  }
  Corpus kept, held;
  for (const auto& m : corpus.messages) {
    (wanted.count(m.id) ? held : kept).messages.push_back(m);
  }
  return {std::move(kept), std::move(held)};
}

}  // namespace locdesc
