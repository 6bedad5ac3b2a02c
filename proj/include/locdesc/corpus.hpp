#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locdesc/category.hpp"

namespace locdesc {

// Half-open [begin, end) range of byte offsets into a message's canonical text.
struct CharRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const CharRange&) const = default;
  bool overlaps(const CharRange& o) const { return begin < o.end && o.begin < end; }
};

// An annotated location description: a category plus the token and character
// extents of the description within one message.
struct GoldSpan {
  Category category = Category::C1;
  std::size_t token_start = 0;  // half-open [token_start, token_end)
  std::size_t token_end = 0;
  std::string surface;          // canonical text covered by the span
  std::size_t char_start = 0;   // half-open byte range on canonical_text
  std::size_t char_end = 0;

  bool operator==(const GoldSpan&) const = default;
  CharRange char_range() const { return {char_start, char_end}; }
};

struct AnnotatedMessage {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<GoldSpan> gold;  // sorted by char_start, pairwise non-overlapping
  std::string canonical_text;  // tokens joined by single spaces

  bool operator==(const AnnotatedMessage&) const = default;
};

struct Corpus {
  std::vector<AnnotatedMessage> messages;

  bool operator==(const Corpus&) const = default;
};

// Tokens joined by single spaces.
std::string canonical_text(const std::vector<std::string>& tokens);

// Builds a message from token-aligned spans: derives surfaces and char
// ranges, sorts spans by token_start, and validates bounds and overlap.
// Tokens must be non-empty and whitespace-free (they come from a
// whitespace tokenizer). `line` seeds error positions; 0 means unknown.
AnnotatedMessage make_message(std::string id, std::vector<std::string> tokens,
                              std::vector<GoldSpan> spans, std::size_t line = 0);

// Reconstructs spans from an IOB tag sequence ("O", "B-Location-Ck",
// "I-Location-Ck"). Tag errors report 1-based token positions as lines.
std::vector<GoldSpan> spans_from_tags(const std::vector<std::string>& tokens,
                                      const std::vector<std::string>& tags);

// Projects a message's spans back onto one tag per token.
std::vector<std::string> tags_from_spans(const AnnotatedMessage& message);

// Tab-separated token/tag lines, one blank line between messages, optional
// "# id:<string>" directive line before each message. Messages without a
// directive get zero-padded positional ids ("000000", ...).
Corpus parse_iob(std::string_view text);

// Inverse of parse_iob; always writes id directives and a trailing newline.
// An empty corpus yields an empty string.
std::string emit_iob(const Corpus& corpus);

// JSON mirror of the IOB format: an array of
// {"id": ..., "tokens": [...], "spans": [{"category", "token_start", "token_end"}]}.
Corpus parse_json(std::string_view text);
std::string emit_json(const Corpus& corpus);

// Removes the messages whose ids are listed (the prompt examples) so they are
// not scored. Every id must exist in the corpus. Returns (kept, held_out).
std::pair<Corpus, Corpus> split_holdout(const Corpus& corpus,
                                        const std::vector<std::string>& holdout_ids);

}  // namespace locdesc
