#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "locdesc/geoknowledge.hpp"

namespace locdesc {

// Query text used when no concrete tweet is supplied; keeps rendered
// prompts byte-stable so they can be frozen as fixtures.
inline constexpr std::string_view kQueryPlaceholder = "{TEXT}";

struct RenderedPrompt {
  std::string text;         // ends with the bare completion cue "A:"
  std::string bank_name;    // bank name, or "default" for the bare prompt
  std::string prompt_mode;  // "geo" | "default"

  std::size_t char_count() const { return text.size(); }
  // Crude length estimate for context-window budgeting: chars / 4.
  std::size_t token_estimate() const { return text.size() / 4; }
};

// "<code>: <surface>" joined by "; ". Empty list yields "". Throws
// SemicolonInSurface when a surface cannot survive the grammar.
std::string serialize_answer(const std::vector<GoldSpan>& spans);

// Few-shot prompt: a three-line task header, one answered Q/A block per bank
// example, then an unanswered block for the query. No blank lines; the text
// ends exactly with "A:" so a completion endpoint continues the answer.
RenderedPrompt render_geo_prompt(const ExampleBank& bank, std::string_view query_text);

// The no-example prompt: just the query block.
RenderedPrompt render_default_prompt(std::string_view query_text);

}  // namespace locdesc
