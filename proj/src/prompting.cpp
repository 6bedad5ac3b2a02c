#include "locdesc/prompting.hpp"

#include "locdesc/errors.hpp"

namespace locdesc {

namespace {

constexpr std::string_view kHeader =
    "This is a set of location description recognition problems.\n"
    "The `Sentence` is a sentence containing location descriptions.\n"
    "The goal is to infer which parts of the sentence represent location descriptions and the "
    "categories of the location descriptions. Split different location descriptions with `;`.\n";

constexpr std::string_view kQuestion =
    "Q: Which parts of this sentence represent location descriptions?";

void append_block(std::string& out, std::string_view sentence, const std::string* answer) {
  out += "--\n--\nSentence: ";
  out += sentence;
  out += '\n';
  out += kQuestion;
  out += "\nA:";
  if (answer) {
    if (!answer->empty()) {
      out += ' ';
      out += *answer;
    }
    out += '\n';
  }
  // The query block ends right after "A:" with no newline: the endpoint's
  // completion is expected to start on that same line.
}

}  // namespace

std::string serialize_answer(const std::vector<GoldSpan>& spans) {
  std::string out;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].surface.find(';') != std::string::npos) {
      throw SemicolonInSurface(spans[i].surface);
    }
    if (i > 0) out += "; ";
    out += category_code(spans[i].category);
    out += ": ";
    out += spans[i].surface;
  }
  return out;
}

RenderedPrompt render_geo_prompt(const ExampleBank& bank, std::string_view query_text) {
  RenderedPrompt prompt;
  prompt.bank_name = bank.name;
  prompt.prompt_mode = "geo";
  prompt.text = kHeader;
  for (const auto& ex : bank.examples) {
    std::string answer = serialize_answer(ex.gold);
    append_block(prompt.text, ex.canonical_text, &answer);
  }
  append_block(prompt.text, query_text, nullptr);
  return prompt;
}

RenderedPrompt render_default_prompt(std::string_view query_text) {
  RenderedPrompt prompt;
  prompt.bank_name = "default";
  prompt.prompt_mode = "default";
  std::string& out = prompt.text;
  out += "Sentence: ";
  out += query_text;
  out += '\n';
  out += kQuestion;
  out += "\nA:";
  return prompt;
}

}  // namespace locdesc
