// Deterministic synthetic corpus generator. Produces an IOB corpus whose
// messages are built token-first, so every gold span is exact by
// construction, plus a holdout id list (the first 22 messages).
//
// The generator enforces the properties the evaluation fixed point needs:
// within a message every gold surface occurs exactly once in the canonical
// text (case-insensitive) and at its own span, and no surface contains ';'.
// Regenerating with the same seed reproduces the files byte for byte.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "locdesc/corpus.hpp"
#include "locdesc/extraction.hpp"

using namespace locdesc;

namespace {

constexpr std::uint32_t kSeed = 20170825;
constexpr std::size_t kMessages = 1000;
constexpr std::size_t kHoldout = 22;

const std::vector<std::string> kNames = {
    "Maple",  "Oak",    "Cedar",   "Birch",  "Walnut", "Pine",   "Elm",
    "Ash",    "Spruce", "Willow",  "Sunset", "Ridge",  "Harbor", "Summit",
    "Meadow", "Clover", "Juniper", "Laurel", "Canyon", "Prairie"};

const std::vector<std::string> kCities = {
    "Houston", "Katy",     "Pasadena", "Baytown", "Conroe",   "Galveston",
    "Richmond", "Humble",  "Spring",   "Tomball", "Alvin",    "Stafford",
    "Seabrook", "Webster", "Bellaire"};

const std::vector<std::string> kSuffixes = {"St", "Rd", "Ave", "Blvd", "Ln", "Dr"};
const std::vector<std::string> kWaters = {"Creek", "Bayou", "River", "Lake"};
const std::vector<std::string> kPlaces = {"Park", "Center", "Bridge", "Stadium", "Plaza"};
const std::vector<std::string> kOrgs = {"Church", "Hospital", "School", "Library"};

const std::vector<std::string> kFiller = {
    "please", "avoid",    "water",   "rising", "fast",    "near",     "the",
    "flooded", "rescue",  "need",    "help",   "stay",    "safe",     "reported",
    "still",  "roads",    "closed",  "families", "stranded", "shelter", "open",
    "now",    "update",   "heavy",   "rain",   "evacuate", "residents", "warning",
    "crews",  "moving",   "deep",    "blocked"};

struct Rng {
  std::mt19937 engine{kSeed};
  std::size_t next(std::size_t n) { return engine() % n; }
  const std::string& pick(const std::vector<std::string>& pool) { return pool[next(pool.size())]; }
};

std::string digits(Rng& rng, std::size_t count, char first_min = '1') {
  std::string out;
  out += static_cast<char>(first_min + rng.next(static_cast<std::size_t>('9' - first_min + 1)));
  for (std::size_t i = 1; i < count; ++i) out += static_cast<char>('0' + rng.next(10));
  return out;
}

// Tokens of one location description of the given category.
std::vector<std::string> span_tokens(Rng& rng, Category category) {
  switch (category) {
    case Category::C1: {
      std::vector<std::string> t = {digits(rng, 3 + rng.next(2)), rng.pick(kNames),
                                    rng.pick(kSuffixes)};
      if (rng.next(2) == 0) {
        t.push_back(",");
        t.push_back(rng.pick(kCities));
        t.push_back("77" + digits(rng, 3, '0'));
      }
      return t;
    }
    case Category::C2: {
      if (rng.next(3) == 0) return {rng.pick(kNames), rng.pick(kNames), rng.pick(kSuffixes)};
      return {rng.pick(kNames), rng.pick(kSuffixes)};
    }
    case Category::C3: {
      if (rng.next(2) == 0) return {"I-" + digits(rng, 2)};
      return {"highway", digits(rng, 2)};
    }
    case Category::C4: {
      if (rng.next(2) == 0) return {"exit", digits(rng, 1 + rng.next(2))};
      return {rng.pick(kNames), "exit"};
    }
    case Category::C5: {
      std::string joiner = rng.next(2) == 0 ? "&" : "at";
      return {rng.pick(kNames), rng.pick(kSuffixes), joiner, rng.pick(kNames),
              rng.pick(kSuffixes)};
    }
    case Category::C6:
      return {rng.pick(kNames), rng.pick(kWaters)};
    case Category::C7:
      return {rng.pick(kNames), rng.pick(kPlaces)};
    case Category::C8:
      return {rng.pick(kNames), rng.pick(kOrgs)};
    case Category::C9:
      return {rng.pick(kCities)};
    case Category::C10:
      return {rng.pick(kCities) + "/" + rng.pick(kCities)};
    case Category::C11:
      return {rng.pick(kNames), rng.pick(kSuffixes), "from", rng.pick(kNames),
              rng.pick(kSuffixes), "to",  rng.pick(kNames), rng.pick(kSuffixes)};
  }
  return {};
}

void append_filler(Rng& rng, std::vector<std::string>& tokens, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) tokens.push_back(rng.pick(kFiller));
}

bool surfaces_are_unambiguous(const AnnotatedMessage& message) {
  for (const auto& span : message.gold) {
    auto occurrences = find_occurrences(message.canonical_text, span.surface);
    if (occurrences.size() != 1) return false;
    if (occurrences[0].begin != span.char_start || occurrences[0].end != span.char_end)
      return false;
  }
  return true;
}

AnnotatedMessage build_message(Rng& rng, std::size_t index) {
  char id_buf[32];
  std::snprintf(id_buf, sizeof id_buf, "synth-%06zu", index);

  std::size_t span_count;
  std::vector<Category> forced;
  if (index < kHoldout) {
    // The first 22 messages double as the holdout set and pin down category
    // coverage: two messages per category.
    forced.push_back(static_cast<Category>(index % kCategoryCount));
    span_count = 1 + rng.next(2);
  } else if (index % 10 == 9) {
    span_count = 0;
  } else {
    span_count = 1 + rng.next(3);
  }

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::string> tokens;
    std::vector<GoldSpan> spans;
    append_filler(rng, tokens, 1 + rng.next(3));
    for (std::size_t s = 0; s < span_count; ++s) {
      Category category = s < forced.size()
                              ? forced[s]
                              : static_cast<Category>(rng.next(kCategoryCount));
      auto body = span_tokens(rng, category);
      GoldSpan span;
      span.category = category;
      span.token_start = tokens.size();
      for (auto& t : body) tokens.push_back(std::move(t));
      span.token_end = tokens.size();
      spans.push_back(span);
      append_filler(rng, tokens, 1 + rng.next(3));
    }
    AnnotatedMessage message = make_message(id_buf, std::move(tokens), std::move(spans));
    if (surfaces_are_unambiguous(message)) return message;
  }
  std::cerr << "could not build an unambiguous message for index " << index << "\n";
  std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_fixture <out.iob> <out_holdout_ids.txt>\n";
    return 1;
  }
  Rng rng;
  Corpus corpus;
  for (std::size_t i = 0; i < kMessages; ++i) corpus.messages.push_back(build_message(rng, i));

  std::ofstream iob(argv[1], std::ios::binary);
  iob << emit_iob(corpus);
  std::ofstream holdout(argv[2], std::ios::binary);
  for (std::size_t i = 0; i < kHoldout; ++i) holdout << corpus.messages[i].id << "\n";

  std::size_t spans = 0;
  for (const auto& m : corpus.messages) spans += m.gold.size();
  std::cout << corpus.messages.size() << " messages, " << spans << " spans\n";
  return 0;
}
