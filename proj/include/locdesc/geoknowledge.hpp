#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "locdesc/corpus.hpp"

namespace locdesc {

// A named set of fully annotated example tweets used to build few-shot
// prompts. Examples carry the same representation as corpus messages.
struct ExampleBank {
  std::string name;
  std::vector<AnnotatedMessage> examples;
};

struct BankFinding {
  enum class Kind {
    MissingCategory,    // no example's gold covers the category
    OverlappingSpans,   // two gold spans in one example intersect
    SurfaceNotPresent,  // a gold surface does not occur in its example text
  };
  Kind kind = Kind::MissingCategory;
  std::string detail;

  bool operator==(const BankFinding&) const = default;
};

// Structural checks every usable bank must pass; empty result means clean.
std::vector<BankFinding> validate_bank(const ExampleBank& bank);

// Built-in banks. geo22/set2/synthetic hold 22 examples covering all eleven
// categories twice; geo11 is the compact variant for small context windows.
const ExampleBank& bank_geo22();
const ExampleBank& bank_set2();
const ExampleBank& bank_synthetic();
const ExampleBank& bank_geo11();

// geo11 derivation, reusable for custom banks: for each category in C1..C11
// order, claim the first not-yet-claimed example whose gold contains it;
// claimed examples keep their bank order.
ExampleBank select_one_per_category(const ExampleBank& bank, std::string name);

// Custom banks load from JSON: {"name": ..., "messages": [corpus entries]}.
ExampleBank parse_bank_json(std::string_view text);
std::string emit_bank_json(const ExampleBank& bank);

// nullptr when the name is not one of geo22/set2/synthetic/geo11.
const ExampleBank* find_builtin_bank(std::string_view name);

}  // namespace locdesc
