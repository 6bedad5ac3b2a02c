#pragma once

// Shared helpers for the unit and acceptance test binaries: fixture paths,
// random evaluation instances, and a brute-force matching oracle that the
// production matcher is checked against.

#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "locdesc/eval.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(LOCDESC_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A random matching instance: non-overlapping gold spans plus arbitrary
// (possibly overlapping, possibly unaligned, possibly category-less)
// predictions over a small virtual text.
struct MatchInstance {
  std::vector<locdesc::GoldSpan> gold;
  std::vector<locdesc::AlignedPrediction> predictions;
};

inline MatchInstance random_match_instance(std::mt19937& rng, std::size_t max_gold = 6,
                                           std::size_t max_predictions = 6) {
  constexpr std::size_t kTextLength = 60;
  MatchInstance inst;
  std::size_t gold_count = rng() % (max_gold + 1);
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < gold_count && cursor + 2 < kTextLength; ++i) {
    std::size_t start = cursor + rng() % 4;
    std::size_t length = 1 + rng() % 8;
    if (start + length > kTextLength) break;
    locdesc::GoldSpan s;
    s.category = static_cast<locdesc::Category>(rng() % locdesc::kCategoryCount);
    s.char_start = start;
    s.char_end = start + length;
    inst.gold.push_back(s);
    cursor = start + length + rng() % 3;
  }
  std::size_t pred_count = rng() % (max_predictions + 1);
  for (std::size_t i = 0; i < pred_count; ++i) {
    locdesc::AlignedPrediction p;
    if (rng() % 2 == 0) {
      p.prediction.category = static_cast<locdesc::Category>(rng() % locdesc::kCategoryCount);
    }
    p.prediction.surface = "p" + std::to_string(i);
    if (rng() % 8 != 0) {  // 1 in 8 predictions stays unaligned
      std::size_t start = rng() % (kTextLength - 2);
      std::size_t length = 1 + rng() % 10;
      p.range = locdesc::CharRange{start, std::min(start + length, kTextLength)};
    }
    inst.predictions.push_back(p);
  }
  return inst;
}

inline bool oracle_admissible(const locdesc::GoldSpan& g, const locdesc::AlignedPrediction& p,
                              const locdesc::MatchPolicy& policy) {
  if (!p.range) return false;
  if (policy.category_aware &&
      (!p.prediction.category || *p.prediction.category != g.category)) {
    return false;
  }
  if (policy.mode == locdesc::MatchMode::Strict) return g.char_range() == *p.range;
  return locdesc::overlap_ratio(g.char_range(), *p.range, policy.measure) > policy.threshold;
}

// Exhaustive maximum-cardinality search over all assignments.
inline std::size_t oracle_max_matching(const MatchInstance& inst,
                                       const locdesc::MatchPolicy& policy) {
  std::vector<std::vector<std::size_t>> candidates(inst.gold.size());
  for (std::size_t g = 0; g < inst.gold.size(); ++g) {
    for (std::size_t p = 0; p < inst.predictions.size(); ++p) {
      if (oracle_admissible(inst.gold[g], inst.predictions[p], policy)) {
        candidates[g].push_back(p);
      }
    }
  }
  std::size_t best = 0;
  std::vector<bool> used(inst.predictions.size(), false);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t g, std::size_t got) {
    best = std::max(best, got);
    if (g == candidates.size()) return;
    walk(g + 1, got);  // leave this gold unmatched
    for (std::size_t p : candidates[g]) {
      if (used[p]) continue;
      used[p] = true;
      walk(g + 1, got + 1);
      used[p] = false;
    }
  };
  walk(0, 0);
  return best;
}

}  // namespace testsupport
