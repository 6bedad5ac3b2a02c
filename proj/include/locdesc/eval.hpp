#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "locdesc/extraction.hpp"

namespace locdesc {

enum class MatchMode { Strict, Relaxed };

// What the intersection length is divided by under relaxed matching.
enum class OverlapMeasure { GoldCoverage, PredictionCoverage, Jaccard };

struct MatchPolicy {
  MatchMode mode = MatchMode::Strict;
  OverlapMeasure measure = OverlapMeasure::GoldCoverage;
  double threshold = 0.75;  // exclusive: a pair needs overlap_ratio > threshold
  bool category_aware = false;
};

// Intersection length divided by the measure's denominator (gold length,
// prediction length, or union length). Throws EmptyRange on empty input.
double overlap_ratio(CharRange gold, CharRange prediction, OverlapMeasure measure);

// A one-to-one assignment between gold spans and predictions.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (gold index, prediction index)
  std::vector<std::size_t> missed_gold;                    // gold indices left unmatched
  std::vector<std::size_t> unmatched_predictions;          // prediction indices left unmatched
};

// Maximum-cardinality one-to-one matching between gold spans and aligned
// predictions. Admissibility: strict mode needs identical char ranges;
// relaxed mode needs overlap_ratio > threshold; category_aware additionally
// requires equal categories (category-less predictions never qualify).
// Unaligned predictions are never admissible. Ties resolve toward the pair
// with the smaller gold char_start, then the smaller prediction index, so
// results are deterministic.
Matching match(const std::vector<GoldSpan>& gold, const std::vector<AlignedPrediction>& predictions,
               const MatchPolicy& policy);

// One message's evaluation inputs and its matching.
struct ScoredMessage {
  std::vector<GoldSpan> gold;
  std::vector<AlignedPrediction> predictions;
  Matching matching;
};

ScoredMessage score_message(const AnnotatedMessage& message,
                            const std::vector<Prediction>& predictions,
                            const MatchPolicy& policy);

struct MetricRow {
  std::size_t correct = 0;    // matched pairs (attributed to the gold span's category)
  std::size_t predicted = 0;  // every prediction, aligned or not
  std::size_t gold = 0;
  double precision = 0.0;  // 0 when the denominator is 0
  double recall = 0.0;
  double f_score = 0.0;
};

struct CategoryMetrics {
  std::array<MetricRow, kCategoryCount> per_category{};
  MetricRow overall;
};

// Harmonic mean of precision and recall; 0 when both are 0.
double f_score(double precision, double recall);

// Micro-averaged counts pooled over all messages.
CategoryMetrics corpus_metrics(const std::vector<ScoredMessage>& scored);

// Rows: gold categories C1..C11 plus NOT_IN_GROUND_TRUTH (spurious
// predictions). Columns: predicted categories C1..C11 plus MISSED (gold
// matched by nothing, or matched by a category-less prediction).
struct ConfusionMatrix {
  static constexpr std::size_t kSize = kCategoryCount + 1;
  static constexpr std::size_t kNotInGroundTruth = kCategoryCount;  // row index
  static constexpr std::size_t kMissed = kCategoryCount;            // column index

  std::array<std::array<std::int64_t, kSize>, kSize> counts{};

  std::int64_t row_total(std::size_t row) const;
  // Cell share of its row in hundredths of a percent, rounded half-up
  // (7605 renders as "76.05%"). 0 when the row is empty.
  std::int64_t percent_hundredths(std::size_t row, std::size_t col) const;
};

// Pools pairs from per-message matchings. The matchings must have been
// computed category-agnostically: the matrix exists to show how matched
// text was categorized, so pairing is decided on text alone.
ConfusionMatrix confusion_matrix(const std::vector<ScoredMessage>& scored);

// "76.05%" from hundredths of a percent.
std::string format_percent(std::int64_t hundredths);

}  // namespace locdesc
