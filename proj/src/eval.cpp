#include "locdesc/eval.hpp"

#include <algorithm>
#include <cstdio>

#include "locdesc/errors.hpp"

namespace locdesc {

double overlap_ratio(CharRange gold, CharRange prediction, OverlapMeasure measure) {
  if (gold.begin >= gold.end || prediction.begin >= prediction.end) throw EmptyRange();
  std::size_t lo = std::max(gold.begin, prediction.begin);
  std::size_t hi = std::min(gold.end, prediction.end);
  double intersection = lo < hi ? static_cast<double>(hi - lo) : 0.0;
  switch (measure) {
    case OverlapMeasure::GoldCoverage:
      return intersection / static_cast<double>(gold.end - gold.begin);
    case OverlapMeasure::PredictionCoverage:
      return intersection / static_cast<double>(prediction.end - prediction.begin);
    case OverlapMeasure::Jaccard: {
      double union_len = static_cast<double>((gold.end - gold.begin) +
                                             (prediction.end - prediction.begin)) -
                         intersection;
      return intersection / union_len;
    }
  }
  return 0.0;  // unreachable
}

namespace {

bool admissible(const GoldSpan& g, const AlignedPrediction& p, const MatchPolicy& policy) {
  if (!p.range) return false;
  if (policy.category_aware &&
      (!p.prediction.category || *p.prediction.category != g.category)) {
    return false;
  }
  if (policy.mode == MatchMode::Strict) {
    return g.char_range() == *p.range;
  }
  return overlap_ratio(g.char_range(), *p.range, policy.measure) > policy.threshold;
}

// Augmenting-path search for one gold span; prediction candidates are tried
// in index order.
bool augment(std::size_t g, const std::vector<std::vector<std::size_t>>& candidates,
             std::vector<int>& pred_owner, std::vector<int>& gold_pick,
             std::vector<bool>& visited) {
  for (std::size_t p : candidates[g]) {
    if (visited[p]) continue;
    visited[p] = true;
    if (pred_owner[p] < 0 ||
        augment(static_cast<std::size_t>(pred_owner[p]), candidates, pred_owner, gold_pick,
                visited)) {
      pred_owner[p] = static_cast<int>(g);
      gold_pick[g] = static_cast<int>(p);
      return true;
    }
  }
  return false;
}

}  // namespace

Matching match(const std::vector<GoldSpan>& gold,
               const std::vector<AlignedPrediction>& predictions, const MatchPolicy& policy) {
  std::vector<std::vector<std::size_t>> candidates(gold.size());
  for (std::size_t g = 0; g < gold.size(); ++g) {
    for (std::size_t p = 0; p < predictions.size(); ++p) {
      if (admissible(gold[g], predictions[p], policy)) candidates[g].push_back(p);
    }
  }

  // Gold spans are processed by (char_start, index) and predictions offered
  // by index, which realizes the documented tie-break deterministically.
  std::vector<std::size_t> order(gold.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gold[a].char_start != gold[b].char_start) return gold[a].char_start < gold[b].char_start;
    return a < b;
  });

  std::vector<int> pred_owner(predictions.size(), -1);
  std::vector<int> gold_pick(gold.size(), -1);
  for (std::size_t g : order) {
    std::vector<bool> visited(predictions.size(), false);
    augment(g, candidates, pred_owner, gold_pick, visited);
  }

  Matching result;
  for (std::size_t g = 0; g < gold.size(); ++g) {
    if (gold_pick[g] >= 0) {
      result.pairs.emplace_back(g, static_cast<std::size_t>(gold_pick[g]));
    } else {
      result.missed_gold.push_back(g);
    }
  }
  for (std::size_t p = 0; p < predictions.size(); ++p) {
    if (pred_owner[p] < 0) result.unmatched_predictions.push_back(p);
  }
  return result;
}

ScoredMessage score_message(const AnnotatedMessage& message,
                            const std::vector<Prediction>& predictions,
                            const MatchPolicy& policy) {
  ScoredMessage scored;
  scored.gold = message.gold;
  scored.predictions = align(message, predictions);
  scored.matching = match(scored.gold, scored.predictions, policy);
  return scored;
}

double f_score(double precision, double recall) {
  double sum = precision + recall;
  if (sum == 0.0) return 0.0;
  return 2.0 * precision * recall / sum;
}

namespace {

void finish_row(MetricRow& row) {
  row.precision = row.predicted == 0
                      ? 0.0
                      : static_cast<double>(row.correct) / static_cast<double>(row.predicted);
  row.recall =
      row.gold == 0 ? 0.0 : static_cast<double>(row.correct) / static_cast<double>(row.gold);
  row.f_score = f_score(row.precision, row.recall);
}

}  // namespace

CategoryMetrics corpus_metrics(const std::vector<ScoredMessage>& scored) {
  CategoryMetrics metrics;
  for (const auto& s : scored) {
    metrics.overall.gold += s.gold.size();
    metrics.overall.predicted += s.predictions.size();
    metrics.overall.correct += s.matching.pairs.size();
    for (const auto& g : s.gold) {
      metrics.per_category[category_ordinal(g.category)].gold += 1;
    }
    for (const auto& p : s.predictions) {
      if (p.prediction.category) {
        metrics.per_category[category_ordinal(*p.prediction.category)].predicted += 1;
      }
    }
    for (const auto& [g, p] : s.matching.pairs) {
      metrics.per_category[category_ordinal(s.gold[g].category)].correct += 1;
    }
  }
  for (auto& row : metrics.per_category) finish_row(row);
  finish_row(metrics.overall);
  return metrics;
}

std::int64_t ConfusionMatrix::row_total(std::size_t row) const {
  std::int64_t total = 0;
  for (std::int64_t v : counts[row]) total += v;
  return total;
}

std::int64_t ConfusionMatrix::percent_hundredths(std::size_t row, std::size_t col) const {
  std::int64_t total = row_total(row);
  if (total == 0) return 0;
  // round(count / total * 10000) with half-up tie behavior, in integers
  return (2 * counts[row][col] * 10000 + total) / (2 * total);
}

ConfusionMatrix confusion_matrix(const std::vector<ScoredMessage>& scored) {
  ConfusionMatrix matrix;
  auto column_of = [](const AlignedPrediction& p) {
    return p.prediction.category ? category_ordinal(*p.prediction.category)
                                 : ConfusionMatrix::kMissed;
  };
  for (const auto& s : scored) {
    for (const auto& [g, p] : s.matching.pairs) {
      matrix.counts[category_ordinal(s.gold[g].category)][column_of(s.predictions[p])] += 1;
    }
    for (std::size_t g : s.matching.missed_gold) {
      matrix.counts[category_ordinal(s.gold[g].category)][ConfusionMatrix::kMissed] += 1;
    }
    for (std::size_t p : s.matching.unmatched_predictions) {
      matrix.counts[ConfusionMatrix::kNotInGroundTruth][column_of(s.predictions[p])] += 1;
    }
  }
  return matrix;
}

std::string format_percent(std::int64_t hundredths) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld%%", static_cast<long long>(hundredths / 100),
                static_cast<long long>(hundredths % 100));
  return buf;
}

}  // namespace locdesc
