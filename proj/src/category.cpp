#include "locdesc/category.hpp"

namespace locdesc {

namespace {

constexpr std::string_view kCodes[kCategoryCount] = {
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11",
};

constexpr std::string_view kLabels[kCategoryCount] = {
    "Door number addresses",
    "Street names",
    "Highways",
    "Exits of highways",
    "Intersections of roads (rivers)",
    "Natural features",
    "Other human-made features",
    "Local organizations",
    "Administrative units",
    "Multiple areas",
    "Road segments",
};

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

const std::array<Category, kCategoryCount>& all_categories() {
  static const std::array<Category, kCategoryCount> cats = [] {
    std::array<Category, kCategoryCount> a{};
    for (std::size_t i = 0; i < kCategoryCount; ++i) a[i] = static_cast<Category>(i);
    return a;
  }();
  return cats;
}

std::size_t category_ordinal(Category c) { return static_cast<std::size_t>(c); }

std::string_view category_code(Category c) { return kCodes[category_ordinal(c)]; }

std::string_view category_label(Category c) { return kLabels[category_ordinal(c)]; }

std::optional<Category> parse_category_code(std::string_view text) {
  while (!text.empty() && is_ascii_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_ascii_space(text.back())) text.remove_suffix(1);
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (text == kCodes[i]) return static_cast<Category>(i);
  }
  return std::nullopt;
}

}  // namespace locdesc
