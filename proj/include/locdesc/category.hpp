#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace locdesc {

// The eleven categories of location descriptions found in disaster tweets.
enum class Category : unsigned char {
  C1,   // door number addresses
  C2,   // street names
  C3,   // highways
  C4,   // exits of highways
  C5,   // intersections of roads (rivers)
  C6,   // natural features
  C7,   // other human-made features
  C8,   // local organizations
  C9,   // administrative units
  C10,  // multiple areas
  C11,  // road segments
};

inline constexpr std::size_t kCategoryCount = 11;

const std::array<Category, kCategoryCount>& all_categories();

// 0-based position of the category (C1 -> 0, ..., C11 -> 10).
std::size_t category_ordinal(Category c);

// Short code, e.g. "C5".
std::string_view category_code(Category c);

// Human-readable label, e.g. "Intersections of roads (rivers)".
std::string_view category_label(Category c);

// Accepts exactly the codes "C1".."C11" after trimming ASCII whitespace;
// case-sensitive. Anything else yields nullopt.
std::optional<Category> parse_category_code(std::string_view text);

}  // namespace locdesc
