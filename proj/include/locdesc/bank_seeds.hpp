#pragma once

#include <cstddef>

namespace locdesc::detail {

// Raw material for the built-in banks: a canonical sentence plus its answer
// line in the "<code>: <surface>; ..." grammar.
struct SeedExample {
  const char* sentence;
  const char* answer;
};

inline constexpr std::size_t kSeedBankSize = 22;

extern const SeedExample kGeo22Seed[kSeedBankSize];
extern const SeedExample kSet2Seed[kSeedBankSize];
extern const SeedExample kSyntheticSeed[kSeedBankSize];

}  // namespace locdesc::detail
