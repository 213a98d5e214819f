#pragma once

#include "hodge/signature.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

inline hodge::HodgeSignature sig(std::int64_t weight, const std::vector<std::int64_t>& top_down) {
  std::vector<hodge::BigInt> values(top_down.begin(), top_down.end());
  return hodge::HodgeSignature::from_dense(weight, values);
}

inline hodge::HodgeSignature sig(const std::vector<std::int64_t>& top_down) {
  return sig(static_cast<std::int64_t>(top_down.size()) - 1, top_down);
}

inline hodge::HodgeSignature sextic() { return sig({1, 426, 1755, 426, 1}); }

}  // namespace testing_support
