#pragma once

#include <cstdint>
#include <iosfwd>

namespace divbound::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240817;

// Run every acceptance criterion, printing one PASS/FAIL line per criterion
// to `out`. Returns true iff all pass.
bool run_all(std::ostream& out, std::uint64_t seed = kDefaultSeed);

}  // namespace divbound::acceptance
