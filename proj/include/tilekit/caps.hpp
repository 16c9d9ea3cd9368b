#pragma once

#include <cstdint>

namespace tilekit {

// Hard ceiling on the number of points in any finite fundamental domain or
// refined grid. The TILEKIT_CAP environment variable may lower (never raise)
// this value, which keeps capacity-failure paths testable.
inline constexpr std::int64_t kDefaultDomainCap = std::int64_t{1} << 24;

std::int64_t domain_cap();

// Throws CapacityExceeded if size is negative or exceeds domain_cap().
void check_domain_size(std::int64_t size);

} // namespace tilekit
