#include "tilekit/caps.hpp"

#include <cstdlib>
#include <string>

#include "tilekit/errors.hpp"

namespace tilekit {

std::int64_t domain_cap() {
    static const std::int64_t cap = [] {
        std::int64_t c = kDefaultDomainCap;
        if (const char* env = std::getenv("TILEKIT_CAP")) {
            try {
                const std::int64_t v = std::stoll(env);
                if (v > 0 && v < c) c = v;
            } catch (...) {
                // unparsable values leave the default in place
            }
        }
        return c;
    }();
    return cap;
}

void check_domain_size(std::int64_t size) {
    if (size < 0 || size > domain_cap()) {
        throw CapacityExceeded("domain size " + std::to_string(size) +
                               " exceeds cap " + std::to_string(domain_cap()));
    }
}

} // namespace tilekit
