#ifndef ULTRAGAS_PADIC_SAMPLE_HPP
#define ULTRAGAS_PADIC_SAMPLE_HPP

#include <cstdint>
#include <vector>

namespace ultragas {

/// A point of o truncated to L base-q digits, least-significant first.
struct PAdicSample {
    std::vector<uint8_t> digits;
};

/// Valuation of a - b, capped at the digit precision: the index of the
/// first differing digit, or L if the expansions agree to depth L.
inline int valuation_capped(const PAdicSample& a, const PAdicSample& b) {
    const size_t L = a.digits.size();
    for (size_t k = 0; k < L; ++k)
        if (a.digits[k] != b.digits[k]) return static_cast<int>(k);
    return static_cast<int>(L);
}

} // namespace ultragas

#endif
