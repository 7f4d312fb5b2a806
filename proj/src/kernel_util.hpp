#pragma once

#include <cstddef>

namespace sensorfx::detail {

/// Half-sample symmetric index: ... 1 0 | 0 1 ... n-1 | n-1 n-2 ...
inline int reflect_index(int i, int n) noexcept {
    const int period = 2 * n;
    int m = i % period;
    if (m < 0) {
        m += period;
    }
    return m < n ? m : period - 1 - m;
}

inline std::size_t row_offset(int y, int width) noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width);
}

} // namespace sensorfx::detail
