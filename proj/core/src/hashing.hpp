#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chronomine::detail {

// FNV-1a over the elements of an integer vector.
struct VectorHash {
    template <class T>
    std::size_t operator()(const std::vector<T>& values) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (const T& v : values) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace chronomine::detail
