#ifndef ALGCHAIN_VERSION_HPP
#define ALGCHAIN_VERSION_HPP

namespace algchain {

// Bumping this string invalidates every corpus cache entry.
inline constexpr const char* kVersion = "algchain-0.1.0";

}  // namespace algchain

#endif
