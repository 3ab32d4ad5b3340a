#pragma once

namespace scholnet {

inline constexpr const char* kToolName = "scholnet";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kStoreSchemaVersion = 1;

// All seeded randomness in the toolkit goes through this generator so that
// results are reproducible across platforms and implementations.
inline constexpr const char* kRngAlgorithm = "splitmix64";

inline constexpr const char* kGexfVersion = "1.2";
inline constexpr const char* kGraphmlVersion = "1.0";

} // namespace scholnet
