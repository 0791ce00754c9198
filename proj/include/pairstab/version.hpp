#pragma once

#include <cstdint>
#include <vector>

namespace pairstab {

inline constexpr const char* kToolName = "pairstab";
inline constexpr const char* kToolVersion = "0.1.0";

/// The one place default seeds and budgets live. Every report embeds the
/// values it actually ran with.
struct Defaults {
    static constexpr uint64_t seed = 1;
    static constexpr long samples = 500;
    static constexpr long trials = 200;
    static constexpr long long bound = 7;
    static constexpr long m_max = 50;
    static constexpr long wprime_bound = 10;
    static std::vector<long> mu_list() { return {1, 2, 3}; }
};

}  // namespace pairstab
