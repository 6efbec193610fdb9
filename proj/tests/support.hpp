#pragma once

// Shared helpers for the test binaries: fixed-seed generators and small
// brute-force references that do not go through the library's fast paths.

#include "ptrans/perm.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

constexpr std::uint64_t default_seed = 20240601;

// PTRANS_SEED overrides the fixed seed.
inline std::uint64_t seed()
{
    if (const char* s = std::getenv("PTRANS_SEED"))
        return std::strtoull(s, nullptr, 10);
    return default_seed;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(seed());
    return engine;
}

inline std::vector<ptrans::Permutation> all_perms(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<ptrans::Permutation> out;
    do {
        out.push_back(ptrans::Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

inline ptrans::Permutation random_perm(int n, std::mt19937_64& g)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), g);
    return ptrans::Permutation::from_images(images);
}

// A random subset of S_n of the given size.
inline ptrans::PermSet random_subset(int n, std::size_t size, std::mt19937_64& g)
{
    auto all = all_perms(n);
    std::shuffle(all.begin(), all.end(), g);
    all.resize(std::min(size, all.size()));
    return ptrans::PermSet(n, all);
}

inline std::string data_path(const std::string& name)
{
    return std::string(PTRANS_TEST_DATA) + "/" + name;
}

} // namespace testing
