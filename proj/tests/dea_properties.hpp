#pragma once

// Randomized DEA invariant checks shared by the unit and acceptance suites.
// Each check returns an empty string on success or a failure description.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ammonia/gtfp.hpp"

namespace props {

using ammonia::gtfp::Dmu;

inline constexpr double kScoreTolerance = 1e-8;

inline std::vector<Dmu> random_dmus(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(2, 10);
    std::uniform_real_distribution<double> logv(0.0, 3.0);
    std::vector<Dmu> units(static_cast<std::size_t>(count(rng)));
    for (auto& u : units) {
        u.in.resize(4);
        u.out.resize(1);
        for (auto& v : u.in) v = std::pow(10.0, logv(rng));
        for (auto& v : u.out) v = std::pow(10.0, logv(rng));
    }
    return units;
}

inline std::string describe(const char* what, std::size_t i, double got, double want)
{
    return std::string(what) + ": unit " + std::to_string(i) + " scored " + std::to_string(got) + ", expected " +
           std::to_string(want);
}

/// Rescaling one input or output column leaves every score unchanged.
inline std::string units_invariance(const std::vector<Dmu>& units, std::mt19937_64& rng)
{
    const auto base = ammonia::gtfp::dea_scores(units);
    auto scaled = units;
    std::uniform_int_distribution<std::size_t> col(0, 4);
    std::uniform_real_distribution<double> logf(-3.0, 3.0);
    const std::size_t c = col(rng);
    const double f = std::pow(10.0, logf(rng));
    for (auto& u : scaled) (c < 4 ? u.in[c] : u.out[0]) *= f;
    const auto after = ammonia::gtfp::dea_scores(scaled);
    for (std::size_t i = 0; i < units.size(); ++i)
        if (std::abs(after[i] - base[i]) > kScoreTolerance) return describe("units invariance", i, after[i], base[i]);
    return {};
}

/// A unit using no more of any input for no less output scores at least as high.
inline std::string dominance(const std::vector<Dmu>& units, std::mt19937_64& rng)
{
    auto extended = units;
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    std::uniform_real_distribution<double> shrink(0.5, 1.0);
    const std::size_t b = pick(rng);
    Dmu better = units[b];
    for (auto& v : better.in) v *= shrink(rng);
    for (auto& v : better.out) v /= shrink(rng);
    extended.push_back(better);
    const auto s = ammonia::gtfp::dea_scores(extended);
    if (s.back() < s[b] - kScoreTolerance) return describe("dominance", extended.size() - 1, s.back(), s[b]);
    return {};
}

/// Duplicating a unit changes no score, and the clone scores like its original.
inline std::string clone_insensitivity(const std::vector<Dmu>& units, std::mt19937_64& rng)
{
    const auto base = ammonia::gtfp::dea_scores(units);
    auto extended = units;
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    const std::size_t k = pick(rng);
    extended.push_back(units[k]);
    const auto s = ammonia::gtfp::dea_scores(extended);
    for (std::size_t i = 0; i < units.size(); ++i)
        if (std::abs(s[i] - base[i]) > kScoreTolerance) return describe("clone insensitivity", i, s[i], base[i]);
    if (std::abs(s.back() - base[k]) > kScoreTolerance) return describe("clone insensitivity", k, s.back(), base[k]);
    return {};
}

/// Every score lies in (0, 1] and at least one unit is on the frontier.
inline std::string score_range(const std::vector<Dmu>& units)
{
    const auto s = ammonia::gtfp::dea_scores(units);
    bool frontier = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] > 0.0) || s[i] > 1.0 + kScoreTolerance) return describe("score range", i, s[i], 1.0);
        frontier = frontier || s[i] > 1.0 - kScoreTolerance;
    }
    return frontier ? std::string{} : std::string("score range: no unit on the frontier");
}

} // namespace props
