#pragma once

// Ammonia/coal co-firing: blended fuel price, co-fired LCOE and CO2 intensity.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ammonia/error.hpp"
#include "ammonia/parameters.hpp"
#include "ammonia/units.hpp"

namespace ammonia::cofiring {

/// Co-firing rates of the scenario table, base case first.
inline constexpr std::array<double, 6> kScenarioRates{0.0, 0.03, 0.05, 0.10, 0.15, 0.20};

struct EfficiencyLoss {
    double rate;
    double loss;
};

struct CofiringParams {
    double coal_price = 0.0;              ///< FE^c, USD/tce
    double ammonia_production_cost = 0.0; ///< USD/t NH3
    double gross_margin = 0.0;            ///< fraction
    double lhv_nh3 = units::kAmmoniaLhv;  ///< MJ/kg
    double coal_consumption = 0.0;        ///< FC, tce/MWh
    double base_emission = 0.0;           ///< kg CO2/MWh
    double fuel_cost_share = 0.0;         ///< EP^c
    std::vector<EfficiencyLoss> efficiency_loss; ///< sorted by rate

    void validate() const
    {
        detail::require(coal_price > 0.0, "coal price must be positive");
        detail::require(ammonia_production_cost > 0.0, "ammonia production cost must be positive");
        detail::require(gross_margin >= 0.0, "gross margin must be non-negative");
        detail::require(lhv_nh3 > 0.0, "ammonia heating value must be positive");
        detail::require(coal_consumption > 0.0, "coal consumption must be positive");
        detail::require(base_emission > 0.0, "base emission must be positive");
        detail::require(fuel_cost_share > 0.0 && fuel_cost_share < 1.0, "fuel cost share must lie in (0, 1)");
        for (std::size_t i = 0; i < efficiency_loss.size(); ++i) {
            const auto& e = efficiency_loss[i];
            detail::require(e.rate > 0.0 && e.rate <= 1.0, "efficiency loss rate must lie in (0, 1]");
            detail::require(e.loss >= 0.0 && e.loss < 1.0, "efficiency loss must lie in [0, 1)");
            if (i > 0) detail::require(e.rate > efficiency_loss[i - 1].rate, "efficiency loss rates must increase");
        }
    }
};

/// Reads the cofiring namespace; efficiency losses come from keys
/// `efficiency_loss_<percent>`.
inline CofiringParams params_from(const ParameterSet& p)
{
    CofiringParams c;
    c.coal_price = p.value("coal_price");
    c.ammonia_production_cost = p.value("ammonia_production_cost");
    c.gross_margin = p.value("gross_margin");
    c.lhv_nh3 = p.value("lhv_nh3");
    c.coal_consumption = p.value("coal_consumption");
    c.base_emission = p.value("base_emission");
    c.fuel_cost_share = p.value("fuel_cost_share");
    constexpr std::string_view prefix = "efficiency_loss_";
    for (const auto& e : p.entries()) {
        if (!e.key.starts_with(prefix)) continue;
        const std::string_view pct = std::string_view(e.key).substr(prefix.size());
        int percent = 0;
        const auto [ptr, ec] = std::from_chars(pct.data(), pct.data() + pct.size(), percent);
        detail::require(ec == std::errc{} && ptr == pct.data() + pct.size() && percent > 0 && percent <= 100,
                        "bad efficiency loss key '" + e.key + "'");
        c.efficiency_loss.push_back({percent / 100.0, e.value});
    }
    std::sort(c.efficiency_loss.begin(), c.efficiency_loss.end(),
              [](const EfficiencyLoss& a, const EfficiencyLoss& b) { return a.rate < b.rate; });
    c.validate();
    return c;
}

/// FE^am: delivered ammonia price per tce of fuel energy.
inline double ammonia_fuel_price_per_tce(const CofiringParams& p)
{
    detail::require(p.lhv_nh3 > 0.0, "ammonia heating value must be positive");
    const double tce_per_t = p.lhv_nh3 * units::kJoulePerMJ * 1e3 / units::kJoulePerTce;
    return p.ammonia_production_cost * (1.0 + p.gross_margin) / tce_per_t;
}

inline void require_rate(double rate)
{
    detail::require(rate >= 0.0 && rate <= 1.0 && std::isfinite(rate), "co-firing rate must lie in [0, 1]");
}

/// FE^m = FE^am FR + FE^c (1 - FR), USD/tce.
inline double mixed_fuel_cost(const CofiringParams& p, double rate)
{
    require_rate(rate);
    return ammonia_fuel_price_per_tce(p) * rate + p.coal_price * (1.0 - rate);
}

enum class LossLookup { Exact, Interpolate };

inline constexpr double kRateMatchTolerance = 1e-9;

/// Efficiency loss at `rate`. Zero at rate 0; otherwise an exact table hit
/// unless interpolation is requested.
inline double efficiency_loss(const CofiringParams& p, double rate, LossLookup mode = LossLookup::Exact)
{
    require_rate(rate);
    if (rate <= kRateMatchTolerance) return 0.0;
    for (const auto& e : p.efficiency_loss)
        if (std::abs(e.rate - rate) <= kRateMatchTolerance) return e.loss;
    if (mode == LossLookup::Exact || p.efficiency_loss.empty())
        throw InputError("no efficiency loss entry for co-firing rate " + std::to_string(rate) +
                         "; enable interpolation to estimate one");
    // Piecewise linear through (0, 0) and the table, flat past the last entry.
    double r0 = 0.0, l0 = 0.0;
    for (const auto& e : p.efficiency_loss) {
        if (rate < e.rate) return l0 + (e.loss - l0) * (rate - r0) / (e.rate - r0);
        r0 = e.rate;
        l0 = e.loss;
    }
    return l0;
}

/// LCOE^c = FC FE^c / EP^c, USD/MWh.
inline double base_lcoe(const CofiringParams& p) { return p.coal_consumption * p.coal_price / p.fuel_cost_share; }

/// LCOE^m = FC^m FE^m + (1 - EP^c) LCOE^c with FC^m = FC / (1 - loss).
inline double cofired_lcoe(const CofiringParams& p, double rate, LossLookup mode = LossLookup::Exact)
{
    const double fc_mixed = p.coal_consumption / (1.0 - efficiency_loss(p, rate, mode));
    return fc_mixed * mixed_fuel_cost(p, rate) + (1.0 - p.fuel_cost_share) * base_lcoe(p);
}

/// kg CO2/MWh; the ammonia share displaces coal emissions one for one.
inline double emission_intensity(const CofiringParams& p, double rate)
{
    require_rate(rate);
    return p.base_emission * (1.0 - rate);
}

struct CofiringResult {
    double rate = 0.0;
    double fuel_cost = 0.0;       ///< FE^m, USD/tce
    double fuel_cost_delta = 0.0; ///< relative to rate 0
    double lcoe = 0.0;            ///< USD/MWh
    double lcoe_delta = 0.0;      ///< relative to rate 0
    double emission = 0.0;        ///< kg CO2/MWh
    double emission_delta = 0.0;  ///< kg CO2/MWh, negative is a reduction
};

inline CofiringResult evaluate(const CofiringParams& p, double rate, LossLookup mode = LossLookup::Exact)
{
    p.validate();
    CofiringResult r;
    r.rate = rate;
    r.fuel_cost = mixed_fuel_cost(p, rate);
    r.fuel_cost_delta = r.fuel_cost / p.coal_price - 1.0;
    r.lcoe = cofired_lcoe(p, rate, mode);
    r.lcoe_delta = r.lcoe / base_lcoe(p) - 1.0;
    r.emission = emission_intensity(p, rate);
    r.emission_delta = r.emission - p.base_emission;
    return r;
}

inline std::vector<CofiringResult> scenario_table(const CofiringParams& p)
{
    std::vector<CofiringResult> rows;
    for (double rate : kScenarioRates) rows.push_back(evaluate(p, rate));
    return rows;
}

} // namespace ammonia::cofiring
