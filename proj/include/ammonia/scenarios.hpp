#pragma once

// 2030 green ammonia supply from wind and solar against sector demand
// (conventional ammonia, co-firing, shipping fuel, fuel-cell mobility).

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ammonia/error.hpp"
#include "ammonia/parameters.hpp"
#include "ammonia/units.hpp"

namespace ammonia::scenarios {

enum class HeatingValueBasis { Higher, Lower };

inline void require_share(double share, const char* what)
{
    detail::require(share >= 0.0 && share <= 1.0 && std::isfinite(share), std::string(what) + " must lie in [0, 1]");
}

struct SupplyAssumptions {
    double wind_capacity_gw = 780.0;
    double solar_capacity_gw = 840.0;
    double wind_hours = 2246.0;
    double solar_hours = 1163.0;
    double electrolyser_efficiency = 0.70;
    double synthesis_conversion = 0.95;
    HeatingValueBasis basis = HeatingValueBasis::Higher;

    void validate() const
    {
        detail::require(wind_capacity_gw >= 0.0 && solar_capacity_gw >= 0.0, "capacities must be non-negative");
        detail::require(wind_hours >= 0.0 && wind_hours <= 8760.0 && solar_hours >= 0.0 && solar_hours <= 8760.0,
                        "annual use hours must lie in [0, 8760]");
        detail::require(electrolyser_efficiency > 0.0 && electrolyser_efficiency <= 1.0,
                        "electrolyser efficiency must lie in (0, 1]");
        detail::require(synthesis_conversion > 0.0 && synthesis_conversion <= 1.0,
                        "synthesis conversion must lie in (0, 1]");
    }

    /// Electrolysis power per t NH3: hydrogen feed (3/17 t, grossed up for
    /// synthesis losses) times its heating value over electrolyser efficiency.
    double electricity_per_t_nh3() const
    {
        const double h2_t = 1.0 / units::kAmmoniaPerHydrogen / synthesis_conversion;
        const double mj_per_kg = basis == HeatingValueBasis::Higher ? units::kHydrogenHhv : units::kHydrogenLhv;
        const double mwh_per_t_h2 = units::convert(mj_per_kg * 1e3, units::Unit::MJ, units::Unit::MWh);
        return h2_t * mwh_per_t_h2 / electrolyser_efficiency;
    }
};

struct DemandAssumptions {
    double conventional_ammonia_mt = 52.0;
    double shipping_fuel_mt = 20.0;
    double thermal_capacity_gw = 1450.0;
    double coal_share = 0.87;
    double coal_hours = 4000.0;
    double coal_consumption = 0.31;  ///< tce/MWh
    double hrs_count = 1000.0;
    double hrs_capacity_kg_per_day = 1000.0;
    double lhv_nh3 = units::kAmmoniaLhv;            ///< MJ/kg
    double lhv_heating_oil = units::kHeatingOilLhv; ///< MJ/kg

    void validate() const
    {
        detail::require(conventional_ammonia_mt > 0.0 && shipping_fuel_mt > 0.0 && thermal_capacity_gw > 0.0 &&
                            coal_hours > 0.0 && coal_consumption > 0.0 && hrs_count > 0.0 &&
                            hrs_capacity_kg_per_day > 0.0 && lhv_nh3 > 0.0 && lhv_heating_oil > 0.0,
                        "demand assumptions must be positive");
        detail::require(coal_share > 0.0 && coal_share <= 1.0, "coal share must lie in (0, 1]");
    }
};

inline SupplyAssumptions supply_from(const ParameterSet& p)
{
    SupplyAssumptions s;
    s.wind_capacity_gw = p.value("wind_capacity");
    s.solar_capacity_gw = p.value("solar_capacity");
    s.wind_hours = p.value("wind_hours");
    s.solar_hours = p.value("solar_hours");
    s.electrolyser_efficiency = p.value("electrolyser_efficiency");
    s.synthesis_conversion = p.value("synthesis_conversion");
    s.basis = p.value("hydrogen_heating_value_basis") != 0.0 ? HeatingValueBasis::Higher : HeatingValueBasis::Lower;
    s.validate();
    return s;
}

inline DemandAssumptions demand_from(const ParameterSet& p)
{
    DemandAssumptions d;
    d.conventional_ammonia_mt = p.value("conventional_ammonia");
    d.shipping_fuel_mt = p.value("shipping_fuel");
    d.thermal_capacity_gw = p.value("thermal_capacity");
    d.coal_share = p.value("coal_share");
    d.coal_hours = p.value("coal_hours");
    d.coal_consumption = p.value("coal_consumption");
    d.hrs_count = p.value("hrs_count");
    d.hrs_capacity_kg_per_day = p.value("hrs_capacity");
    d.lhv_nh3 = p.value("lhv_nh3");
    d.lhv_heating_oil = p.value("lhv_heating_oil");
    d.validate();
    return d;
}

/// Wind plus solar generation, TWh/yr.
inline double renewable_generation(const SupplyAssumptions& s)
{
    s.validate();
    return (s.wind_capacity_gw * s.wind_hours + s.solar_capacity_gw * s.solar_hours) / 1e3;
}

/// Mt NH3/yr produced from `share` of renewable generation.
inline double supply_capacity(const SupplyAssumptions& s, double share)
{
    require_share(share, "renewable share");
    // TWh / (MWh/t) = Mt
    return renewable_generation(s) * share / s.electricity_per_t_nh3();
}

/// Share of renewable generation needed to produce `demand_mt` of NH3.
inline double required_renewable_share(const SupplyAssumptions& s, double demand_mt)
{
    detail::require(demand_mt >= 0.0 && std::isfinite(demand_mt), "demand must be non-negative");
    const double generation = renewable_generation(s);
    detail::require(generation > 0.0, "no renewable generation to draw on");
    return demand_mt * s.electricity_per_t_nh3() / generation;
}

/// Coal-fired generation, TWh/yr.
inline double coal_generation(const DemandAssumptions& d)
{
    return d.thermal_capacity_gw * d.coal_share * d.coal_hours / 1e3;
}

/// Mt NH3/yr replacing `rate` of coal fuel energy.
inline double power_sector_demand(const DemandAssumptions& d, double rate)
{
    require_share(rate, "co-firing rate");
    d.validate();
    const double fuel_tce = coal_generation(d) * 1e6 * d.coal_consumption;
    const double fuel_gj = units::convert(fuel_tce, units::Unit::tce, units::Unit::GJ);
    return rate * fuel_gj / d.lhv_nh3 / 1e6; // GJ / (GJ/t) = t
}

/// Mt NH3/yr replacing `pr` of shipping heating oil on an energy basis.
inline double shipping_demand(const DemandAssumptions& d, double pr)
{
    require_share(pr, "shipping penetration rate");
    d.validate();
    return pr * d.shipping_fuel_mt * d.lhv_heating_oil / d.lhv_nh3;
}

/// Mt NH3/yr carrying the hydrogen dispensed at `pr` of refuelling capacity.
inline double mobility_demand(const DemandAssumptions& d, double pr)
{
    require_share(pr, "mobility penetration rate");
    d.validate();
    const double h2_t = d.hrs_count * d.hrs_capacity_kg_per_day * 365.0 / 1e3;
    return pr * h2_t * units::kAmmoniaPerHydrogen / 1e6;
}

/// PR = station utilization x ammonia's share of the hydrogen supplied.
inline double mobility_demand(const DemandAssumptions& d, double hrs_utilization, double ammonia_share)
{
    require_share(hrs_utilization, "station utilization");
    require_share(ammonia_share, "ammonia share of station supply");
    return mobility_demand(d, hrs_utilization * ammonia_share);
}

inline double ammonia_sector_demand(const DemandAssumptions& d, double pr)
{
    require_share(pr, "ammonia sector penetration rate");
    d.validate();
    return pr * d.conventional_ammonia_mt;
}

struct SupplyLevel {
    int level = 0;
    double renewable_share = 0.0;
};

struct DemandLevel {
    int level = 0;
    double ammonia = 0.0;
    double power = 0.0;
    double shipping = 0.0;
    double mobility = 0.0;
};

struct SectorDemand {
    double ammonia = 0.0;
    double power = 0.0;
    double shipping = 0.0;
    double mobility = 0.0;
    double total() const { return ammonia + power + shipping + mobility; }
};

inline SectorDemand demand_at(const DemandAssumptions& d, const DemandLevel& l)
{
    return {ammonia_sector_demand(d, l.ammonia), power_sector_demand(d, l.power), shipping_demand(d, l.shipping),
            mobility_demand(d, l.mobility)};
}

struct SupplyRow {
    int level;
    double renewable_share;
    double supply_mt;
};

struct DemandRow {
    int level;
    SectorDemand demand;
};

struct Coverage {
    int supply_level;
    int demand_level;
    double ratio; ///< supply / demand
    bool covered;
};

struct BalanceReport {
    std::vector<SupplyRow> supply;
    std::vector<DemandRow> demand;
    std::vector<Coverage> coverage; ///< every supply level against every demand level

    const Coverage& at(int supply_level, int demand_level) const
    {
        for (const auto& c : coverage)
            if (c.supply_level == supply_level && c.demand_level == demand_level) return c;
        throw InputError("no coverage for supply level " + std::to_string(supply_level) + " and demand level " +
                         std::to_string(demand_level));
    }
};

inline BalanceReport balance_report(const SupplyAssumptions& s, const DemandAssumptions& d,
                                    const std::vector<SupplyLevel>& supply_levels,
                                    const std::vector<DemandLevel>& demand_levels)
{
    detail::require(!supply_levels.empty() && !demand_levels.empty(), "balance needs supply and demand levels");
    BalanceReport report;
    for (const auto& l : supply_levels) report.supply.push_back({l.level, l.renewable_share, supply_capacity(s, l.renewable_share)});
    for (const auto& l : demand_levels) report.demand.push_back({l.level, demand_at(d, l)});
    for (const auto& sup : report.supply)
        for (const auto& dem : report.demand) {
            const double total = dem.demand.total();
            const double ratio = total > 0.0 ? sup.supply_mt / total : std::numeric_limits<double>::infinity();
            report.coverage.push_back({sup.level, dem.level, ratio, sup.supply_mt >= total});
        }
    return report;
}

} // namespace ammonia::scenarios
