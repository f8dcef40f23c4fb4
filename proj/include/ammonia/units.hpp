#pragma once

// Physical and monetary quantities, the fixed conversion constants, and fuel
// heating values shared by every model in the toolkit.

#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "ammonia/error.hpp"

namespace ammonia::units {

// Energy, in joules.
inline constexpr double kJoulePerGJ = 1e9;
inline constexpr double kJoulePerMJ = 1e6;
inline constexpr double kJoulePerMWh = 3.6e9;
inline constexpr double kJoulePerKWh = 3.6e6;
inline constexpr double kJoulePerTWh = 3.6e15;
inline constexpr double kJoulePerTce = 29.3076e9;
inline constexpr double kJoulePerToe = 41.868e9;
inline constexpr double kJoulePerBtu = 1055.06;
inline constexpr double kJoulePerKcal = 4186.8;

// Heating values, MJ/kg.
inline constexpr double kAmmoniaLhv = 18.6;
inline constexpr double kThermalCoalLhv = 5500.0 * kJoulePerKcal / kJoulePerMJ; // 5500 kcal/kg
inline constexpr double kHydrogenLhv = 120.0;
inline constexpr double kHydrogenHhv = 141.8;
inline constexpr double kHeatingOilLhv = kJoulePerToe / 1e3 / kJoulePerMJ; // 1 toe per t

/// kg NH3 carrying 1 kg H2 (3 H per 17 mass units of NH3).
inline constexpr double kAmmoniaPerHydrogen = 17.0 / 3.0;

/// Liquid hydrogen density, kg/m3.
inline constexpr double kLiquidHydrogenDensity = 70.8;

enum class Dimension {
    Energy,
    Mass,
    Money,
    PricePerMass,
    PricePerEnergy,
    MassPerEnergy,
    MassPerMoney,
    EnergyPerMoney,
};

enum class Unit {
    GJ, MJ, MWh, kWh, TWh, tce, toe, Btu, kBtu, MBtu, kcal,
    t, kt, Mt, kg,
    USD, kUSD, B_USD,
    USD_per_t, USD_per_kgH2, USD_per_tce, USD_per_MWh,
    kgCO2_per_MWh, kg_per_USD, kBtu_per_USD,
};

struct UnitInfo {
    Unit unit;
    std::string_view symbol;
    Dimension dimension;
    double to_base; // multiply by this to reach the dimension's base (J, kg, USD and their ratios)
};

inline constexpr std::array<UnitInfo, 25> kUnitTable{{
    {Unit::GJ, "GJ", Dimension::Energy, kJoulePerGJ},
    {Unit::MJ, "MJ", Dimension::Energy, kJoulePerMJ},
    {Unit::MWh, "MWh", Dimension::Energy, kJoulePerMWh},
    {Unit::kWh, "kWh", Dimension::Energy, kJoulePerKWh},
    {Unit::TWh, "TWh", Dimension::Energy, kJoulePerTWh},
    {Unit::tce, "tce", Dimension::Energy, kJoulePerTce},
    {Unit::toe, "toe", Dimension::Energy, kJoulePerToe},
    {Unit::Btu, "Btu", Dimension::Energy, kJoulePerBtu},
    {Unit::kBtu, "kBtu", Dimension::Energy, kJoulePerBtu * 1e3},
    {Unit::MBtu, "MBtu", Dimension::Energy, kJoulePerBtu * 1e6},
    {Unit::kcal, "kcal", Dimension::Energy, kJoulePerKcal},
    {Unit::t, "t", Dimension::Mass, 1e3},
    {Unit::kt, "kt", Dimension::Mass, 1e6},
    {Unit::Mt, "Mt", Dimension::Mass, 1e9},
    {Unit::kg, "kg", Dimension::Mass, 1.0},
    {Unit::USD, "USD", Dimension::Money, 1.0},
    {Unit::kUSD, "kUSD", Dimension::Money, 1e3},
    {Unit::B_USD, "B_USD", Dimension::Money, 1e9},
    {Unit::USD_per_t, "USD/t", Dimension::PricePerMass, 1e-3},
    {Unit::USD_per_kgH2, "USD/kgH2", Dimension::PricePerMass, 1.0},
    {Unit::USD_per_tce, "USD/tce", Dimension::PricePerEnergy, 1.0 / kJoulePerTce},
    {Unit::USD_per_MWh, "USD/MWh", Dimension::PricePerEnergy, 1.0 / kJoulePerMWh},
    {Unit::kgCO2_per_MWh, "kgCO2/MWh", Dimension::MassPerEnergy, 1.0 / kJoulePerMWh},
    {Unit::kg_per_USD, "kg/USD", Dimension::MassPerMoney, 1.0},
    {Unit::kBtu_per_USD, "kBtu/USD", Dimension::EnergyPerMoney, kJoulePerBtu * 1e3},
}};

constexpr const UnitInfo& info(Unit u)
{
    for (const auto& entry : kUnitTable)
        if (entry.unit == u) return entry;
    // Every enumerator has a row; reaching here means the table is out of sync.
    throw InputError("unit missing from unit table");
}

constexpr std::string_view symbol(Unit u) { return info(u).symbol; }
constexpr Dimension dimension(Unit u) { return info(u).dimension; }

inline Unit parse_unit(std::string_view text)
{
    for (const auto& entry : kUnitTable)
        if (entry.symbol == text) return entry.unit;
    throw InputError("unknown unit '" + std::string(text) + "'");
}

/// A finite value tagged with a unit from the closed set above.
class Quantity {
public:
    Quantity(double value, Unit unit) : value_(value), unit_(unit)
    {
        if (!std::isfinite(value))
            throw InputError("quantity in " + std::string(symbol(unit)) + " is not finite");
    }

    double value() const { return value_; }
    Unit unit() const { return unit_; }

private:
    double value_;
    Unit unit_;
};

/// Raised on conversion between units of different dimensions.
class DimensionError : public InputError {
public:
    DimensionError(Unit from, Unit to)
        : InputError("cannot convert " + std::string(symbol(from)) + " to " + std::string(symbol(to)) +
                     ": dimensions differ"),
          from_(from), to_(to)
    {
    }
    Unit from() const { return from_; }
    Unit to() const { return to_; }

private:
    Unit from_;
    Unit to_;
};

inline Quantity convert(const Quantity& q, Unit target)
{
    const auto& src = info(q.unit());
    const auto& dst = info(target);
    if (src.dimension != dst.dimension) throw DimensionError(q.unit(), target);
    if (src.unit == dst.unit) return q;
    return Quantity(q.value() * src.to_base / dst.to_base, target);
}

/// Shorthand for convert(Quantity(value, from), to).value().
inline double convert(double value, Unit from, Unit to) { return convert(Quantity(value, from), to).value(); }

struct FuelSpec {
    std::string name;
    double lower_heating_value_mj_per_kg;

    FuelSpec(std::string fuel_name, double lhv_mj_per_kg)
        : name(std::move(fuel_name)), lower_heating_value_mj_per_kg(lhv_mj_per_kg)
    {
        detail::require(lhv_mj_per_kg > 0.0 && std::isfinite(lhv_mj_per_kg),
                        "fuel '" + name + "' needs a positive heating value");
    }
};

inline FuelSpec ammonia_fuel() { return {"ammonia", kAmmoniaLhv}; }
inline FuelSpec thermal_coal_fuel() { return {"thermal_coal", kThermalCoalLhv}; }
inline FuelSpec hydrogen_fuel() { return {"hydrogen", kHydrogenLhv}; }
inline FuelSpec heating_oil_fuel() { return {"heating_oil", kHeatingOilLhv}; }

inline FuelSpec fuel_by_name(std::string_view name)
{
    for (auto make : {ammonia_fuel, thermal_coal_fuel, hydrogen_fuel, heating_oil_fuel}) {
        auto fuel = make();
        if (fuel.name == name) return fuel;
    }
    throw InputError("unknown fuel '" + std::string(name) + "'");
}

/// Chemical energy in `mass` of `fuel`, returned in GJ.
inline Quantity fuel_energy(const Quantity& mass, const FuelSpec& fuel)
{
    const double kg = convert(mass, Unit::kg).value();
    detail::require(kg >= 0.0, "fuel mass must be non-negative");
    return Quantity(kg * fuel.lower_heating_value_mj_per_kg * kJoulePerMJ / kJoulePerGJ, Unit::GJ);
}

inline Quantity fuel_energy(const Quantity& mass, std::string_view fuel_name)
{
    return fuel_energy(mass, fuel_by_name(fuel_name));
}

} // namespace ammonia::units
