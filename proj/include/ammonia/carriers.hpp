#pragma once

// Hydrogen carrier chains (ammonia, liquid hydrogen, gaseous pipeline) and the
// discounted levelized-cost engine used for delivery and storage comparisons.
//
// Mass is tracked as hydrogen content. A chain's carrier medium only matters
// for sizing: one kg of H2 travels as 17/3 kg of NH3 after synthesis.

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ammonia/error.hpp"
#include "ammonia/parameters.hpp"
#include "ammonia/units.hpp"

namespace ammonia::carriers {

enum class StageRole { Conversion, Transport, Storage, Reconversion };
enum class Medium { NH3, LH2, GH2Pipeline };

enum class CapexBasis {
    PerAnnualTonne,   ///< USD per t/yr of medium handled
    PerAsset,         ///< USD per vehicle (transport) or per rated unit
    PerKm,            ///< USD per km of route
    PerCubicMetre,    ///< USD per m3 of inventory volume
    PerTonneCapacity, ///< USD per t of inventory held
};

enum class EnergyBasis {
    PerTonne,         ///< MWh per t handled
    PerTonnePer100Km, ///< MWh per t per 100 km
    PerTonnePerDay,   ///< MWh per t of inventory per day held
};

enum class LossBasis { None, PerDay, Per1000Km };

inline std::string_view to_string(StageRole r)
{
    switch (r) {
    case StageRole::Conversion: return "conversion";
    case StageRole::Transport: return "transport";
    case StageRole::Storage: return "storage";
    case StageRole::Reconversion: return "reconversion";
    }
    return "?";
}

inline std::string_view to_string(Medium m)
{
    switch (m) {
    case Medium::NH3: return "NH3";
    case Medium::LH2: return "LH2";
    case Medium::GH2Pipeline: return "GH2_pipeline";
    }
    return "?";
}

/// kg of carrier medium per kg of hydrogen content.
constexpr double carrier_mass_per_h2(Medium m)
{
    return m == Medium::NH3 ? units::kAmmoniaPerHydrogen : 1.0;
}

struct StageSpec {
    std::string name;
    StageRole role = StageRole::Conversion;
    CapexBasis capex_basis = CapexBasis::PerAnnualTonne;
    double capex_value = 0.0;
    double fixed_opex_rate = 0.0; ///< fraction of capex per year
    EnergyBasis energy_basis = EnergyBasis::PerTonne;
    double energy_use = 0.0;      ///< MWh, per energy_basis
    LossBasis loss_basis = LossBasis::None;
    double loss_rate = 0.0;
    double conversion_efficiency = 1.0;

    // Vehicle sizing (transport with PerAsset capex).
    double payload_t = 0.0;
    double one_way_trips_per_day = 0.0; ///< at reference_distance_km
    double reference_distance_km = 0.0;
    // Rated unit sizing (non-transport PerAsset capex), t/yr of medium.
    double asset_capacity_tpy = 0.0;
    // Inventory stages: days of throughput held, and volume basis for PerCubicMetre.
    double holding_days = 0.0;
    double density_kg_per_m3 = 0.0;

    void validate() const
    {
        const std::string where = "stage '" + name + "': ";
        detail::require(capex_value >= 0.0 && std::isfinite(capex_value), where + "capex must be non-negative");
        detail::require(fixed_opex_rate >= 0.0 && std::isfinite(fixed_opex_rate), where + "opex rate must be non-negative");
        detail::require(energy_use >= 0.0 && std::isfinite(energy_use), where + "energy use must be non-negative");
        detail::require(loss_rate >= 0.0 && loss_rate < 1.0, where + "loss rate must lie in [0, 1)");
        detail::require(conversion_efficiency > 0.0 && conversion_efficiency <= 1.0,
                        where + "conversion efficiency must lie in (0, 1]");
        if (capex_basis == CapexBasis::PerAsset) {
            if (role == StageRole::Transport)
                detail::require(payload_t > 0.0 && one_way_trips_per_day > 0.0 && reference_distance_km > 0.0,
                                where + "vehicle needs payload, trip rate and reference distance");
            else
                detail::require(asset_capacity_tpy > 0.0, where + "unit needs a rated capacity");
        }
        if (capex_basis == CapexBasis::PerCubicMetre)
            detail::require(density_kg_per_m3 > 0.0, where + "volume-based capex needs a density");
        detail::require(holding_days >= 0.0, where + "holding days must be non-negative");
    }
};

struct CarrierChain {
    Medium medium = Medium::NH3;
    std::vector<StageSpec> stages;
    bool include_reconversion = true;
    std::string warning; ///< set when a capex bracket had to be extrapolated

    void validate() const
    {
        detail::require(!stages.empty(), "carrier chain has no stages");
        int last = -1;
        for (const auto& s : stages) {
            s.validate();
            const int rank = static_cast<int>(s.role);
            detail::require(rank >= last, "stage '" + s.name + "' out of order: expected conversion, transport, "
                                          "storage, reconversion");
            last = rank;
            if (medium == Medium::GH2Pipeline)
                detail::require(s.role != StageRole::Conversion && s.role != StageRole::Reconversion,
                                "pipeline chain cannot have conversion stages");
        }
    }
};

struct CostQuery {
    double annual_h2_kt = 100.0;
    double distance_km = 500.0;
    double storage_days = 0.0;
    double discount_rate = 0.08;
    int lifetime_years = 20;
    double electricity_price = 40.0; ///< USD/MWh
    double stored_share = 0.2;       ///< share of annual volume held in storage_cost

    void validate() const
    {
        detail::require(annual_h2_kt > 0.0 && std::isfinite(annual_h2_kt), "annual volume must be positive");
        detail::require(distance_km >= 0.0 && std::isfinite(distance_km), "distance must be non-negative");
        detail::require(storage_days >= 0.0 && std::isfinite(storage_days), "storage days must be non-negative");
        detail::require(discount_rate > 0.0 && discount_rate < 1.0, "discount rate must lie in (0, 1)");
        detail::require(lifetime_years >= 1, "lifetime must be at least one year");
        detail::require(electricity_price >= 0.0 && std::isfinite(electricity_price),
                        "electricity price must be non-negative");
        detail::require(stored_share > 0.0 && stored_share <= 1.0, "stored share must lie in (0, 1]");
    }
};

struct StageCost {
    std::string name;
    StageRole role;
    double usd_per_kg = 0.0;
};

struct CostBreakdown {
    Medium medium = Medium::NH3;
    std::vector<StageCost> stages;
    double total = 0.0;              ///< USD per kg H2 delivered
    double delivered_fraction = 1.0; ///< kg H2 out per kg H2 in
    std::string warning;

    double stage_cost(std::string_view name) const
    {
        for (const auto& s : stages)
            if (s.name == name) return s.usd_per_kg;
        throw InputError("no stage '" + std::string(name) + "' in breakdown");
    }

    double role_cost(StageRole role) const
    {
        double sum = 0.0;
        for (const auto& s : stages)
            if (s.role == role) sum += s.usd_per_kg;
        return sum;
    }
};

/// sum_n Exp_n/(1+dr)^n / sum_n E_n/(1+dr)^n, with n counted from 0.
inline double levelized_cost(std::span<const double> expenses, std::span<const double> energy, double dr)
{
    detail::require(!expenses.empty(), "levelized cost needs at least one year");
    detail::require(expenses.size() == energy.size(), "expense and energy schedules differ in length");
    detail::require(dr > -1.0 && std::isfinite(dr), "discount rate must exceed -100%");
    double num = 0.0, den = 0.0, discount = 1.0;
    bool any_energy = false;
    for (std::size_t n = 0; n < expenses.size(); ++n) {
        detail::require(std::isfinite(expenses[n]) && std::isfinite(energy[n]), "schedules must be finite");
        detail::require(energy[n] >= 0.0, "energy schedule must be non-negative");
        any_energy = any_energy || energy[n] > 0.0;
        num += expenses[n] / discount;
        den += energy[n] / discount;
        discount *= 1.0 + dr;
    }
    detail::require(any_energy, "energy schedule is all zero");
    return num / den;
}

inline double levelized_cost(const std::vector<double>& expenses, const std::vector<double>& energy, double dr)
{
    return levelized_cost(std::span<const double>(expenses), std::span<const double>(energy), dr);
}

/// Capex in year 0, flat costs and output in years 1..lifetime.
inline double levelized_flat(double capex, double annual_cost, double annual_output, double dr, int lifetime)
{
    std::vector<double> exp(static_cast<std::size_t>(lifetime) + 1, annual_cost);
    std::vector<double> out(exp.size(), annual_output);
    exp[0] = capex;
    out[0] = 0.0;
    return levelized_cost(exp, out, dr);
}

namespace engine {

struct Flow {
    double h2_tpy;     ///< hydrogen content, t/yr
    bool carrier_form; ///< false until a conversion stage runs
};

struct CashFlow {
    double capex = 0.0;
    double annual_cost = 0.0;
};

/// Inventory held by a storage stage: tonnes of medium, days per year it is
/// held (drives holding energy) and days each tonne resides (drives losses).
struct Inventory {
    double tonnes;
    double days_held_per_year;
    double residence_days;
};

inline double vehicle_count(const StageSpec& s, double medium_tpy, double distance_km)
{
    if (distance_km <= 0.0 || medium_tpy <= 0.0) return 0.0;
    const double deliveries_per_year = 365.0 * (s.one_way_trips_per_day / 2.0) * s.reference_distance_km / distance_km;
    return medium_tpy / (s.payload_t * deliveries_per_year);
}

inline double transit_days(const StageSpec& s, double distance_km)
{
    if (s.one_way_trips_per_day <= 0.0 || s.reference_distance_km <= 0.0) return 0.0;
    return distance_km / s.reference_distance_km / s.one_way_trips_per_day;
}

/// Runs one stage: returns its cash flow and advances `flow` past it.
inline CashFlow run_stage(const StageSpec& s, Flow& flow, Medium medium, const CostQuery& q, const Inventory* inventory)
{
    const double factor = carrier_mass_per_h2(medium);
    double handled = 0.0; // t/yr of medium, carrier side for conversions
    switch (s.role) {
    case StageRole::Conversion:
        flow.h2_tpy *= s.conversion_efficiency;
        flow.carrier_form = true;
        handled = flow.h2_tpy * factor;
        break;
    case StageRole::Reconversion:
        handled = flow.h2_tpy * (flow.carrier_form ? factor : 1.0);
        flow.h2_tpy *= s.conversion_efficiency;
        flow.carrier_form = false;
        break;
    case StageRole::Transport:
    case StageRole::Storage:
        handled = flow.h2_tpy * (flow.carrier_form ? factor : 1.0);
        flow.h2_tpy *= s.conversion_efficiency;
        break;
    }

    Inventory held{handled * s.holding_days / 365.0, 365.0, s.holding_days};
    if (inventory != nullptr) held = *inventory;

    CashFlow cf;
    switch (s.capex_basis) {
    case CapexBasis::PerAnnualTonne: cf.capex = s.capex_value * handled; break;
    case CapexBasis::PerAsset:
        cf.capex = s.capex_value * (s.role == StageRole::Transport ? vehicle_count(s, handled, q.distance_km)
                                                                   : handled / s.asset_capacity_tpy);
        break;
    case CapexBasis::PerKm: cf.capex = s.capex_value * q.distance_km; break;
    case CapexBasis::PerTonneCapacity: cf.capex = s.capex_value * held.tonnes; break;
    case CapexBasis::PerCubicMetre: cf.capex = s.capex_value * held.tonnes * 1000.0 / s.density_kg_per_m3; break;
    }

    double mwh = 0.0;
    switch (s.energy_basis) {
    case EnergyBasis::PerTonne: mwh = s.energy_use * handled; break;
    case EnergyBasis::PerTonnePer100Km: mwh = s.energy_use * handled * q.distance_km / 100.0; break;
    case EnergyBasis::PerTonnePerDay: mwh = s.energy_use * held.tonnes * held.days_held_per_year; break;
    }
    cf.annual_cost = s.fixed_opex_rate * cf.capex + mwh * q.electricity_price;

    double exposure = 0.0;
    switch (s.loss_basis) {
    case LossBasis::None: break;
    case LossBasis::PerDay:
        exposure = s.role == StageRole::Transport ? transit_days(s, q.distance_km) : held.residence_days;
        break;
    case LossBasis::Per1000Km: exposure = q.distance_km / 1000.0; break;
    }
    flow.h2_tpy *= std::pow(1.0 - s.loss_rate, exposure);
    return cf;
}

inline CostBreakdown levelize(const CarrierChain& chain, const std::vector<const StageSpec*>& stages,
                              const std::vector<CashFlow>& flows, double h2_in_tpy, double h2_out_tpy,
                              const CostQuery& q)
{
    detail::require(h2_out_tpy > 0.0, "chain delivers no hydrogen");
    CostBreakdown out;
    out.medium = chain.medium;
    out.warning = chain.warning;
    out.delivered_fraction = h2_out_tpy / h2_in_tpy;
    const double kg_per_year = h2_out_tpy * 1000.0;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const double c = levelized_flat(flows[i].capex, flows[i].annual_cost, kg_per_year, q.discount_rate,
                                        q.lifetime_years);
        out.stages.push_back({stages[i]->name, stages[i]->role, c});
        out.total += c;
    }
    return out;
}

} // namespace engine

/// Levelized cost of moving q.annual_h2_kt of hydrogen q.distance_km through `chain`,
/// per kg of hydrogen delivered.
inline CostBreakdown delivery_cost(const CarrierChain& chain, const CostQuery& q)
{
    chain.validate();
    q.validate();
    if (chain.medium == Medium::GH2Pipeline)
        detail::require(q.distance_km > 0.0, "pipeline delivery needs a positive distance");

    const double h2_in = q.annual_h2_kt * 1000.0;
    engine::Flow flow{h2_in, false};
    std::vector<const StageSpec*> used;
    std::vector<engine::CashFlow> flows;
    for (const auto& s : chain.stages) {
        if (s.role == StageRole::Reconversion && !chain.include_reconversion) continue;
        flows.push_back(engine::run_stage(s, flow, chain.medium, q, nullptr));
        used.push_back(&s);
    }
    return engine::levelize(chain, used, flows, h2_in, flow.h2_tpy, q);
}

/// Levelized cost of holding q.stored_share of the annual volume for
/// q.storage_days in the chain's storage stage, per kg of hydrogen withdrawn.
/// The reserve is filled once a year.
inline CostBreakdown storage_cost(const CarrierChain& chain, const CostQuery& q)
{
    chain.validate();
    q.validate();
    detail::require(q.storage_days > 0.0, "storage cost needs a positive storage duration");

    const double stored_h2 = q.annual_h2_kt * 1000.0 * q.stored_share;
    const double factor = chain.medium == Medium::GH2Pipeline ? 1.0 : carrier_mass_per_h2(chain.medium);
    engine::Flow flow{stored_h2, true};
    std::vector<const StageSpec*> used;
    std::vector<engine::CashFlow> flows;
    for (const auto& s : chain.stages) {
        if (s.role != StageRole::Storage) continue;
        const engine::Inventory inv{flow.h2_tpy * factor, q.storage_days, q.storage_days};
        flows.push_back(engine::run_stage(s, flow, chain.medium, q, &inv));
        used.push_back(&s);
    }
    detail::require(!used.empty(), "chain for " + std::string(to_string(chain.medium)) +
                                                " has no storage stage");
    return engine::levelize(chain, used, flows, stored_h2, flow.h2_tpy, q);
}

struct CapexBracket {
    double volume_kt;
    double capex;
};

struct BracketValue {
    double capex;
    bool extrapolated;
};

/// Linear in volume between tabulated brackets; nearest bracket outside them.
inline BracketValue interpolate_bracket(std::span<const CapexBracket> table, double volume_kt)
{
    detail::require(!table.empty(), "empty capex bracket table");
    if (volume_kt < table.front().volume_kt) return {table.front().capex, true};
    if (volume_kt > table.back().volume_kt) return {table.back().capex, true};
    for (std::size_t i = 0; i + 1 < table.size(); ++i) {
        const auto& a = table[i];
        const auto& b = table[i + 1];
        if (volume_kt <= b.volume_kt) {
            const double t = (volume_kt - a.volume_kt) / (b.volume_kt - a.volume_kt);
            return {a.capex + t * (b.capex - a.capex), false};
        }
    }
    return {table.back().capex, false};
}

inline constexpr std::array<int, 4> kBracketVolumesKt{10, 30, 50, 100};

/// Reads `<prefix>_<V>kt` for each tabulated volume V.
inline std::vector<CapexBracket> bracket_table(const ParameterSet& params, std::string_view prefix)
{
    std::vector<CapexBracket> table;
    for (int v : kBracketVolumesKt)
        table.push_back({static_cast<double>(v), params.value(std::string(prefix) + "_" + std::to_string(v) + "kt")});
    return table;
}

struct BuiltinChains {
    CarrierChain nh3_cracked;
    CarrierChain nh3_direct;
    CarrierChain lh2;
    CarrierChain pipeline;
};

/// The four reference chains with bracketed capex resolved for `annual_h2_kt`.
inline BuiltinChains builtin_chains(const ParameterSet& p, double annual_h2_kt)
{
    detail::require(annual_h2_kt > 0.0, "annual volume must be positive");
    const double opex = p.value("fixed_opex_rate");
    const double truck_opex = p.value("truck_opex_rate");
    const double trips = p.value("truck_trips_per_day");
    const double ref_km = p.value("truck_reference_distance");
    const double buffer_days = p.value("delivery_buffer_days");
    const double tanker = p.value("tanker_capex");

    std::string warning;
    auto bracket = [&](std::string_view prefix) {
        const auto table = bracket_table(p, prefix);
        const auto pick = interpolate_bracket(table, annual_h2_kt);
        if (pick.extrapolated && warning.empty())
            warning = "volume " + std::to_string(annual_h2_kt) + " kt/yr outside tabulated brackets; nearest used";
        return pick.capex;
    };

    StageSpec synthesis{.name = "synthesis",
                        .role = StageRole::Conversion,
                        .capex_basis = CapexBasis::PerAnnualTonne,
                        .capex_value = p.value("ammonia_plant_capex"),
                        .fixed_opex_rate = opex,
                        .energy_basis = EnergyBasis::PerTonne,
                        .energy_use = p.value("energy_nh3_production") + p.value("energy_nh3_cooling"),
                        .conversion_efficiency = p.value("synthesis_conversion")};
    StageSpec nh3_truck{.name = "truck",
                        .role = StageRole::Transport,
                        .capex_basis = CapexBasis::PerAsset,
                        .capex_value = tanker,
                        .fixed_opex_rate = truck_opex,
                        .loss_basis = LossBasis::PerDay,
                        .loss_rate = p.value("evaporation_nh3"),
                        .payload_t = p.value("truck_payload_nh3"),
                        .one_way_trips_per_day = trips,
                        .reference_distance_km = ref_km};
    StageSpec nh3_buffer{.name = "terminal_storage",
                         .role = StageRole::Storage,
                         .capex_basis = CapexBasis::PerTonneCapacity,
                         .capex_value = p.value("vessel_capex"),
                         .fixed_opex_rate = opex,
                         .energy_basis = EnergyBasis::PerTonnePerDay,
                         .energy_use = units::convert(p.value("energy_nh3_storage"), units::Unit::kWh, units::Unit::MWh),
                         .loss_basis = LossBasis::PerDay,
                         .loss_rate = p.value("evaporation_nh3"),
                         .holding_days = buffer_days};
    StageSpec cracking{.name = "cracking",
                       .role = StageRole::Reconversion,
                       .capex_basis = CapexBasis::PerAnnualTonne,
                       .capex_value = bracket("reformer_capex"),
                       .fixed_opex_rate = opex,
                       .energy_basis = EnergyBasis::PerTonne,
                       .energy_use = p.value("energy_nh3_decomposition"),
                       .conversion_efficiency = p.value("reform_conversion")};

    StageSpec liquefaction{.name = "liquefaction",
                           .role = StageRole::Conversion,
                           .capex_basis = CapexBasis::PerAnnualTonne,
                           .capex_value = bracket("liquefier_capex"),
                           .fixed_opex_rate = opex,
                           .energy_basis = EnergyBasis::PerTonne,
                           .energy_use = p.value("energy_liquefaction")};
    StageSpec lh2_truck = nh3_truck;
    lh2_truck.loss_rate = p.value("evaporation_lh2");
    lh2_truck.payload_t = p.value("truck_payload_lh2");
    StageSpec lh2_buffer{.name = "terminal_storage",
                         .role = StageRole::Storage,
                         .capex_basis = CapexBasis::PerCubicMetre,
                         .capex_value = p.value("cryo_tank_capex"),
                         .fixed_opex_rate = opex,
                         .loss_basis = LossBasis::PerDay,
                         .loss_rate = p.value("evaporation_lh2"),
                         .holding_days = buffer_days,
                         .density_kg_per_m3 = p.value("lh2_density")};
    StageSpec regasification{.name = "regasification",
                             .role = StageRole::Reconversion,
                             .capex_basis = CapexBasis::PerAsset,
                             .capex_value = p.value("vaporizer_capex"),
                             .fixed_opex_rate = opex,
                             .energy_basis = EnergyBasis::PerTonne,
                             .energy_use = units::convert(p.value("energy_regasification"), units::Unit::kWh,
                                                          units::Unit::MWh),
                             .asset_capacity_tpy = units::convert(p.value("vaporizer_capacity"), units::Unit::kt,
                                                                  units::Unit::t)};

    StageSpec pipe{.name = "pipeline",
                   .role = StageRole::Transport,
                   .capex_basis = CapexBasis::PerKm,
                   .capex_value = bracket("pipeline_capex"),
                   .fixed_opex_rate = opex,
                   .energy_basis = EnergyBasis::PerTonnePer100Km,
                   .energy_use = p.value("energy_pipeline"),
                   .loss_basis = LossBasis::Per1000Km,
                   .loss_rate = p.value("leakage_pipeline")};

    BuiltinChains chains;
    chains.nh3_cracked = {Medium::NH3, {synthesis, nh3_truck, nh3_buffer, cracking}, true, warning};
    chains.nh3_direct = chains.nh3_cracked;
    chains.nh3_direct.include_reconversion = false;
    chains.lh2 = {Medium::LH2, {liquefaction, lh2_truck, lh2_buffer, regasification}, true, warning};
    chains.pipeline = {Medium::GH2Pipeline, {pipe}, false, warning};
    return chains;
}

/// Query defaults (discount rate, lifetime, power price, stored share) from the carriers set.
inline CostQuery make_query(const ParameterSet& p, double annual_h2_kt, double distance_km, double storage_days = 0.0)
{
    CostQuery q;
    q.annual_h2_kt = annual_h2_kt;
    q.distance_km = distance_km;
    q.storage_days = storage_days;
    q.discount_rate = p.value("discount_rate");
    q.lifetime_years = static_cast<int>(std::lround(p.value("lifetime_years")));
    q.electricity_price = p.value("electricity_price");
    q.stored_share = p.value("stored_share");
    q.validate();
    return q;
}

} // namespace ammonia::carriers
