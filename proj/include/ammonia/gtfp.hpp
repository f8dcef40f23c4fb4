#pragma once

// Regional green total-factor productivity: input-oriented, constant returns
// to scale DEA with labour, capital, energy and CO2 as inputs and GDP as the
// single output, plus the capital-stock recursion, energy/carbon intensities
// and the compound-growth gap fill for missing emission years.

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "ammonia/error.hpp"
#include "ammonia/lp_solver.hpp"
#include "ammonia/units.hpp"

namespace ammonia::gtfp {

inline constexpr double kDefaultDepreciation = 0.096;
inline constexpr double kEfficiencyTolerance = 1e-6;

/// Anything DEA can score: positive input and output vectors of fixed width.
template <class T>
concept DecisionMakingUnit = requires(const T& u) {
    { u.inputs() } -> std::ranges::random_access_range;
    { u.outputs() } -> std::ranges::random_access_range;
};

/// Generic DMU with arbitrary input/output counts.
struct Dmu {
    std::vector<double> in;
    std::vector<double> out;
    const std::vector<double>& inputs() const { return in; }
    const std::vector<double>& outputs() const { return out; }
};

struct RegionRecord {
    std::string name;
    double energy_mtce = 0.0;  ///< Mtce/yr
    double labour_m = 0.0;     ///< million persons/yr
    double capital_busd = 0.0; ///< B USD
    double co2_mt = 0.0;       ///< Mt CO2/yr
    double gdp_busd = 0.0;     ///< B USD/yr

    void validate() const
    {
        const std::array<std::pair<const char*, double>, 5> fields{{{"energy", energy_mtce},
                                                                    {"labour", labour_m},
                                                                    {"capital", capital_busd},
                                                                    {"co2", co2_mt},
                                                                    {"gdp", gdp_busd}}};
        for (const auto& [field, v] : fields)
            if (!(v > 0.0) || !std::isfinite(v))
                throw InputError("region '" + name + "': " + field + " must be positive");
    }

    /// Labour, capital, energy, CO2.
    std::array<double, 4> inputs() const { return {labour_m, capital_busd, energy_mtce, co2_mt}; }
    std::array<double, 1> outputs() const { return {gdp_busd}; }
};

static_assert(DecisionMakingUnit<RegionRecord>);
static_assert(DecisionMakingUnit<Dmu>);

/// Envelopment LP for unit `i`. Variables are (theta, lambda_1..lambda_M):
///   min theta  s.t.  sum_j lambda_j x_jk <= theta x_ik  (each input k)
///                    sum_j lambda_j y_jr >= y_ir        (each output r)
///                    lambda >= 0
template <DecisionMakingUnit U>
lp::LinearProgram build_dea_lp(std::span<const U> units, std::size_t i)
{
    detail::require(!units.empty(), "DEA needs at least one unit");
    detail::require(i < units.size(), "DEA unit index out of range");
    const std::size_t m = units.size();
    const std::size_t n_in = std::ranges::size(units[0].inputs());
    const std::size_t n_out = std::ranges::size(units[0].outputs());
    for (std::size_t j = 0; j < m; ++j) {
        const auto in = units[j].inputs();
        const auto out = units[j].outputs();
        detail::require(std::ranges::size(in) == n_in && std::ranges::size(out) == n_out,
                        "DEA units must share input/output dimensions");
        for (double v : in) detail::require(v > 0.0 && std::isfinite(v), "DEA inputs must be positive");
        for (double v : out) detail::require(v > 0.0 && std::isfinite(v), "DEA outputs must be positive");
    }

    std::vector<double> objective(m + 1, 0.0);
    objective[0] = 1.0;
    lp::LinearProgram lp(std::move(objective));
    std::vector<double> row(m + 1);
    for (std::size_t k = 0; k < n_in; ++k) {
        row[0] = -units[i].inputs()[k];
        for (std::size_t j = 0; j < m; ++j) row[j + 1] = units[j].inputs()[k];
        lp.add_less_equal(row, 0.0);
    }
    for (std::size_t r = 0; r < n_out; ++r) {
        row[0] = 0.0;
        for (std::size_t j = 0; j < m; ++j) row[j + 1] = -units[j].outputs()[r];
        lp.add_less_equal(row, -units[i].outputs()[r]);
    }
    return lp;
}

template <DecisionMakingUnit U>
lp::LinearProgram build_dea_lp(const std::vector<U>& units, std::size_t i)
{
    return build_dea_lp(std::span<const U>(units), i);
}

/// CRS input-efficiency score of every unit, in input order.
template <DecisionMakingUnit U>
std::vector<double> dea_scores(std::span<const U> units, double tol = 1e-9)
{
    std::vector<double> scores;
    scores.reserve(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
        const auto sol = lp::solve(build_dea_lp(units, i), tol);
        if (sol.status != lp::Status::Optimal)
            throw SolverError("DEA program for unit " + std::to_string(i) + " is " + lp::to_string(sol.status));
        scores.push_back(sol.objective);
    }
    return scores;
}

template <DecisionMakingUnit U>
std::vector<double> dea_scores(const std::vector<U>& units, double tol = 1e-9)
{
    return dea_scores(std::span<const U>(units), tol);
}

struct Intensity {
    double energy_kbtu_per_usd;
    double carbon_kg_per_usd;
};

/// Energy intensity E/G in kBtu/USD and carbon intensity C/G in kg CO2/USD.
inline Intensity intensities(const RegionRecord& r)
{
    detail::require(r.gdp_busd > 0.0, "region '" + r.name + "': GDP must be positive for intensities");
    using units::Unit;
    const double energy_kbtu = units::convert(r.energy_mtce * 1e6, Unit::tce, Unit::kBtu);
    const double gdp_usd = units::convert(r.gdp_busd, Unit::B_USD, Unit::USD);
    const double co2_kg = units::convert(r.co2_mt, Unit::Mt, Unit::kg);
    return {energy_kbtu / gdp_usd, co2_kg / gdp_usd};
}

struct RegionEfficiency {
    std::string name;
    double gtfp = 0.0;
    double energy_intensity = 0.0; ///< kBtu/USD
    double carbon_intensity = 0.0; ///< kg CO2/USD
    bool efficient = false;
};

using EfficiencyReport = std::vector<RegionEfficiency>;

inline EfficiencyReport gtfp_scores(std::span<const RegionRecord> records, double tol = 1e-9)
{
    detail::require(!records.empty(), "no region records");
    EfficiencyReport report;
    report.reserve(records.size());
    for (const auto& r : records) r.validate();
    for (std::size_t i = 0; i < records.size(); ++i) {
        lp::LpSolution sol;
        try {
            sol = lp::solve(build_dea_lp(records, i), tol);
        } catch (const SolverError& e) {
            throw SolverError("region '" + records[i].name + "': " + e.what());
        }
        if (sol.status != lp::Status::Optimal)
            throw SolverError("region '" + records[i].name + "': DEA program is " + lp::to_string(sol.status));
        const auto in = intensities(records[i]);
        report.push_back({records[i].name, sol.objective, in.energy_kbtu_per_usd, in.carbon_kg_per_usd,
                          sol.objective >= 1.0 - kEfficiencyTolerance});
    }
    return report;
}

inline EfficiencyReport gtfp_scores(const std::vector<RegionRecord>& records, double tol = 1e-9)
{
    return gtfp_scores(std::span<const RegionRecord>(records), tol);
}

/// Perpetual inventory: K_{n+1} = I_{n+1} + (1 - delta) K_n.
inline double capital_stock_next(double capital, double investment, double delta = kDefaultDepreciation)
{
    detail::require(capital >= 0.0, "capital stock must be non-negative");
    detail::require(investment >= 0.0, "investment must be non-negative");
    detail::require(delta >= 0.0 && delta < 1.0, "depreciation rate must lie in [0, 1)");
    return investment + (1.0 - delta) * capital;
}

inline double extrapolate_emission(double base_value, double cagr, int years)
{
    detail::require(base_value > 0.0, "base emission must be positive");
    detail::require(years >= 0, "extrapolation horizon must be non-negative");
    detail::require(cagr > -1.0, "growth rate must exceed -100%");
    return base_value * std::pow(1.0 + cagr, years);
}

/// Compound annual growth rate between two levels `years` apart.
inline double compound_growth_rate(double start, double end, int years)
{
    detail::require(start > 0.0 && end > 0.0, "growth endpoints must be positive");
    detail::require(years > 0, "growth span must be positive");
    return std::pow(end / start, 1.0 / years) - 1.0;
}

} // namespace ammonia::gtfp
