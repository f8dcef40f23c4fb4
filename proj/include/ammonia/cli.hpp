#pragma once

// Command-line front end. Every subcommand builds its tables in memory and
// writes only after all computation succeeded, so failures leave no partial
// output behind.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ammonia/carriers.hpp"
#include "ammonia/cofiring.hpp"
#include "ammonia/data_io.hpp"
#include "ammonia/error.hpp"
#include "ammonia/gtfp.hpp"
#include "ammonia/scenarios.hpp"

namespace ammonia::cli {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSolver = 3;

enum class Format { Csv, Json };

/// Fixed 4-decimal rendering with trailing zeros removed; "-0" prints as "0".
inline std::string format_number(double v)
{
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    std::array<char, 512> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 4);
    if (ec != std::errc{}) throw InputError("cannot format number");
    std::string s(buf.data(), ptr);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

inline double round4(double v)
{
    const double r = std::round(v * 1e4) / 1e4;
    return r == 0.0 ? 0.0 : r;
}

using Cell = std::variant<std::string, double, bool>;

struct Table {
    std::string source; ///< which table or figure the rows reproduce
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row)
    {
        if (row.size() != columns.size()) throw InputError("internal: row width does not match columns");
        rows.push_back(std::move(row));
    }
};

inline std::string render_csv(const Table& t)
{
    std::string out = "# " + t.source + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            if (const auto* s = std::get_if<std::string>(&row[i])) out += *s;
            else if (const auto* d = std::get_if<double>(&row[i])) out += format_number(*d);
            else out += std::get<bool>(row[i]) ? "true" : "false";
        }
        out += "\n";
    }
    return out;
}

inline std::string render_json(const Table& t)
{
    nlohmann::ordered_json doc;
    doc["source"] = t.source;
    doc["columns"] = t.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const auto* s = std::get_if<std::string>(&row[i])) obj[t.columns[i]] = *s;
            else if (const auto* d = std::get_if<double>(&row[i])) obj[t.columns[i]] = round4(*d);
            else obj[t.columns[i]] = std::get<bool>(row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

inline std::string render(const Table& t, Format f) { return f == Format::Csv ? render_csv(t) : render_json(t); }

// ---------------------------------------------------------------------------
// Table builders

inline Table gtfp_table(const std::vector<gtfp::RegionRecord>& regions)
{
    Table t{"Fig. 10: GTFP, energy intensity and carbon intensity by region (inputs: Table 2)",
            {"region", "gtfp", "energy_intensity_kbtu_per_usd", "carbon_intensity_kg_per_usd", "efficient"},
            {}};
    for (const auto& r : gtfp::gtfp_scores(regions))
        t.add({r.name, r.gtfp, r.energy_intensity, r.carbon_intensity, r.efficient});
    return t;
}

inline const std::vector<std::string>& all_delivery_media()
{
    static const std::vector<std::string> media{"NH3", "NH3_direct", "LH2", "GH2_pipeline"};
    return media;
}

inline const carriers::CarrierChain& chain_named(const carriers::BuiltinChains& c, const std::string& name)
{
    if (name == "NH3") return c.nh3_cracked;
    if (name == "NH3_direct") return c.nh3_direct;
    if (name == "LH2") return c.lh2;
    if (name == "GH2_pipeline") return c.pipeline;
    throw InputError("unknown medium '" + name + "' (expected NH3, NH3_direct, LH2 or GH2_pipeline)");
}

inline const std::vector<std::string> kCarrierColumns{"medium", "volume_kt", "distance_km", "days", "stage",
                                                      "usd_per_kg"};

inline void add_breakdown(Table& t, const std::string& medium, const carriers::CostQuery& q, double days,
                          const carriers::CostBreakdown& b, std::vector<std::string>& warnings)
{
    for (const auto& s : b.stages) t.add({medium, q.annual_h2_kt, q.distance_km, days, s.name, s.usd_per_kg});
    t.add({medium, q.annual_h2_kt, q.distance_km, days, std::string("total"), b.total});
    if (!b.warning.empty()) warnings.push_back(medium + ": " + b.warning);
}

inline Table delivery_table(const ParameterSet& params, const std::vector<std::string>& media,
                            const std::vector<double>& volumes, const std::vector<double>& distances,
                            std::string source, std::vector<std::string>& warnings)
{
    Table t{std::move(source), kCarrierColumns, {}};
    for (const auto& medium : media)
        for (double v : volumes)
            for (double d : distances) {
                const auto chains = carriers::builtin_chains(params, v);
                const auto q = carriers::make_query(params, v, d);
                add_breakdown(t, medium, q, 0.0, carriers::delivery_cost(chain_named(chains, medium), q), warnings);
            }
    return t;
}

inline Table storage_table(const ParameterSet& params, const std::vector<std::string>& media, double volume,
                           const std::vector<double>& days, std::vector<std::string>& warnings)
{
    Table t{"Fig. 13: hydrogen storage cost by storage time, USD/kg H2 (inputs: Table 3)", kCarrierColumns, {}};
    for (const auto& medium : media)
        for (double day : days) {
            const auto chains = carriers::builtin_chains(params, volume);
            const auto q = carriers::make_query(params, volume, 0.0, day);
            add_breakdown(t, medium, q, day, carriers::storage_cost(chain_named(chains, medium), q), warnings);
        }
    return t;
}

inline Table cofiring_table(const cofiring::CofiringParams& p, const std::vector<double>& rates,
                            cofiring::LossLookup mode)
{
    Table t{"Fig. 14: fuel cost, electricity cost and CO2 intensity of ammonia co-firing (inputs: Tables 4-5)",
            {"rate", "fuel_cost_usd_per_tce", "fuel_cost_delta_pct", "lcoe_usd_per_mwh", "lcoe_delta_pct",
             "emission_kg_per_mwh", "emission_delta_kg_per_mwh"},
            {}};
    for (double rate : rates) {
        const auto r = cofiring::evaluate(p, rate, mode);
        t.add({r.rate, r.fuel_cost, 100.0 * r.fuel_cost_delta, r.lcoe, 100.0 * r.lcoe_delta, r.emission,
               r.emission_delta});
    }
    return t;
}

inline constexpr const char* kFig15Source =
    "Fig. 15: green ammonia supply capacity and demand by 2030, Mt NH3/yr (inputs: Tables 6-8)";

inline Table supply_table(const scenarios::SupplyAssumptions& s, const std::vector<scenarios::SupplyLevel>& levels)
{
    Table t{kFig15Source, {"level", "renewable_share", "supply_mt"}, {}};
    for (const auto& l : levels)
        t.add({std::to_string(l.level), l.renewable_share, scenarios::supply_capacity(s, l.renewable_share)});
    return t;
}

inline Table demand_table(const scenarios::DemandAssumptions& d, const std::vector<scenarios::DemandLevel>& levels)
{
    Table t{kFig15Source, {"level", "sector", "demand_mt"}, {}};
    for (const auto& l : levels) {
        const auto s = scenarios::demand_at(d, l);
        const std::string lv = std::to_string(l.level);
        t.add({lv, std::string("ammonia"), s.ammonia});
        t.add({lv, std::string("power"), s.power});
        t.add({lv, std::string("shipping"), s.shipping});
        t.add({lv, std::string("mobility"), s.mobility});
        t.add({lv, std::string("total"), s.total()});
    }
    return t;
}

inline Table balance_table(const scenarios::BalanceReport& r)
{
    Table t{kFig15Source, {"supply_level", "demand_level", "supply_mt", "demand_mt", "coverage", "covered"}, {}};
    for (const auto& c : r.coverage) {
        double supply = 0.0, demand = 0.0;
        for (const auto& s : r.supply)
            if (s.level == c.supply_level) supply = s.supply_mt;
        for (const auto& d : r.demand)
            if (d.level == c.demand_level) demand = d.demand.total();
        t.add({std::to_string(c.supply_level), std::to_string(c.demand_level), supply, demand, c.ratio, c.covered});
    }
    return t;
}

/// Supply levels followed by per-sector demand levels, the layout of the figure's bars.
inline Table fig15_table(const scenarios::SupplyAssumptions& s, const scenarios::DemandAssumptions& d,
                         const std::vector<scenarios::SupplyLevel>& supply,
                         const std::vector<scenarios::DemandLevel>& demand)
{
    Table t{kFig15Source, {"kind", "level", "sector", "mt_per_yr"}, {}};
    for (const auto& l : supply)
        t.add({std::string("supply"), std::to_string(l.level), std::string("renewable"),
               scenarios::supply_capacity(s, l.renewable_share)});
    for (const auto& row : demand_table(d, demand).rows) t.add({std::string("demand"), row[0], row[1], row[2]});
    return t;
}

inline Table params_table(const data_io::Dataset& d)
{
    Table t{"effective parameter set (bundled < user directory < --params file)",
            {"namespace", "key", "value", "unit", "provenance"},
            {}};
    for (auto ns : data_io::kNamespaces)
        for (const auto& e : d.params(ns).entries())
            t.add({std::string(ns), e.key, data_io::format_canonical(e.value), e.unit, e.provenance});
    return t;
}

inline Table ledger_table(const std::vector<data_io::LedgerEntry>& ledger)
{
    Table t{"calibration ledger: back-solved and assumed constants", {"constant", "value", "unit", "oracle"}, {}};
    for (const auto& e : ledger) t.add({e.constant, e.value, e.unit, e.oracle});
    return t;
}

// ---------------------------------------------------------------------------
// Driver

inline const std::vector<double> kDeliveryVolumes{10, 30, 50, 100};
inline const std::vector<double> kDeliveryDistances{500, 1000, 1500, 2000, 2500, 3000};
inline const std::vector<double> kStorageDays{30, 90, 150, 365, 730, 1000, 2000};

struct Output {
    std::string path; ///< file, or directory for report; empty means the output stream
    std::vector<std::pair<std::string, std::string>> files;
    std::string text;
};

inline fs::path resolve_input(const std::string& name, const fs::path& data_dir)
{
    const fs::path p(name);
    if (fs::exists(p) || p.is_absolute()) return p;
    if (fs::exists(data_dir / p)) return data_dir / p;
    return p;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Techno-economic models for green ammonia: regional GTFP, carrier costs, co-firing, 2030 scenarios",
                 "ammonia"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string data_dir = data_io::default_data_dir().string();
    std::string format_name = "csv";
    std::string output;
    std::string params_file;
    std::string user_dir;
    app.add_option("--data-dir", data_dir, "Dataset directory (default $AMMONIA_DATA_DIR or the bundled data)");
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", output, "Output file (report: output directory)");
    app.add_option("--params", params_file, "Parameter overrides with namespace-qualified keys");
    app.add_option("--user-dir", user_dir, "Directory of per-namespace override files (default $AMMONIA_USER_DIR)");

    auto* gtfp_cmd = app.add_subcommand("gtfp", "Regional GTFP and intensities");
    std::string regions_file;
    gtfp_cmd->add_option("--regions", regions_file, "Region table (default regions_2019.csv in the data directory)");

    auto* carrier_cmd = app.add_subcommand("carrier", "Hydrogen carrier costs");
    carrier_cmd->require_subcommand(1);
    auto* delivery_cmd = carrier_cmd->add_subcommand("delivery", "Delivery cost grid");
    std::vector<double> volumes = kDeliveryVolumes;
    std::vector<double> distances{500};
    std::vector<std::string> media = all_delivery_media();
    delivery_cmd->add_option("--volume", volumes, "Annual hydrogen volume, kt/yr")->delimiter(',');
    delivery_cmd->add_option("--distance", distances, "Distance, km")->delimiter(',');
    delivery_cmd->add_option("--medium", media, "NH3, NH3_direct, LH2, GH2_pipeline")->delimiter(',');
    auto* storage_cmd = carrier_cmd->add_subcommand("storage", "Storage cost grid");
    std::vector<double> days = kStorageDays;
    double storage_volume = 100;
    std::vector<std::string> storage_media{"NH3", "LH2"};
    storage_cmd->add_option("--days", days, "Storage duration, days")->delimiter(',');
    storage_cmd->add_option("--volume", storage_volume, "Annual hydrogen volume, kt/yr");
    storage_cmd->add_option("--medium", storage_media, "NH3, LH2")->delimiter(',');

    auto* cofire_cmd = app.add_subcommand("cofire", "Ammonia co-firing costs and emissions");
    std::vector<double> rates;
    bool all_rates = false;
    bool interpolate = false;
    auto* rate_opt = cofire_cmd->add_option("--rate", rates, "Co-firing rate(s) as fractions")->delimiter(',');
    cofire_cmd->add_flag("--all", all_rates, "All scenario rates")->excludes(rate_opt);
    cofire_cmd->add_flag("--interpolate", interpolate, "Interpolate efficiency loss between tabulated rates");

    auto* scenario_cmd = app.add_subcommand("scenario", "2030 supply and demand");
    scenario_cmd->require_subcommand(1);
    auto* supply_cmd = scenario_cmd->add_subcommand("supply", "Supply capacity by level");
    std::vector<double> shares;
    supply_cmd->add_option("--share", shares, "Renewable share(s) instead of the bundled levels")->delimiter(',');
    auto* demand_cmd = scenario_cmd->add_subcommand("demand", "Sector demand by level");
    int demand_level = 0;
    demand_cmd->add_option("--level", demand_level, "Single demand level");
    auto* balance_cmd = scenario_cmd->add_subcommand("balance", "Supply coverage of demand");

    auto* report_cmd = app.add_subcommand("report", "Write every figure table into --output DIR");
    app.add_subcommand("params", "Print the effective parameter set");
    app.add_subcommand("ledger", "Print the calibration ledger");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitInput;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Csv;
    const char* ext = format == Format::Json ? ".json" : ".csv";
    Output result;
    result.path = output;
    std::vector<std::string> warnings;

    try {
        data_io::LoadOptions options;
        if (!params_file.empty()) options.params_file = fs::path(params_file);
        if (!user_dir.empty()) options.user_dir = fs::path(user_dir);
        else options.user_dir = data_io::env_user_dir();
        const fs::path dir(data_dir);
        const auto data = data_io::load_dataset(dir, options);

        if (gtfp_cmd->parsed()) {
            const auto regions =
                regions_file.empty() ? data.regions : data_io::load_regions(resolve_input(regions_file, dir));
            result.text = render(gtfp_table(regions), format);
        } else if (delivery_cmd->parsed()) {
            result.text = render(delivery_table(data.carriers, media, volumes, distances,
                                                "Figs. 11-12: hydrogen delivery cost, USD/kg H2 (inputs: Table 3)",
                                                warnings),
                                 format);
        } else if (storage_cmd->parsed()) {
            result.text = render(storage_table(data.carriers, storage_media, storage_volume, days, warnings), format);
        } else if (cofire_cmd->parsed()) {
            std::vector<double> list = rates;
            if (all_rates || list.empty()) list.assign(cofiring::kScenarioRates.begin(), cofiring::kScenarioRates.end());
            const auto mode = interpolate ? cofiring::LossLookup::Interpolate : cofiring::LossLookup::Exact;
            result.text = render(cofiring_table(cofiring::params_from(data.cofiring), list, mode), format);
        } else if (supply_cmd->parsed()) {
            auto levels = data.supply_levels;
            if (!shares.empty()) {
                levels.clear();
                for (std::size_t i = 0; i < shares.size(); ++i)
                    levels.push_back({static_cast<int>(i + 1), shares[i]});
            }
            result.text = render(supply_table(scenarios::supply_from(data.scenarios), levels), format);
        } else if (demand_cmd->parsed()) {
            auto levels = data.demand_levels;
            if (demand_level != 0) {
                std::erase_if(levels, [&](const scenarios::DemandLevel& l) { return l.level != demand_level; });
                if (levels.empty()) throw InputError("no demand level " + std::to_string(demand_level));
            }
            result.text = render(demand_table(scenarios::demand_from(data.scenarios), levels), format);
        } else if (balance_cmd->parsed()) {
            const auto report = scenarios::balance_report(scenarios::supply_from(data.scenarios),
                                                          scenarios::demand_from(data.scenarios), data.supply_levels,
                                                          data.demand_levels);
            result.text = render(balance_table(report), format);
        } else if (report_cmd->parsed()) {
            if (output.empty()) throw InputError("report needs --output DIR");
            const auto supply = scenarios::supply_from(data.scenarios);
            const auto demand = scenarios::demand_from(data.scenarios);
            result.files.emplace_back(std::string("fig10_gtfp") + ext, render(gtfp_table(data.regions), format));
            result.files.emplace_back(
                std::string("fig11_delivery_by_volume") + ext,
                render(delivery_table(data.carriers, {"NH3", "LH2", "GH2_pipeline"}, kDeliveryVolumes, {500},
                                      "Fig. 11: hydrogen delivery cost by annual volume at 500 km, USD/kg H2 "
                                      "(inputs: Table 3)",
                                      warnings),
                       format));
            result.files.emplace_back(
                std::string("fig12_delivery_by_distance") + ext,
                render(delivery_table(data.carriers, all_delivery_media(), {50, 100}, kDeliveryDistances,
                                      "Fig. 12: hydrogen delivery cost by distance, USD/kg H2 (inputs: Table 3)",
                                      warnings),
                       format));
            result.files.emplace_back(std::string("fig13_storage_by_days") + ext,
                                      render(storage_table(data.carriers, {"NH3", "LH2"}, 100, kStorageDays, warnings),
                                             format));
            result.files.emplace_back(
                std::string("fig14_cofiring") + ext,
                render(cofiring_table(cofiring::params_from(data.cofiring),
                                      {cofiring::kScenarioRates.begin(), cofiring::kScenarioRates.end()},
                                      cofiring::LossLookup::Exact),
                       format));
            result.files.emplace_back(std::string("fig15_supply_demand") + ext,
                                      render(fig15_table(supply, demand, data.supply_levels, data.demand_levels),
                                             format));
        } else if (app.got_subcommand("params")) {
            result.text = render(params_table(data), format);
        } else if (app.got_subcommand("ledger")) {
            result.text = render(ledger_table(data.manifest.ledger), format);
        }

        // Everything computed; now write.
        if (!result.files.empty()) {
            const fs::path root(result.path);
            std::error_code ec;
            fs::create_directories(root, ec);
            if (ec) throw InputError("cannot create output directory '" + root.string() + "': " + ec.message());
            for (const auto& [name, text] : result.files) {
                std::ofstream f(root / name, std::ios::binary);
                if (!(f << text)) throw InputError("cannot write '" + (root / name).string() + "'");
            }
        } else if (!result.path.empty()) {
            std::ofstream f(result.path, std::ios::binary);
            if (!(f << result.text)) throw InputError("cannot write '" + result.path + "'");
        } else {
            out << result.text;
        }
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    std::sort(warnings.begin(), warnings.end());
    warnings.erase(std::unique(warnings.begin(), warnings.end()), warnings.end());
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace ammonia::cli
