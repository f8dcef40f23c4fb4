#pragma once

// Bundled datasets: comma-delimited text with '#' comments and a mandatory
// header row. Parameter files carry key, value, unit and a provenance column
// that may itself contain commas. A MANIFEST.csv of SHA-256 digests guards
// the bundled files.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <openssl/evp.h>

#include "ammonia/error.hpp"
#include "ammonia/gtfp.hpp"
#include "ammonia/parameters.hpp"
#include "ammonia/scenarios.hpp"

#ifndef AMMONIA_DEFAULT_DATA_DIR
#define AMMONIA_DEFAULT_DATA_DIR "data"
#endif

namespace ammonia::data_io {

namespace fs = std::filesystem;

inline constexpr std::string_view kParameterHeader = "key,value,unit,provenance";
inline constexpr std::string_view kVersionPrefix = "# version:";

// ---------------------------------------------------------------------------
// Low-level text handling

inline std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Splits on commas; with `max_fields` > 0 the last field keeps any further commas.
inline std::vector<std::string> split_fields(std::string_view line, std::size_t max_fields = 0)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        if (max_fields != 0 && out.size() + 1 == max_fields) {
            out.emplace_back(line.substr(start));
            break;
        }
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline double parse_number(std::string_view text, const std::string& where)
{
    const auto t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
        throw InputError(where + ": '" + std::string(text) + "' is not a number");
    return v;
}

/// Shortest round-trip decimal in fixed notation; the canonical file format.
inline std::string format_canonical(double v)
{
    std::array<char, 512> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
    if (ec != std::errc{}) throw InputError("cannot format value");
    return {buf.data(), ptr};
}

struct CsvRow {
    std::size_t line = 0; ///< 1-based line number in the file
    std::vector<std::string> fields;
};

/// A parsed delimited file: leading comment lines, header and data rows.
struct CsvTable {
    std::string source;
    std::vector<std::string> preamble;
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    std::string where(const CsvRow& row) const { return source + ":" + std::to_string(row.line); }

    std::string where(const CsvRow& row, std::size_t column) const
    {
        return where(row) + ": column '" + (column < header.size() ? header[column] : std::to_string(column + 1)) + "'";
    }

    std::size_t column(std::string_view name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw InputError(source + ": missing column '" + std::string(name) + "'");
    }

    std::string version() const
    {
        for (const auto& line : preamble)
            if (line.starts_with(kVersionPrefix)) return std::string(trim(std::string_view(line).substr(kVersionPrefix.size())));
        return {};
    }
};

/// Parses delimited text. With `trailing_free` the last header column absorbs
/// extra commas in each row; otherwise every row must match the header width.
inline CsvTable parse_csv(std::string_view text, std::string source, bool trailing_free = false)
{
    CsvTable t;
    t.source = std::move(source);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        if (line.front() == '#') {
            if (t.header.empty()) t.preamble.emplace_back(line);
            continue;
        }
        if (t.header.empty()) {
            for (auto& f : split_fields(line)) t.header.emplace_back(trim(f));
            continue;
        }
        CsvRow row{line_no, split_fields(line, trailing_free ? t.header.size() : 0)};
        if (row.fields.size() != t.header.size())
            throw InputError(t.where(row) + ": expected " + std::to_string(t.header.size()) + " fields, found " +
                             std::to_string(row.fields.size()));
        for (auto& f : row.fields) f = std::string(trim(f));
        t.rows.push_back(std::move(row));
    }
    if (t.header.empty()) throw InputError(t.source + ": no records");
    return t;
}

inline CsvTable read_csv(const fs::path& path, bool trailing_free = false)
{
    return parse_csv(read_file(path), path.string(), trailing_free);
}

// ---------------------------------------------------------------------------
// Regions

inline constexpr std::array<std::string_view, 6> kRegionColumns{"region",       "energy_mtce", "labour_m",
                                                                 "capital_busd", "co2_mt",      "gdp_busd"};

inline std::vector<gtfp::RegionRecord> regions_from(const CsvTable& t)
{
    std::array<std::size_t, 6> col{};
    for (std::size_t i = 0; i < kRegionColumns.size(); ++i) col[i] = t.column(kRegionColumns[i]);
    if (t.rows.empty()) throw InputError(t.source + ": no records");

    std::vector<gtfp::RegionRecord> out;
    for (const auto& row : t.rows) {
        gtfp::RegionRecord r;
        r.name = row.fields[col[0]];
        if (r.name.empty()) throw InputError(t.where(row, col[0]) + ": empty region name");
        std::array<double*, 5> slots{&r.energy_mtce, &r.labour_m, &r.capital_busd, &r.co2_mt, &r.gdp_busd};
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const auto c = col[k + 1];
            *slots[k] = parse_number(row.fields[c], t.where(row, c));
            if (!(*slots[k] > 0.0))
                throw InputError(t.where(row, c) + ": value for region '" + r.name + "' must be positive");
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<gtfp::RegionRecord> load_regions(const fs::path& path) { return regions_from(read_csv(path)); }

inline std::string serialize_regions(const std::vector<std::string>& preamble,
                                     const std::vector<gtfp::RegionRecord>& regions)
{
    std::string out;
    for (const auto& line : preamble) out += line + "\n";
    for (std::size_t i = 0; i < kRegionColumns.size(); ++i) out += (i ? "," : "") + std::string(kRegionColumns[i]);
    out += "\n";
    for (const auto& r : regions) {
        out += r.name;
        for (double v : {r.energy_mtce, r.labour_m, r.capital_busd, r.co2_mt, r.gdp_busd}) out += "," + format_canonical(v);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parameter schemas

struct SchemaEntry {
    std::string_view key;
    std::string_view unit;
};

inline constexpr std::array<SchemaEntry, 42> kCarrierSchema{{
    {"discount_rate", "fraction"},
    {"lifetime_years", "yr"},
    {"electricity_price", "USD/MWh"},
    {"fixed_opex_rate", "fraction/yr"},
    {"truck_opex_rate", "fraction/yr"},
    {"ammonia_plant_capex", "USD/t"},
    {"reformer_capex_10kt", "USD/t"},
    {"reformer_capex_30kt", "USD/t"},
    {"reformer_capex_50kt", "USD/t"},
    {"reformer_capex_100kt", "USD/t"},
    {"tanker_capex", "USD"},
    {"vessel_capex", "USD/t"},
    {"liquefier_capex_10kt", "USD/t"},
    {"liquefier_capex_30kt", "USD/t"},
    {"liquefier_capex_50kt", "USD/t"},
    {"liquefier_capex_100kt", "USD/t"},
    {"vaporizer_capex", "USD"},
    {"vaporizer_capacity", "kt"},
    {"cryo_tank_capex", "USD/m3"},
    {"pipeline_capex_10kt", "USD/km"},
    {"pipeline_capex_30kt", "USD/km"},
    {"pipeline_capex_50kt", "USD/km"},
    {"pipeline_capex_100kt", "USD/km"},
    {"synthesis_conversion", "fraction"},
    {"reform_conversion", "fraction"},
    {"energy_nh3_production", "MWh/t"},
    {"energy_nh3_decomposition", "MWh/t"},
    {"energy_nh3_cooling", "MWh/t"},
    {"energy_nh3_storage", "kWh/t/d"},
    {"energy_liquefaction", "MWh/t"},
    {"energy_regasification", "kWh/t"},
    {"energy_pipeline", "MWh/t/100km"},
    {"evaporation_nh3", "fraction/d"},
    {"evaporation_lh2", "fraction/d"},
    {"leakage_pipeline", "fraction/1000km"},
    {"truck_payload_nh3", "t"},
    {"truck_payload_lh2", "t"},
    {"truck_trips_per_day", "1/d"},
    {"truck_reference_distance", "km"},
    {"delivery_buffer_days", "d"},
    {"stored_share", "fraction"},
    {"lh2_density", "kg/m3"},
}};

inline constexpr std::array<SchemaEntry, 18> kCofiringSchema{{
    {"coal_price", "USD/tce"},
    {"coal_price_min", "USD/tce"},
    {"coal_price_max", "USD/tce"},
    {"lng_price_min", "USD/tce"},
    {"lng_price_max", "USD/tce"},
    {"gas_price_reference", "USD/tce"},
    {"lhv_coal", "kcal/kg"},
    {"lhv_nh3", "MJ/kg"},
    {"ammonia_production_cost", "USD/t"},
    {"gross_margin", "fraction"},
    {"coal_consumption", "tce/MWh"},
    {"base_emission", "kgCO2/MWh"},
    {"fuel_cost_share", "fraction"},
    {"efficiency_loss_3", "fraction"},
    {"efficiency_loss_5", "fraction"},
    {"efficiency_loss_10", "fraction"},
    {"efficiency_loss_15", "fraction"},
    {"efficiency_loss_20", "fraction"},
}};

inline constexpr std::array<SchemaEntry, 17> kScenarioSchema{{
    {"wind_capacity", "GW"},
    {"solar_capacity", "GW"},
    {"thermal_capacity", "GW"},
    {"conventional_ammonia", "Mt"},
    {"shipping_fuel", "Mt"},
    {"wind_hours", "h"},
    {"solar_hours", "h"},
    {"coal_hours", "h"},
    {"coal_share", "fraction"},
    {"electrolyser_efficiency", "fraction"},
    {"synthesis_conversion", "fraction"},
    {"coal_consumption", "tce/MWh"},
    {"hrs_count", "ea"},
    {"hrs_capacity", "kg/d"},
    {"lhv_nh3", "MJ/kg"},
    {"lhv_heating_oil", "MJ/kg"},
    {"hydrogen_heating_value_basis", "flag"},
}};

inline constexpr std::array<std::string_view, 3> kNamespaces{"carriers", "cofiring", "scenarios"};

inline std::span<const SchemaEntry> schema_for(std::string_view name_space)
{
    if (name_space == "carriers") return kCarrierSchema;
    if (name_space == "cofiring") return kCofiringSchema;
    if (name_space == "scenarios") return kScenarioSchema;
    throw InputError("unknown parameter namespace '" + std::string(name_space) + "'");
}

inline const SchemaEntry* schema_entry(std::string_view name_space, std::string_view key)
{
    for (const auto& e : schema_for(name_space))
        if (e.key == key) return &e;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Parameter files

/// Parses a parameter table. Checks duplicates, unknown keys, units and
/// provenance; completeness is checked separately so partial override files
/// can share this path.
inline ParameterSet parameters_from(const CsvTable& t, std::string name_space)
{
    const auto expected = split_fields(kParameterHeader);
    if (t.header != expected)
        throw InputError(t.source + ": header must be '" + std::string(kParameterHeader) + "'");
    schema_for(name_space);

    ParameterSet set(std::move(name_space), t.version());
    for (const auto& line : t.preamble) set.add_preamble(line);
    for (const auto& row : t.rows) {
        const auto& key = row.fields[0];
        if (key.empty()) throw InputError(t.where(row, 0) + ": empty key");
        if (set.contains(key)) throw InputError(t.where(row, 0) + ": duplicate key '" + key + "'");
        const auto* schema = schema_entry(set.name_space(), key);
        if (schema == nullptr) throw InputError(t.where(row, 0) + ": unknown key '" + set.qualified(key) + "'");
        const double value = parse_number(row.fields[1], t.where(row, 1));
        if (row.fields[2] != schema->unit)
            throw InputError(t.where(row, 2) + ": unit mismatch for '" + set.qualified(key) + "': expected " +
                             std::string(schema->unit) + ", found " + row.fields[2]);
        if (row.fields[3].empty()) throw InputError(t.where(row, 3) + ": provenance for '" + key + "' is empty");
        set.set({key, value, row.fields[2], row.fields[3]});
    }
    return set;
}

inline void require_complete(const ParameterSet& set, const std::string& source)
{
    std::string missing;
    for (const auto& e : schema_for(set.name_space()))
        if (!set.contains(e.key)) missing += (missing.empty() ? "" : ", ") + std::string(e.key);
    if (!missing.empty()) throw InputError(source + ": missing keys for '" + set.name_space() + "': " + missing);
}

/// A complete parameter set for `name_space`.
inline ParameterSet load_params(const fs::path& path, std::string name_space)
{
    auto set = parameters_from(read_csv(path, true), std::move(name_space));
    require_complete(set, path.string());
    return set;
}

/// Canonical text: preamble, header, one entry per line in file order.
inline std::string serialize(const ParameterSet& set)
{
    std::string out;
    for (const auto& line : set.preamble()) out += line + "\n";
    out += std::string(kParameterHeader) + "\n";
    for (const auto& e : set.entries())
        out += e.key + "," + format_canonical(e.value) + "," + e.unit + "," + e.provenance + "\n";
    return out;
}

/// Override file with namespace-qualified keys (`carriers.electricity_price`).
inline std::map<std::string, ParameterSet, std::less<>> load_qualified_overrides(const fs::path& path)
{
    const auto t = read_csv(path, true);
    const auto expected = split_fields(kParameterHeader);
    if (t.header != expected)
        throw InputError(t.source + ": header must be '" + std::string(kParameterHeader) + "'");
    std::map<std::string, CsvTable, std::less<>> split;
    for (const auto& row : t.rows) {
        const auto& qualified = row.fields[0];
        const auto dot = qualified.find('.');
        if (dot == std::string::npos)
            throw InputError(t.where(row, 0) + ": key '" + qualified + "' must be namespace-qualified");
        const std::string ns = qualified.substr(0, dot);
        schema_for(ns);
        auto& part = split[ns];
        if (part.header.empty()) {
            part.source = t.source;
            part.header = t.header;
        }
        CsvRow r = row;
        r.fields[0] = qualified.substr(dot + 1);
        part.rows.push_back(std::move(r));
    }
    std::map<std::string, ParameterSet, std::less<>> out;
    for (const auto& [ns, part] : split) out.emplace(ns, parameters_from(part, ns));
    return out;
}

// ---------------------------------------------------------------------------
// Scenario levels and emission series

inline std::vector<scenarios::SupplyLevel> load_supply_levels(const fs::path& path)
{
    const auto t = read_csv(path);
    const auto lc = t.column("level");
    const auto sc = t.column("renewable_share");
    if (t.rows.empty()) throw InputError(t.source + ": no records");
    std::vector<scenarios::SupplyLevel> out;
    for (const auto& row : t.rows) {
        const double level = parse_number(row.fields[lc], t.where(row, lc));
        const double share = parse_number(row.fields[sc], t.where(row, sc));
        if (share < 0.0 || share > 1.0) throw InputError(t.where(row, sc) + ": share must lie in [0, 1]");
        out.push_back({static_cast<int>(level), share});
    }
    return out;
}

inline std::vector<scenarios::DemandLevel> load_demand_levels(const fs::path& path)
{
    const auto t = read_csv(path);
    const std::array<std::size_t, 5> c{t.column("level"), t.column("ammonia"), t.column("power"),
                                       t.column("shipping"), t.column("mobility")};
    if (t.rows.empty()) throw InputError(t.source + ": no records");
    std::vector<scenarios::DemandLevel> out;
    for (const auto& row : t.rows) {
        std::array<double, 5> v{};
        for (std::size_t k = 0; k < c.size(); ++k) {
            v[k] = parse_number(row.fields[c[k]], t.where(row, c[k]));
            if (k > 0 && (v[k] < 0.0 || v[k] > 1.0))
                throw InputError(t.where(row, c[k]) + ": penetration rate must lie in [0, 1]");
        }
        out.push_back({static_cast<int>(v[0]), v[1], v[2], v[3], v[4]});
    }
    return out;
}

struct EmissionPoint {
    std::string series;
    int year = 0;
    double co2_mt = 0.0;
};

inline std::vector<EmissionPoint> load_emission_series(const fs::path& path)
{
    const auto t = read_csv(path);
    const auto sc = t.column("series");
    const auto yc = t.column("year");
    const auto vc = t.column("co2_mt");
    std::vector<EmissionPoint> out;
    for (const auto& row : t.rows) {
        const double year = parse_number(row.fields[yc], t.where(row, yc));
        const double v = parse_number(row.fields[vc], t.where(row, vc));
        if (!(v > 0.0)) throw InputError(t.where(row, vc) + ": emission must be positive");
        out.push_back({row.fields[sc], static_cast<int>(year), v});
    }
    if (out.empty()) throw InputError(t.source + ": no records");
    return out;
}

inline double series_value(const std::vector<EmissionPoint>& points, std::string_view series, int year)
{
    for (const auto& p : points)
        if (p.series == series && p.year == year) return p.co2_mt;
    throw InputError("emission series '" + std::string(series) + "' has no value for " + std::to_string(year));
}

struct GapFill {
    double cagr;
    double estimate_mt;
};

/// Grows `region`'s value at `from_year` to `to_year` at the national compound rate.
inline GapFill fill_emission_gap(const std::vector<EmissionPoint>& points, std::string_view region, int from_year,
                                 int to_year)
{
    const int years = to_year - from_year;
    const double cagr = gtfp::compound_growth_rate(series_value(points, "national", from_year),
                                                   series_value(points, "national", to_year), years);
    return {cagr, gtfp::extrapolate_emission(series_value(points, region, from_year), cagr, years)};
}

// ---------------------------------------------------------------------------
// Calibration ledger and manifest

struct LedgerEntry {
    std::string constant;
    double value = 0.0;
    std::string unit;
    std::string oracle;
};

inline std::vector<LedgerEntry> load_ledger(const fs::path& path)
{
    const auto t = read_csv(path, true);
    const std::array<std::size_t, 4> c{t.column("constant"), t.column("value"), t.column("unit"), t.column("oracle")};
    std::vector<LedgerEntry> out;
    for (const auto& row : t.rows) {
        LedgerEntry e{row.fields[c[0]], parse_number(row.fields[c[1]], t.where(row, c[1])), row.fields[c[2]],
                      row.fields[c[3]]};
        if (e.constant.empty() || e.oracle.empty())
            throw InputError(t.where(row) + ": ledger entries need a constant name and an oracle");
        out.push_back(std::move(e));
    }
    return out;
}

inline std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw InputError("SHA-256 computation failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

struct ManifestEntry {
    std::string file;
    std::string sha256;
};

struct DatasetManifest {
    std::vector<ManifestEntry> files;
    std::vector<LedgerEntry> ledger;
};

inline constexpr std::string_view kManifestName = "MANIFEST.csv";

inline std::vector<ManifestEntry> load_manifest(const fs::path& path)
{
    const auto t = read_csv(path);
    const auto fc = t.column("file");
    const auto hc = t.column("sha256");
    std::vector<ManifestEntry> out;
    for (const auto& row : t.rows) out.push_back({row.fields[fc], row.fields[hc]});
    return out;
}

/// Throws naming the first file whose digest differs from the manifest.
inline void verify_manifest(const fs::path& dir, const std::vector<ManifestEntry>& files)
{
    for (const auto& f : files) {
        const auto actual = sha256_hex(read_file(dir / f.file));
        if (actual != f.sha256)
            throw InputError("digest mismatch for '" + (dir / f.file).string() + "': manifest " + f.sha256 +
                             ", file " + actual);
    }
}

inline fs::path default_data_dir()
{
    if (const char* env = std::getenv("AMMONIA_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return AMMONIA_DEFAULT_DATA_DIR;
}

/// Ledger of back-solved and assumed constants shipped with the data.
inline std::vector<LedgerEntry> calibration_ledger(const fs::path& dir = default_data_dir())
{
    return load_ledger(dir / "calibration.csv");
}

// ---------------------------------------------------------------------------
// Whole dataset

struct LoadOptions {
    std::optional<fs::path> user_dir;    ///< holds optional <namespace>.csv partial overrides
    std::optional<fs::path> params_file; ///< namespace-qualified overrides, applied last
    bool verify_digests = true;
};

struct Dataset {
    fs::path dir;
    std::vector<gtfp::RegionRecord> regions;
    ParameterSet carriers;
    ParameterSet cofiring;
    ParameterSet scenarios;
    std::vector<scenarios::SupplyLevel> supply_levels;
    std::vector<scenarios::DemandLevel> demand_levels;
    std::vector<EmissionPoint> national_co2;
    DatasetManifest manifest;

    ParameterSet& params(std::string_view name_space)
    {
        if (name_space == "carriers") return carriers;
        if (name_space == "cofiring") return cofiring;
        if (name_space == "scenarios") return scenarios;
        throw InputError("unknown parameter namespace '" + std::string(name_space) + "'");
    }
    const ParameterSet& params(std::string_view name_space) const
    {
        return const_cast<Dataset*>(this)->params(name_space);
    }
};

inline std::optional<fs::path> env_user_dir()
{
    if (const char* env = std::getenv("AMMONIA_USER_DIR"); env != nullptr && *env != '\0') return fs::path(env);
    return std::nullopt;
}

/// Bundled files, then user-directory overrides, then the --params file.
inline Dataset load_dataset(const fs::path& dir, const LoadOptions& options = {})
{
    if (!fs::is_directory(dir)) throw InputError("data directory '" + dir.string() + "' does not exist");
    Dataset d;
    d.dir = dir;
    if (const auto manifest = dir / kManifestName; fs::exists(manifest)) {
        d.manifest.files = load_manifest(manifest);
        if (options.verify_digests) verify_manifest(dir, d.manifest.files);
    }
    d.regions = load_regions(dir / "regions_2019.csv");
    for (auto ns : kNamespaces) d.params(ns) = load_params(dir / (std::string(ns) + ".csv"), std::string(ns));
    d.supply_levels = load_supply_levels(dir / "supply_levels.csv");
    d.demand_levels = load_demand_levels(dir / "demand_levels.csv");
    d.national_co2 = load_emission_series(dir / "national_co2.csv");
    d.manifest.ledger = load_ledger(dir / "calibration.csv");

    if (options.user_dir) {
        for (auto ns : kNamespaces) {
            const auto path = *options.user_dir / (std::string(ns) + ".csv");
            if (fs::exists(path)) d.params(ns).overlay(parameters_from(read_csv(path, true), std::string(ns)));
        }
    }
    if (options.params_file)
        for (const auto& [ns, set] : load_qualified_overrides(*options.params_file)) d.params(ns).overlay(set);
    return d;
}

/// Consumed parameters whose provenance is neither a source table nor a
/// ledger entry. Empty means every input is traceable.
inline std::vector<std::string> traceability_gaps(const Dataset& d)
{
    std::vector<std::string> gaps;
    for (auto ns : kNamespaces) {
        const auto& set = d.params(ns);
        for (const auto& e : schema_for(ns)) {
            const auto* p = set.find(e.key);
            if (p == nullptr || p->provenance.empty()) {
                gaps.push_back(set.qualified(e.key) + ": no provenance");
                continue;
            }
            if (!p->provenance.starts_with("calibration")) continue;
            const bool ledgered = std::any_of(d.manifest.ledger.begin(), d.manifest.ledger.end(), [&](const LedgerEntry& l) {
                return l.constant == p->key || p->provenance.find(l.constant) != std::string::npos;
            });
            if (!ledgered) gaps.push_back(set.qualified(e.key) + ": calibrated value missing from the ledger");
        }
    }
    return gaps;
}

} // namespace ammonia::data_io
