// Scores the bundled regions, prices a 3% co-firing blend and a 500 km
// ammonia delivery, straight from the library.

#include <cstdio>

#include "ammonia/carriers.hpp"
#include "ammonia/cofiring.hpp"
#include "ammonia/data_io.hpp"
#include "ammonia/gtfp.hpp"

int main()
{
    using namespace ammonia;
    const auto data = data_io::load_dataset(data_io::default_data_dir());

    for (const auto& r : gtfp::gtfp_scores(data.regions))
        std::printf("%-10s GTFP %.3f  EI %.2f kBtu/USD  CI %.2f kg/USD\n", r.name.c_str(), r.gtfp,
                    r.energy_intensity, r.carbon_intensity);

    const auto cof = cofiring::params_from(data.cofiring);
    const auto r3 = cofiring::evaluate(cof, 0.03);
    std::printf("\n3%% co-firing: fuel %.1f USD/tce (%+.1f%%), LCOE %.1f USD/MWh (%+.1f%%)\n", r3.fuel_cost,
                100 * r3.fuel_cost_delta, r3.lcoe, 100 * r3.lcoe_delta);

    const auto chains = carriers::builtin_chains(data.carriers, 100);
    const auto cost = carriers::delivery_cost(chains.nh3_cracked, carriers::make_query(data.carriers, 100, 500));
    std::printf("\nNH3 delivery, 100 kt/yr over 500 km: %.2f USD/kg H2\n", cost.total);
    for (const auto& s : cost.stages) std::printf("  %-17s %.3f\n", s.name.c_str(), s.usd_per_kg);
}
