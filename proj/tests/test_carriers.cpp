#include <gtest/gtest.h>

#include <algorithm>

#include "ammonia/carriers.hpp"
#include "ammonia/data_io.hpp"

using namespace ammonia;
using namespace ammonia::carriers;

namespace {

const ParameterSet& params()
{
    static const auto p = data_io::load_params(data_io::default_data_dir() / "carriers.csv", "carriers");
    return p;
}

CostBreakdown deliver(const CarrierChain& (*pick)(const BuiltinChains&), double kt, double km)
{
    const auto chains = builtin_chains(params(), kt);
    return delivery_cost(pick(chains), make_query(params(), kt, km));
}

const CarrierChain& cracked(const BuiltinChains& c) { return c.nh3_cracked; }
const CarrierChain& direct(const BuiltinChains& c) { return c.nh3_direct; }
const CarrierChain& lh2(const BuiltinChains& c) { return c.lh2; }
const CarrierChain& pipeline(const BuiltinChains& c) { return c.pipeline; }

double stored(const CarrierChain& (*pick)(const BuiltinChains&), double kt, double days)
{
    const auto chains = builtin_chains(params(), kt);
    return storage_cost(pick(chains), make_query(params(), kt, 500, days)).total;
}

} // namespace

TEST(Levelized, Examples)
{
    const std::vector<double> flat(10, 100.0);
    EXPECT_NEAR(levelized_cost(flat, flat, 0.08), 1.0, 1e-12);
    EXPECT_NEAR(levelized_cost(std::vector<double>{500}, std::vector<double>{250}, 0.08), 2.0, 1e-12);
    EXPECT_NEAR(levelized_flat(1000, 0, 100, 0.08, 20), 1.0185, 5e-5);
}

TEST(Levelized, Errors)
{
    EXPECT_THROW(levelized_cost(std::vector<double>{1, 2}, std::vector<double>{0, 0}, 0.08), InputError);
    EXPECT_THROW(levelized_cost(std::vector<double>{1, 2}, std::vector<double>{1}, 0.08), InputError);
    EXPECT_THROW(levelized_cost(std::vector<double>{}, std::vector<double>{}, 0.08), InputError);
}

TEST(Brackets, TabulatedValues)
{
    EXPECT_DOUBLE_EQ(interpolate_bracket(bracket_table(params(), "reformer_capex"), 10).capex, 354.0);
    EXPECT_DOUBLE_EQ(interpolate_bracket(bracket_table(params(), "pipeline_capex"), 100).capex, 833000.0);
    EXPECT_DOUBLE_EQ(interpolate_bracket(bracket_table(params(), "liquefier_capex"), 50).capex, 7397.0);
}

TEST(Brackets, InterpolateAndClamp)
{
    const auto t = bracket_table(params(), "reformer_capex");
    const auto mid = interpolate_bracket(t, 20);
    EXPECT_NEAR(mid.capex, (354.0 + 267.0) / 2, 1e-12);
    EXPECT_FALSE(mid.extrapolated);
    const auto low = interpolate_bracket(t, 5);
    EXPECT_DOUBLE_EQ(low.capex, 354.0);
    EXPECT_TRUE(low.extrapolated);
    EXPECT_TRUE(interpolate_bracket(t, 250).extrapolated);
}

TEST(Brackets, WarningOutsideRange)
{
    EXPECT_TRUE(builtin_chains(params(), 50).nh3_cracked.warning.empty());
    EXPECT_FALSE(deliver(cracked, 5, 500).warning.empty());
    EXPECT_FALSE(deliver(pipeline, 200, 500).warning.empty());
}

TEST(Chains, MissingKeyNamesIt)
{
    ParameterSet partial("carriers");
    for (const auto& e : params().entries())
        if (e.key != "tanker_capex") partial.set(e);
    try {
        builtin_chains(partial, 100);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("tanker_capex"), std::string::npos);
    }
}

TEST(Chains, StageOrderValidated)
{
    auto chain = builtin_chains(params(), 100).nh3_cracked;
    std::swap(chain.stages[1], chain.stages[3]);
    EXPECT_THROW(chain.validate(), InputError);

    auto pipe = builtin_chains(params(), 100).pipeline;
    pipe.stages.insert(pipe.stages.begin(), builtin_chains(params(), 100).nh3_cracked.stages[0]);
    EXPECT_THROW(pipe.validate(), InputError);
}

TEST(Chains, MassBalance)
{
    for (double km : {0.0, 500.0, 3000.0}) {
        const auto c = deliver(cracked, 100, km);
        EXPECT_GT(c.delivered_fraction, 0.0);
        EXPECT_LE(c.delivered_fraction, 0.95 * 0.95 + 1e-12);
        EXPECT_LE(deliver(direct, 100, km).delivered_fraction, 0.95 + 1e-12);
        EXPECT_LE(deliver(lh2, 100, km).delivered_fraction, 1.0);
    }
    EXPECT_LE(deliver(pipeline, 100, 3000).delivered_fraction, 1.0);
}

TEST(Chains, BreakdownSumsToTotal)
{
    const auto c = deliver(cracked, 30, 1500);
    double sum = 0.0;
    for (const auto& s : c.stages) sum += s.usd_per_kg;
    EXPECT_NEAR(sum, c.total, 1e-12);
    EXPECT_EQ(c.stages.size(), 4u);
    EXPECT_EQ(deliver(direct, 30, 1500).stages.size(), 3u);
    EXPECT_THROW(c.stage_cost("teleporter"), InputError);
}

// Reference outputs of the bundled parameters.
TEST(Chains, FrozenDeliveryCosts)
{
    EXPECT_NEAR(deliver(cracked, 10, 500).total, 1.466, 1e-3);
    EXPECT_NEAR(deliver(cracked, 100, 500).total, 1.342, 1e-3);
    EXPECT_NEAR(deliver(lh2, 10, 500).total, 1.643, 1e-3);
    EXPECT_NEAR(deliver(lh2, 100, 500).total, 1.385, 1e-3);
    EXPECT_NEAR(deliver(pipeline, 100, 500).total, 0.601, 1e-3);
    EXPECT_NEAR(deliver(pipeline, 50, 500).total, 0.929, 1e-3);
}

TEST(Chains, NonDecreasingInDistance)
{
    for (auto pick : {cracked, direct, lh2, pipeline})
        for (double kt : {10.0, 100.0}) {
            double prev = 0.0;
            for (double km = 100; km <= 3000; km += 100) {
                const double c = deliver(pick, kt, km).total;
                EXPECT_GE(c, prev - 1e-12) << kt << " kt at " << km << " km";
                prev = c;
            }
        }
}

TEST(Chains, AmmoniaDeliveryFlatAcrossVolumes)
{
    std::vector<double> costs;
    for (double kt : {10.0, 30.0, 50.0, 100.0}) costs.push_back(deliver(cracked, kt, 500).total);
    const auto [lo, hi] = std::minmax_element(costs.begin(), costs.end());
    EXPECT_LE(*hi / *lo, 1.15);
    EXPECT_TRUE(std::is_sorted(costs.rbegin(), costs.rend()));
}

TEST(Storage, MonotoneInDuration)
{
    for (auto pick : {cracked, lh2}) {
        double prev = 0.0;
        for (double d : {1.0, 30.0, 90.0, 150.0, 365.0, 730.0, 1000.0, 2000.0}) {
            const double c = stored(pick, 100, d);
            EXPECT_GE(c, prev - 1e-12) << d << " days";
            prev = c;
        }
    }
}

TEST(Storage, FrozenAndLimits)
{
    EXPECT_NEAR(stored(cracked, 100, 30), 0.646, 1e-3);
    EXPECT_NEAR(stored(cracked, 100, 150), 0.823, 1e-3);
    EXPECT_NEAR(stored(lh2, 100, 150), 2.515, 1e-3);
    EXPECT_GE(stored(lh2, 100, 150), 3.0 * stored(cracked, 100, 150));
    // Short holding converges on the fixed tank cost.
    EXPECT_NEAR(stored(cracked, 100, 1e-6), stored(cracked, 100, 1e-3), 1e-4);
    EXPECT_LT(stored(cracked, 100, 1e-6), stored(cracked, 100, 30));
}

TEST(Storage, Errors)
{
    const auto chains = builtin_chains(params(), 100);
    EXPECT_THROW(storage_cost(chains.pipeline, make_query(params(), 100, 500, 30)), InputError);
    EXPECT_THROW(storage_cost(chains.nh3_cracked, make_query(params(), 100, 500, 0)), InputError);
    EXPECT_THROW(make_query(params(), -1, 500), InputError);
}

TEST(Transport, ShareOfAmmoniaChain)
{
    for (double kt : {10.0, 30.0, 50.0, 100.0}) {
        const auto c = deliver(cracked, kt, 500);
        const double share = c.role_cost(StageRole::Transport) / c.total;
        EXPECT_GT(share, 0.02);
        EXPECT_LT(share, 0.08);
    }
}
