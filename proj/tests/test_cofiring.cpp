#include <gtest/gtest.h>

#include "ammonia/cofiring.hpp"
#include "ammonia/data_io.hpp"

using namespace ammonia;
using namespace ammonia::cofiring;

namespace {

const CofiringParams& params()
{
    static const auto p = params_from(data_io::load_params(data_io::default_data_dir() / "cofiring.csv", "cofiring"));
    return p;
}

} // namespace

TEST(Cofiring, AmmoniaFuelPrice)
{
    EXPECT_NEAR(ammonia_fuel_price_per_tce(params()), 1356.66, 0.01);
    auto p = params();
    p.gross_margin = 0.0;
    EXPECT_NEAR(ammonia_fuel_price_per_tce(p), 1292.0555, 1e-4);
    EXPECT_NEAR(ammonia_fuel_price_per_tce(p), 1292.2, 0.2);
    // A fuel carrying exactly 1 tce per tonne prices the same per t and per tce.
    p.lhv_nh3 = 29.3076;
    EXPECT_NEAR(ammonia_fuel_price_per_tce(p), p.ammonia_production_cost, 1e-9);
}

TEST(Cofiring, CalibratedPriceRatio)
{
    EXPECT_NEAR(ammonia_fuel_price_per_tce(params()) / params().coal_price, 8.84, 0.02);
}

TEST(Cofiring, MixedFuelCost)
{
    EXPECT_DOUBLE_EQ(mixed_fuel_cost(params(), 0.0), params().coal_price);
    EXPECT_NEAR(mixed_fuel_cost(params(), 0.03) / params().coal_price, 1.235, 0.002);
    EXPECT_NEAR(mixed_fuel_cost(params(), 0.05), 213.5, 0.2);
    EXPECT_THROW(mixed_fuel_cost(params(), 1.5), InputError);
    EXPECT_THROW(mixed_fuel_cost(params(), -0.1), InputError);
}

TEST(Cofiring, MixedFuelCostIsAffine)
{
    const double a = mixed_fuel_cost(params(), 0.0);
    const double b = mixed_fuel_cost(params(), 1.0);
    for (double r : {0.07, 0.33, 0.81}) EXPECT_NEAR(mixed_fuel_cost(params(), r), a + r * (b - a), 1e-9);
}

TEST(Cofiring, Lcoe)
{
    const auto base = evaluate(params(), 0.0);
    EXPECT_DOUBLE_EQ(base.lcoe_delta, 0.0);
    EXPECT_NEAR(base.lcoe, 67.9644, 1e-4);
    EXPECT_NEAR(evaluate(params(), 0.03).lcoe_delta, 0.17, 0.005);
    EXPECT_NEAR(evaluate(params(), 0.05).lcoe_delta, 0.294, 0.002);
    EXPECT_NEAR(evaluate(params(), 0.20).lcoe, 150.3, 0.2);
}

TEST(Cofiring, Emission)
{
    EXPECT_DOUBLE_EQ(emission_intensity(params(), 0.0), 838.0);
    EXPECT_NEAR(evaluate(params(), 0.03).emission_delta, -25.1, 0.05);
    EXPECT_NEAR(evaluate(params(), 0.05).emission_delta, -41.9, 0.05);
}

TEST(Cofiring, LossLookup)
{
    EXPECT_DOUBLE_EQ(efficiency_loss(params(), 0.10), 0.03);
    EXPECT_THROW(efficiency_loss(params(), 0.04), InputError);
    EXPECT_THROW(evaluate(params(), 0.04), InputError);
    EXPECT_NEAR(efficiency_loss(params(), 0.04, LossLookup::Interpolate), 0.015, 1e-12);
    EXPECT_NEAR(efficiency_loss(params(), 0.015, LossLookup::Interpolate), 0.005, 1e-12);
    EXPECT_DOUBLE_EQ(efficiency_loss(params(), 0.5, LossLookup::Interpolate), 0.06);
    EXPECT_NO_THROW(evaluate(params(), 0.04, LossLookup::Interpolate));
}

TEST(Cofiring, ScenarioTableOrdering)
{
    const auto rows = scenario_table(params());
    ASSERT_EQ(rows.size(), kScenarioRates.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GT(rows[i].fuel_cost, rows[i - 1].fuel_cost);
        EXPECT_GT(rows[i].lcoe, rows[i - 1].lcoe);
        EXPECT_LT(rows[i].emission, rows[i - 1].emission);
    }
    EXPECT_NEAR(rows.back().fuel_cost / rows.front().fuel_cost, 2.57, 0.02);
}

TEST(Cofiring, ParamsValidation)
{
    ParameterSet p = data_io::load_params(data_io::default_data_dir() / "cofiring.csv", "cofiring");
    p.set({"efficiency_loss_abc", 0.1, "fraction", "test"});
    EXPECT_THROW(params_from(p), InputError);
    auto bad = params();
    bad.fuel_cost_share = 1.0;
    EXPECT_THROW(evaluate(bad, 0.0), InputError);
}
