#include <gtest/gtest.h>

#include "ammonia/data_io.hpp"
#include "ammonia/gtfp.hpp"
#include "dea_properties.hpp"

using namespace ammonia;
using gtfp::Dmu;

namespace {

const std::vector<gtfp::RegionRecord>& regions()
{
    static const auto r = data_io::load_regions(data_io::default_data_dir() / "regions_2019.csv");
    return r;
}

const gtfp::RegionEfficiency& row(const gtfp::EfficiencyReport& rep, const std::string& name)
{
    for (const auto& r : rep)
        if (r.name == name) return r;
    throw std::runtime_error("no region " + name);
}

} // namespace

// Scores of the bundled 2019 regions, frozen from an independent LP solve.
TEST(Gtfp, FrozenRegionScores)
{
    const auto rep = gtfp::gtfp_scores(regions());
    ASSERT_EQ(rep.size(), 6u);
    EXPECT_NEAR(row(rep, "North").gtfp, 0.8857, 1e-4);
    EXPECT_NEAR(row(rep, "Northeast").gtfp, 0.7452, 1e-4);
    EXPECT_NEAR(row(rep, "East").gtfp, 1.0, 1e-9);
    EXPECT_NEAR(row(rep, "Mid-South").gtfp, 1.0, 1e-9);
    EXPECT_NEAR(row(rep, "Southwest").gtfp, 0.6947, 1e-4);
    EXPECT_NEAR(row(rep, "Northwest").gtfp, 0.6530, 1e-4);
    EXPECT_TRUE(row(rep, "East").efficient);
    EXPECT_FALSE(row(rep, "North").efficient);
}

TEST(Gtfp, NorthwestProgram)
{
    const auto& r = regions();
    std::size_t nw = 0;
    while (r[nw].name != "Northwest") ++nw;
    const auto lp = gtfp::build_dea_lp(r, nw);
    EXPECT_EQ(lp.variable_count(), 7u);
    EXPECT_EQ(lp.inequality_count(), 5u);
    EXPECT_NEAR(lp::solve(lp).objective, 0.653, 5e-4);
}

TEST(Gtfp, Intensities)
{
    const auto rep = gtfp::gtfp_scores(regions());
    EXPECT_NEAR(row(rep, "Mid-South").energy_intensity, 7.32, 0.01);
    EXPECT_NEAR(row(rep, "Mid-South").carbon_intensity, 0.51, 0.01);
    EXPECT_NEAR(row(rep, "Northwest").energy_intensity, 18.51, 0.01);
    EXPECT_NEAR(row(rep, "Northwest").carbon_intensity, 1.51, 0.01);
    EXPECT_NEAR(row(rep, "Southwest").energy_intensity, 11.38, 0.01);
    EXPECT_NEAR(row(rep, "Southwest").carbon_intensity, 0.74, 0.01);

    auto broke = regions()[0];
    broke.gdp_busd = 0.0;
    EXPECT_THROW(gtfp::intensities(broke), InputError);
}

TEST(Gtfp, SingleAndIdenticalUnits)
{
    const std::vector<Dmu> one{{{3, 4, 5, 6}, {7}}};
    EXPECT_NEAR(gtfp::dea_scores(one)[0], 1.0, 1e-12);
    const std::vector<Dmu> twins{{{3, 4, 5, 6}, {7}}, {{3, 4, 5, 6}, {7}}};
    for (double s : gtfp::dea_scores(twins)) EXPECT_NEAR(s, 1.0, 1e-12);
    const std::vector<gtfp::RegionRecord> lone{regions()[5]};
    EXPECT_NEAR(gtfp::gtfp_scores(lone)[0].gtfp, 1.0, 1e-12);
}

TEST(Gtfp, RejectsNonPositive)
{
    const std::vector<Dmu> bad{{{3, 0, 5, 6}, {7}}, {{1, 1, 1, 1}, {1}}};
    EXPECT_THROW(gtfp::dea_scores(bad), InputError);
    auto r = regions();
    r[2].co2_mt = -1.0;
    try {
        gtfp::gtfp_scores(r);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find(r[2].name), std::string::npos);
    }
    const std::vector<Dmu> ragged{{{1, 2}, {1}}, {{1, 2, 3}, {1}}};
    EXPECT_THROW(gtfp::dea_scores(ragged), InputError);
}

TEST(Gtfp, CapitalStock)
{
    EXPECT_NEAR(gtfp::capital_stock_next(100, 10, 0.096), 100.4, 1e-12);
    EXPECT_DOUBLE_EQ(gtfp::capital_stock_next(0, 5, 0.5), 5.0);
    EXPECT_DOUBLE_EQ(gtfp::capital_stock_next(100, 0, 0.0), 100.0);
    EXPECT_THROW(gtfp::capital_stock_next(100, 0, 1.0), InputError);
    EXPECT_THROW(gtfp::capital_stock_next(100, 0, -0.1), InputError);
}

TEST(Gtfp, Extrapolation)
{
    EXPECT_DOUBLE_EQ(gtfp::extrapolate_emission(100, 0.0, 5), 100.0);
    EXPECT_NEAR(gtfp::extrapolate_emission(100, 0.05, 5), 127.63, 5e-3);
    EXPECT_NEAR(gtfp::compound_growth_rate(100, 127.62815625, 5), 0.05, 1e-12);
    EXPECT_THROW(gtfp::extrapolate_emission(0, 0.05, 5), InputError);
}

TEST(Gtfp, RandomizedInvariants)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto units = props::random_dmus(rng);
        EXPECT_EQ(props::score_range(units), "") << "trial " << trial;
        EXPECT_EQ(props::units_invariance(units, rng), "") << "trial " << trial;
        EXPECT_EQ(props::dominance(units, rng), "") << "trial " << trial;
        EXPECT_EQ(props::clone_insensitivity(units, rng), "") << "trial " << trial;
    }
}
