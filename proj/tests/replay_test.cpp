#include "pgca/error.hpp"
#include "pgca/exprio.hpp"
#include "pgca/twolocal.hpp"

#include <gtest/gtest.h>

using namespace pgca;

namespace {

std::int64_t dim(const Report &r, const std::string &key)
{
    auto v = r.find_dimension(key);
    EXPECT_TRUE(v) << key;
    return v.value_or(-1);
}

} // namespace

TEST(ReplayAnnihilatorOfL, Examples)
{
    auto r = replay_annihilator_of_l(3, Window(14, 7));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(dim(r, "annihilator"), 5);
    EXPECT_EQ(dim(replay_annihilator_of_l(0, Window(6, 3)), "annihilator"), 5);
    EXPECT_THROW(replay_annihilator_of_l(5, Window(8, 4)), Error);
}

TEST(ReplayAnnihilatorOfI0J0, ForcesOuterToZero)
{
    auto r = replay_annihilator_of_i0j0(Window(6, 3));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(dim(r, "annihilator"), 1 + 2 * 13);
    EXPECT_EQ(r.find_fact("outer_coefficient"), "forced-zero");
}

TEST(ReplayVanishingOnL, Examples)
{
    for (std::int64_t i : {5, 0, -3}) {
        auto r = replay_vanishing_on_l(i, Window(14, 7));
        EXPECT_TRUE(r.pass);
        EXPECT_EQ(dim(r, "deduced_values"), 0);
    }
}

TEST(ReplayValueFamily, Examples)
{
    const Window w(24, 12);
    auto r = replay_value_family(parse_element("I[2]+J[5]"), std::vector<std::int64_t>{7, 9, 11}, w);
    EXPECT_EQ(dim(r, "family"), 2);
    EXPECT_EQ(dim(r, "admissible_values"), 2);
    EXPECT_EQ(dim(replay_value_family(Element(L(3)), std::nullopt, w), "admissible_values"), 0);
    EXPECT_EQ(dim(replay_value_family(Element(), std::nullopt, w), "admissible_values"), 0);
}

TEST(ReplayValueFamily, SingleProbeIsTooSmall)
{
    try {
        replay_value_family(parse_element("I[2]+J[5]+L[1]"), std::vector<std::int64_t>{7}, Window(24, 12));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ProbeSetTooSmall);
    }
}

TEST(DefaultProbes, SpacedBeyondSupport)
{
    EXPECT_EQ(default_probes(parse_element("I[2]+J[-3]")), (std::vector<std::int64_t>{9, -9, 16}));
    for (auto p : default_probes(parse_element("L[4]")))
        EXPECT_GT(std::llabs(p), 2 * (1 + 4));
}

TEST(ReplayProbeAnnihilator, Examples)
{
    EXPECT_EQ(dim(replay_probe_annihilator(1, Window(10, 5)), "annihilator"), 3);
    EXPECT_EQ(dim(replay_probe_annihilator(-1, Window(10, 5)), "annihilator"), 3);
    EXPECT_EQ(dim(replay_probe_annihilator(2, Window(14, 7)), "annihilator"), 3);
    EXPECT_EQ(dim(replay_probe_annihilator(1, Window(10, 5)), "forced_value"), 0);
    EXPECT_THROW(replay_probe_annihilator(0, Window(10, 5)), std::invalid_argument);
}

TEST(ReplayVanishingEverywhere, CoversEveryCase)
{
    const Window w(12, 6);
    const std::pair<const char *, const char *> fixtures[] = {
        {"2*L[3]+H[1]", "alpha-nonzero"},
        {"2*L[3]+H[1]+I[2]", "alpha-nonzero"},
        {"H[2]+I[1]-J[3]", "beta-off-zero"},
        {"H[0]+I[2]", "beta-at-zero"},
        {"I[1]+J[-1]", "alpha-beta-zero"},
    };
    for (const auto &[text, expected] : fixtures) {
        auto r = replay_vanishing_everywhere(parse_element(text), std::nullopt, w);
        EXPECT_TRUE(r.pass) << text;
        EXPECT_EQ(r.find_fact("case"), expected) << text;
        EXPECT_EQ(dim(r, "admissible_values"), 0);
    }
}
