#include "pgca/error.hpp"
#include "pgca/exprio.hpp"
#include "pgca/fuzz.hpp"
#include "pgca/twolocal.hpp"

#include <gtest/gtest.h>

using namespace pgca;

namespace {

const GaussianRational i = GaussianRational::imaginary_unit();

struct Positioned {
    ErrorCode code;
    std::size_t offset;
};

Positioned parse_failure(const std::string &text)
{
    try {
        parse_element(text);
    } catch (const ParseError &e) {
        return {e.code(), e.offset()};
    }
    ADD_FAILURE() << "parsed: " << text;
    return {ErrorCode::SchemaError, 0};
}

std::string schema_path(const std::string &doc)
{
    try {
        load_instance_text(doc);
    } catch (const SchemaError &e) {
        return e.path();
    }
    ADD_FAILURE() << "accepted: " << doc;
    return {};
}

} // namespace

TEST(Parse, Examples)
{
    Element x = parse_element("2*L[3] + (1+1i)*I[-2] - J[0]");
    EXPECT_EQ(x, Element::from_terms({{2, L(3)}, {GaussianRational(1, 1), I(-2)}, {-1, J(0)}}));
    EXPECT_TRUE(parse_element("L[1] - L[1]").is_zero());
    EXPECT_EQ(parse_element("i*Hb[0]"), Element(i, H(0, Basis::Bold)));
    EXPECT_EQ(parse_element("  -3/4 * J[ -2 ]"), Element(GaussianRational(Rational(-3, 4)), J(-2)));
    EXPECT_EQ(parse_element("(0-2/3i)*L[0]"), Element(GaussianRational(0, Rational(-2, 3)), L(0)));
    EXPECT_TRUE(parse_element("0").is_zero());
    EXPECT_EQ(parse_element("Lb[1] - Lb[1]").basis(), Basis::Bold);
}

TEST(Parse, PositionedErrors)
{
    auto mix = parse_failure("Ib[2] + L[0]");
    EXPECT_EQ(mix.code, ErrorCode::BasisMixError);
    EXPECT_EQ(mix.offset, 8u);

    auto unclosed = parse_failure("2*L[3");
    EXPECT_EQ(unclosed.code, ErrorCode::ParseError);
    EXPECT_EQ(unclosed.offset, 5u);

    auto family = parse_failure("L[1] + 3*Q[2]");
    EXPECT_EQ(family.code, ErrorCode::ParseError);
    EXPECT_EQ(family.offset, 9u);

    EXPECT_EQ(parse_failure("1/0*L[1]").offset, 2u);
    EXPECT_EQ(parse_failure("2").offset, 1u);
    EXPECT_EQ(parse_failure("L[1] L[2]").offset, 5u);
    EXPECT_EQ(parse_failure("").offset, 0u);
}

TEST(Parse, ExpectedTokens)
{
    try {
        parse_element("L[1] + 3*Q[2]");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.expected(), (std::vector<std::string>{"'L'", "'H'", "'I'", "'J'"}));
    }
}

TEST(Print, Examples)
{
    EXPECT_EQ(print_element(Element()), "0");
    EXPECT_EQ(print_element(Element::from_terms({{-1, J(0)}, {2, L(3)}})), "2*L[3] - J[0]");
    EXPECT_EQ(print_element(Element(i, H(0))), "(0+1i)*H[0]");
    EXPECT_EQ(print_element(-Element(L(2, Basis::Bold))), "-Lb[2]");
    EXPECT_EQ(print_derivation(ad(Element(H(0)))), "ad(H[0])");
    EXPECT_EQ(print_derivation(outer_derivation()), "D");
    EXPECT_EQ(print_derivation(Derivation{}), "0");
    EXPECT_EQ(print_derivation(ad(Element(L(1))) + outer_derivation(GaussianRational(Rational(1, 2)))),
              "ad(L[1]) + 1/2*D");
}

TEST(Print, ParseRoundTripOnRandomElements)
{
    Sampler s(2024);
    for (int k = 0; k < 2000; ++k) {
        Element x = s.element(s.coin() ? Basis::Bold : Basis::Plain, 9, 6);
        const std::string text = print_element(x);
        ASSERT_EQ(parse_element(text), x) << text;
        ASSERT_EQ(print_element(parse_element(text)), text);
    }
}

TEST(Scalars, ParseAndPrint)
{
    EXPECT_EQ(parse_scalar("i"), i);
    EXPECT_EQ(parse_scalar("(1/2-3i)"), GaussianRational(Rational(1, 2), -3));
    EXPECT_EQ(print_scalar(GaussianRational(Rational(-5, 3))), "-5/3");
    EXPECT_THROW(parse_scalar("1/0"), ParseError);
}

TEST(InstanceDoc, MinimalAnchorsAccepted)
{
    auto inst = load_instance_text(R"({"window": 12, "interior": 6, "table": [
        {"point": "L[0]", "value": "0"},
        {"point": "L[1]", "value": "0"},
        {"point": "I[0]+J[0]", "value": "0"}]})");
    EXPECT_EQ(inst.window(), Window(12, 6));
    EXPECT_EQ(inst.table().size(), 3u);
    EXPECT_TRUE(extract_derivation(inst).is_zero());
}

TEST(InstanceDoc, OptionalInteriorAndStringIntegers)
{
    auto inst = load_instance_text(R"({"window": "10", "table": []})");
    EXPECT_EQ(inst.window(), Window(10, 5));
}

TEST(InstanceDoc, SchemaErrors)
{
    EXPECT_EQ(schema_path(R"({"table": []})"), "/window");
    EXPECT_EQ(schema_path(R"({"window": 12, "table": [{"point": "L[0]", "value": "0"},
                                                      {"point": "L[0]", "value": "0"}]})"),
              "/table/1/point");
    EXPECT_EQ(schema_path(R"({"window": 12, "table": [{"point": "L[0]"}]})"), "/table/0/value");
    EXPECT_EQ(schema_path(R"({"window": 12.5, "table": []})"), "/window");
    EXPECT_EQ(schema_path(R"({"window": 12, "table": [], "extra": 1})"), "/extra");
    EXPECT_EQ(schema_path(R"({"window": 12, "table": [{"point": "L[", "value": "0"}]})"), "/table/0/point");
    EXPECT_THROW(load_instance_text("{not json"), Error);
}

TEST(InstanceDoc, SaveLoadRoundTrip)
{
    Derivation d = ad(L(1) + 2 * I(-1)) + outer_derivation(GaussianRational(1, 1));
    auto inst = TwoLocalInstance::induced_by(d, {Element(L(0)), Element(L(1)), I(0) + J(0), H(2) - J(3)}, Window(12, 6));
    Json doc = save_instance(inst);
    EXPECT_EQ(load_instance(doc), inst);
    EXPECT_EQ(load_instance_text(doc.dump()), inst);
}

TEST(ReportDoc, RoundTripAndShape)
{
    Report r;
    r.name = "demo";
    r.pass = false;
    r.param("window", "12").dimension("annihilator", 5).basis("values", {"I[1]", "J[2]"}).fact("case", "x");
    r.fail(Error(ErrorCode::NotInSpan, "residual leaves span", "H[3]"));
    Json doc = save_report(r);
    EXPECT_EQ(doc["report"], "demo");
    EXPECT_EQ(doc["error"]["code"], "NotInSpan");
    EXPECT_EQ(doc["dimensions"]["annihilator"], 5);
    EXPECT_EQ(load_report(doc), r);

    Report ok;
    ok.name = "fine";
    ok.pass = true;
    EXPECT_TRUE(save_report(ok)["error"].is_null());
    EXPECT_EQ(load_report(save_report(ok)), ok);
}
