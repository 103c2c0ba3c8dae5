#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "pairdepth/census.hpp"
#include "pairdepth/engine.hpp"
#include "pairdepth/laws.hpp"
#include "pairdepth/verify.hpp"

using namespace pairdepth;

namespace {

const RingContext R2 = RingContext::standard(2);
const Field QQ = Field::rationals();

MonomialIdeal I2(const std::string& s) { return oracle::ideal(R2, s); }
Subquotient M2(const std::string& s) { return oracle::module(R2, s); }

CensusReport census(const std::string& laws, const std::string& spec_text = "n=2,exp=2") {
    DepthEngine engine(QQ);
    return run_census(parse_census_spec(spec_text), select_laws(laws), engine);
}

}  // namespace

TEST_CASE("law catalog", "[verify]") {
    const auto& laws = law_catalog();
    CHECK(laws.size() == 26);
    std::set<std::string> ids;
    for (const auto& law : laws) {
        CHECK_FALSE(law.summary.empty());
        ids.insert(law.id);
    }
    CHECK(ids.size() == laws.size());
    CHECK(select_laws("all").size() == laws.size());
    CHECK(select_laws("radical-j,zero-j-reduction").size() == 2);
    CHECK_THROWS_AS(find_law("no-such-law"), InputError);
}

TEST_CASE("census spec parsing", "[verify]") {
    const auto spec = parse_census_spec("n=3,exp=1,gens=3,sub=1,samples=50,seqsamples=10");
    CHECK(spec.n == 3);
    CHECK(spec.max_exponent == 1);
    CHECK(spec.max_generators == 3);
    CHECK(spec.include_subquotients);
    CHECK(spec.samples == 50);
    CHECK(spec.sequence_samples == 10);
    CHECK_THROWS_AS(parse_census_spec("n=two"), InputError);
    CHECK_THROWS_AS(parse_census_spec("depth=3"), InputError);
    CHECK_THROWS_AS(parse_census_spec("n"), InputError);
    CHECK_THROWS_AS(parse_census_spec("n=40"), InputError);
}

TEST_CASE("zero-J reduction holds on the full census", "[verify]") {
    const auto report = census("zero-j-reduction");
    CHECK(report.ideals == 20);
    CHECK(report.tally("zero-j-reduction").evaluated == 400);
    CHECK(report.failures() == 0);
    CHECK(report.complete);
}

TEST_CASE("radical of J holds on the full census", "[verify]") {
    const auto report = census("radical-j");
    CHECK(report.tally("radical-j").applicable > 0);
    CHECK(report.failures() == 0);
}

TEST_CASE("cross-path consistency on the full census", "[verify]") {
    DepthEngine engine(QQ);
    const auto report = cross_path_consistency(parse_census_spec("n=2,exp=2,sub=1"), engine);
    CHECK(report.failures() == 0);
    CHECK(report.errors() == 0);
    CHECK(report.tally("localization-consistency").evaluated > 0);
}

TEST_CASE("depth law suite on the worked example", "[verify]") {
    DepthEngine engine(QQ);
    const PairContext ctx{I2("(x, y)"), I2("(x)"), M2("(1)/(0)")};
    CHECK(engine.depth(ctx.I, ctx.J, ctx.M) == ExtendedDepth(1));
    CHECK(engine.is_cm(ctx.I, ctx.J, ctx.M));
    const auto outcomes = depth_law_suite(engine, ctx, I2("(x, y)"), I2("(x^2)"));
    CHECK_FALSE(outcomes.empty());
    for (const auto& o : outcomes) {
        INFO(o.law << ": " << o.lhs << " vs " << o.rhs);
        CHECK(o.holds);
    }
}

TEST_CASE("chain inequality on the worked example", "[verify]") {
    DepthEngine engine(QQ);
    LawInput in{I2("(x, y)"), I2("(x)"), M2("(1)/(0)"), I2("(x, y)"), std::nullopt, {}, -1};
    const auto o = evaluate_law(find_law("chain-inequality"), engine, in);
    CHECK(o.applicable);
    CHECK(o.holds);
    CHECK(engine.depth(in.I, in.J, in.M) <= engine.depth(*in.aux, in.J, in.M));
    CHECK(engine.depth(*in.aux, in.J, in.M) <= engine.grade(*in.aux, in.M).value);
    CHECK(engine.grade(*in.aux, in.M).value == ExtendedDepth(2));
}

TEST_CASE("short exact sequence bounds on (x)/(x^2,xy)", "[verify]") {
    DepthEngine engine(QQ);
    LawInput in{I2("(x, y)"), I2("(0)"), M2("(1)/(x^2, x*y)"), std::nullopt, I2("(x)"), {}, -1};
    const auto o = evaluate_law(find_law("ses-bounds"), engine, in);
    CHECK(o.applicable);
    CHECK(o.holds);
}

TEST_CASE("census reports are deterministic", "[verify]") {
    const auto a = to_json(census("all", "n=2,exp=1,sub=1,seqsamples=300")).dump();
    const auto b = to_json(census("all", "n=2,exp=1,sub=1,seqsamples=300")).dump();
    CHECK(a == b);
    const auto s1 = to_json(census("chain-inequality", "n=3,exp=1,samples=200")).dump();
    const auto s2 = to_json(census("chain-inequality", "n=3,exp=1,samples=200")).dump();
    CHECK(s1 == s2);
}

TEST_CASE("failures serialize and replay", "[verify]") {
    const auto report = census("dimension-bound");
    REQUIRE_FALSE(report.artifacts.empty());
    CHECK(report.artifacts.size() <= kArtifactsPerLaw);
    CHECK(std::is_sorted(report.artifacts.begin(), report.artifacts.end(),
                         [](const auto& x, const auto& y) { return x.instance < y.instance; }));
    for (const auto& artifact : report.artifacts) {
        const auto doc = nlohmann::json::parse(to_json(artifact).dump());
        const auto back = artifact_from_json(doc);
        CHECK(back.law == artifact.law);
        CHECK(back.input.I == artifact.input.I);
        CHECK(back.input.J == artifact.input.J);
        CHECK(back.input.M == artifact.input.M);
        const auto replay = replay_artifact(back);
        CHECK(replay.applicable);
        CHECK_FALSE(replay.holds);
        CHECK(replay.lhs == artifact.outcome.lhs);
        CHECK(replay.rhs == artifact.outcome.rhs);
    }
    CHECK_THROWS_AS(artifact_from_json(nlohmann::json::parse(R"({"law":"radical-j"})")), InputError);
}

TEST_CASE("evaluation budget truncates and flags the run", "[verify]") {
    DepthEngine engine(QQ);
    auto spec = parse_census_spec("n=2,exp=2");
    spec.max_evaluations = 50;
    const auto report = run_census(spec, select_laws("chain-inequality"), engine);
    CHECK_FALSE(report.complete);
    CHECK(report.tally("chain-inequality").truncated);
    CHECK(report.tally("chain-inequality").evaluated == 50);
}
