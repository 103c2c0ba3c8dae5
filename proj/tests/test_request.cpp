#include <catch_amalgamated.hpp>

#include <random>

#include "pairdepth/census.hpp"
#include "pairdepth/execute.hpp"
#include "pairdepth/request.hpp"
#include "pairdepth/syntax.hpp"

using namespace pairdepth;

namespace {

std::size_t error_position(const std::string& line) {
    try {
        parse_request(line);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a ParseError for " << line);
    return 0;
}

std::string json_of(const std::string& line) { return execute_line(line).json.dump(); }

}  // namespace

TEST_CASE("requests parse", "[request]") {
    const auto r = parse_request("Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)");
    CHECK(r.command == Command::Depth);
    CHECK(r.ring.nvars() == 2);
    CHECK(r.ideal("I").size() == 2);
    CHECK(r.require_module().denominator().is_zero());
    const auto cm = parse_request("Q[x,y]; cm I=(x^2) J=(x) M=(1)/(0)");
    CHECK(cm.command == Command::Cm);
    const auto g = parse_request("F2[x,y,z]; grade a=(x,y,z) M=(1)/(x*y)");
    CHECK(g.ring.field().characteristic() == 2);
    CHECK(g.ideal("a").size() == 3);
    const auto s = parse_request("Q[x,y]; regseq M=(1)/(x*y) seq=[x, y] k=1");
    CHECK(s.seq->size() == 2);
    CHECK(s.integers.at("k") == 1);
    const auto v = parse_request("Q[x,y]; verify census=n=2,exp=2 laws=all");
    CHECK(v.options.at("census") == "n=2,exp=2");
}

TEST_CASE("parse errors carry positions", "[request]") {
    CHECK(error_position("Q[x,y]; depth I=(x,z) J=(x) M=(1)/(0)") == 19);
    CHECK(error_position("Q[x,y]; depth I=(x^) J=(x) M=(1)/(0)") == 19);
    CHECK(error_position("Q[x,y]; depth I=(x) J=(x) M=(x)/(y)") == 31);
    CHECK(error_position("Q[x,y]; frobnicate I=(x)") == 8);
    CHECK(error_position("Q[x,y] depth") == 12);
    CHECK(error_position("Q[x,y]; depth I=(x) J=(x)") == 25);
    CHECK(error_position("Q[x,y]; depth I=(x) I=(y) J=(x) M=(1)/(0)") == 20);
    CHECK(error_position("Q[x,y]; grade a=(x) M=(1)/(0) q=3") == 30);
    CHECK(error_position("Q[x,y]; ext a=(x) M=(1)/(0) i=two") == 30);
    CHECK(error_position("Q[x,y]; regseq M=(1)/(0) k=1") == 28);
}

TEST_CASE("print round-trips generated requests", "[request][property]") {
    const auto ring = RingContext::standard(2);
    const auto ideals = enumerate_ideals(2, 2, 3);
    const auto modules = enumerate_modules(ideals, true);
    std::mt19937_64 rng(11);
    auto pick_ideal = [&] { return ideals[rng() % ideals.size()]; };
    for (int trial = 0; trial < 300; ++trial) {
        Request r;
        r.ring = ring;
        switch (trial % 5) {
            case 0:
                r.command = Command::Depth;
                r.ideals = {{"I", pick_ideal()}, {"J", pick_ideal()}};
                break;
            case 1:
                r.command = Command::Grade;
                r.ideals = {{"a", pick_ideal()}};
                break;
            case 2:
                r.command = Command::Ext;
                r.ideals = {{"a", pick_ideal()}};
                r.integers = {{"i", static_cast<int>(rng() % 3)}};
                break;
            case 3:
                r.command = Command::Regseq;
                r.seq = MonomialSequence{{1, 0}, {0, static_cast<int>(rng() % 3)}};
                r.integers = {{"k", static_cast<int>(rng() % 3) - 1}};
                break;
            default:
                r.command = Command::Torsion;
                r.ideals = {{"I", pick_ideal()}, {"J", pick_ideal()}};
                break;
        }
        r.module = modules[rng() % modules.size()];
        const auto text = print(r);
        INFO(text);
        CHECK(parse_request(text) == r);
        CHECK(print(parse_request(text)) == text);
    }
    const auto f = parse_request("F7[x,y]; verify census=n=2,exp=1 laws=radical-j");
    CHECK(parse_request(print(f)) == f);
}

TEST_CASE("depth and cm outputs", "[request]") {
    CHECK(json_of("Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)") ==
          R"({"depth":1,"witness_prime":["y"],"dim_mod_JM":1,"is_cm":true,"w_minimal":[["y"]]})");
    CHECK(json_of("Q[x,y]; cm I=(x^2) J=(x) M=(1)/(0)") == R"({"depth":0,"dim_mod_JM":1,"is_cm":false})");
    CHECK(json_of("Q[x,y]; torsion I=(x^2) J=(x) M=(1)/(0)") ==
          R"({"is_ij_torsion":true,"is_cm":false,"dim_mod_JM":1,"artinian":false})");
    CHECK(json_of("Q[x,y]; depthp I=(x,y) J=(x) M=(1)/(0)") == R"({"depth_localized":1})");
    CHECK(json_of("Q[x,y]; depth I=(x) J=(y) M=(1)/(1)") ==
          R"({"depth":"inf","witness_prime":null,"dim_mod_JM":-1,"is_cm":true,"w_minimal":[["x"]]})");
}

TEST_CASE("module and ideal outputs", "[request]") {
    CHECK(json_of("Q[x,y]; grade a=(x,y) M=(1)/(x*y)").find(R"("value":1)") != std::string::npos);
    CHECK(json_of("Q[x,y]; ext a=(x) M=(1)/(0) i=1") == R"({"index":1,"nonzero":true})");
    CHECK(json_of("Q[x,y]; ext a=(x,y) M=(1)/(0)").find(R"("nonzero_positions":[2],"value":2)") != std::string::npos);
    CHECK(json_of("Q[x,y]; ass M=(1)/(x^2,x*y)") == R"({"ass":[["x"],["x","y"]]})");
    CHECK(json_of("Q[x,y]; dim M=(1)/(x*y)") == R"({"dim":1})");
    CHECK(json_of("Q[x,y]; decomp a=(x^2,x*y)") ==
          R"j({"components":["(x)","(x^2, y)"],"minimal_primes":[["x"]],"height":1})j");
    CHECK(json_of("Q[x,y]; wset I=(x,y) J=(x) M=(1)/(0)") == R"({"w_minimal":[["y"]],"w_members":[["x","y"],["y"]]})");
}

TEST_CASE("regseq outputs", "[request]") {
    CHECK(json_of("Q[x,y]; regseq M=(1)/(x*y) seq=[x] k=0") ==
          R"({"mode":"check","k":0,"poor_k_regular":false,"k_regular":false,"failing_index":0,)"
          R"("blocking_prime":["x"],"quotient_dim":1})");
    CHECK(json_of("Q[x,y]; regseq M=(1)/(0) a=(x,y) construct=2") ==
          R"({"mode":"construct","success":true,"sequence":"[x, y]","cover":[]})");
    const auto fail = json_of("Q[x,y]; regseq M=(1)/(x*y) a=(x,y) construct=1");
    CHECK(fail.find(R"("success":false)") != std::string::npos);
    CHECK(fail.find(R"("cover":[["x"],["y"]])") != std::string::npos);
}

TEST_CASE("exit codes", "[request]") {
    CHECK(execute_line("Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)").exit_code == kExitOk);
    CHECK(execute_line("Q[x,y]; decomp a=(0)").exit_code == kExitDomain);
    CHECK(execute_line("Q[x,y]; depth I=(x,z) J=(x) M=(1)/(0)").exit_code == kExitParse);
    const auto bad = execute_line("Q[x,y]; depth I=(x,z) J=(x) M=(1)/(0)");
    CHECK(bad.json.at("position") == 19);
    CHECK(execute_line("Q[x,y]; verify census=n=2,exp=2 laws=dimension-bound").exit_code == kExitVerification);
    CHECK(execute_line("Q[x,y]; verify census=n=2,exp=2 laws=radical-j").exit_code == kExitOk);
    CHECK(execute_line("Q[x,y,z]; verify census=n=2,exp=2 laws=radical-j").exit_code == kExitParse);
}

TEST_CASE("field override and determinism", "[request]") {
    ExecuteOptions opts;
    opts.field_override = Field::prime(3);
    const auto out = execute_line("Q[x,y]; grade a=(x,y) M=(1)/(x*y)", opts);
    CHECK(out.exit_code == kExitOk);
    const std::string line = "Q[x,y]; verify census=n=2,exp=1,sub=1 laws=all";
    CHECK(json_of(line) == json_of(line));
}

TEST_CASE("plain rendering aligns keys", "[request]") {
    const auto out = execute_line("Q[x,y]; cm I=(x^2) J=(x) M=(1)/(0)");
    CHECK(out.text == "depth       0\ndim_mod_JM  1\nis_cm       false\n");
}
