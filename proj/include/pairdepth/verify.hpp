#ifndef PAIRDEPTH_VERIFY_HPP
#define PAIRDEPTH_VERIFY_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pairdepth/census.hpp"
#include "pairdepth/laws.hpp"

namespace pairdepth {

/// A failing (or erroring) law instance, self-contained for replay.
struct CounterexampleArtifact {
    std::string law;
    std::string ring;  // e.g. Q[x,y]
    std::size_t instance = 0;
    LawInput input;
    LawOutcome outcome;
};

nlohmann::ordered_json to_json(const CounterexampleArtifact& artifact);
/// Throws InputError on malformed documents.
CounterexampleArtifact artifact_from_json(const nlohmann::json& doc);

/// Re-evaluates the law on the serialized input with a fresh engine.
LawOutcome replay_artifact(const CounterexampleArtifact& artifact);

struct LawTally {
    std::string law;
    std::size_t evaluated = 0;
    std::size_t applicable = 0;
    std::size_t failures = 0;
    std::size_t errors = 0;
    bool truncated = false;
};

struct CensusReport {
    CensusSpec spec;
    std::string field;
    std::size_t ideals = 0;
    std::size_t modules = 0;
    std::vector<LawTally> tallies;
    std::vector<CounterexampleArtifact> artifacts;
    bool complete = true;
    std::vector<std::string> notes;

    std::size_t failures() const;
    std::size_t errors() const;
    const LawTally& tally(const std::string& law) const;
};

/// At most this many artifacts are kept per law (lowest instance indices).
inline constexpr std::size_t kArtifactsPerLaw = 25;

/// Evaluates each law over the census (exhaustively, or `spec.samples` seeded
/// draws). Parallel over instances; tallies and artifacts are reduced in
/// instance order, so the report depends only on the census parameters and seed.
CensusReport run_census(const CensusSpec& spec, const std::vector<const LawSpec*>& laws, DepthEngine& engine);

/// The two cross-checks between independent computation paths:
/// pair_depth vs pair_depth_localized, and Koszul vs Ext grade.
CensusReport cross_path_consistency(const CensusSpec& spec, DepthEngine& engine);

nlohmann::ordered_json to_json(const CensusSpec& spec);
nlohmann::ordered_json to_json(const CensusReport& report);

/// Parses "n=2,exp=2[,gens=4][,sub=1][,samples=500]" into a spec.
CensusSpec parse_census_spec(const std::string& text);

}  // namespace pairdepth

#endif  // PAIRDEPTH_VERIFY_HPP
