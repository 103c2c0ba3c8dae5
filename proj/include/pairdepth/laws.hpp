#ifndef PAIRDEPTH_LAWS_HPP
#define PAIRDEPTH_LAWS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairdepth/engine.hpp"
#include "pairdepth/sequences.hpp"

namespace pairdepth {

/// What a law consumes besides the module. Drives census iteration.
enum class LawShape {
    IdealModule,      // (I, M)
    Triple,           // (I, J, M)
    TripleWithIdeal,  // (I, J, M, aux)
    Extension,        // (I, J, M = A/B, middle) with B ⊆ middle ⊆ A
    ModuleSequence,   // (M, seq, k)
    FullSequence,     // (I, J, M, seq, k)
};

struct LawInput {
    MonomialIdeal I;
    MonomialIdeal J;
    Subquotient M;
    std::optional<MonomialIdeal> aux;
    std::optional<MonomialIdeal> middle;
    MonomialSequence seq;
    int k = -1;
};

struct LawOutcome {
    std::string law;
    bool applicable = false;
    bool holds = true;
    std::string lhs;
    std::string rhs;
    std::string detail;
};

using LawFn = std::function<LawOutcome(DepthEngine&, const LawInput&)>;

struct LawSpec {
    std::string id;
    std::string summary;
    LawShape shape;
    LawFn check;
};

/// All laws, in a fixed order.
const std::vector<LawSpec>& law_catalog();
/// Throws InputError for an unknown id.
const LawSpec& find_law(std::string_view id);
/// "all" or a comma-separated id list.
std::vector<const LawSpec*> select_laws(std::string_view selector);

LawOutcome evaluate_law(const LawSpec& law, DepthEngine& engine, const LawInput& input);

/// Runs the depth-level laws on one triple with auxiliary ideals b and c
/// (b doubles as the W̃ ideal a) and an optional middle relation ideal.
std::vector<LawOutcome> depth_law_suite(DepthEngine& engine, const PairContext& ctx, const MonomialIdeal& b,
                                        const MonomialIdeal& c,
                                        const std::optional<MonomialIdeal>& middle = std::nullopt);

}  // namespace pairdepth

#endif  // PAIRDEPTH_LAWS_HPP
