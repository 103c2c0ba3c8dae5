#include "pairdepth/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "pairdepth/syntax.hpp"

namespace pairdepth {

namespace {

constexpr int kKValues[] = {-1, 0, 1};

struct Universe {
    std::vector<MonomialIdeal> ideals;
    std::vector<Subquotient> modules;
    std::vector<MonomialSequence> sequences;
    std::vector<ExponentVector> monomials;
};

std::vector<std::size_t> shape_dims(LawShape shape, const Universe& u) {
    const std::size_t ni = u.ideals.size();
    const std::size_t nm = u.modules.size();
    switch (shape) {
        case LawShape::IdealModule:
            return {ni, nm};
        case LawShape::Triple:
            return {ni, ni, nm};
        case LawShape::TripleWithIdeal:
        case LawShape::Extension:
            return {ni, ni, nm, ni};
        case LawShape::ModuleSequence:
            return {nm, u.sequences.size(), std::size(kKValues)};
        case LawShape::FullSequence:
            return {};
    }
    return {};
}

LawInput decode(LawShape shape, const Universe& u, std::size_t index, int n) {
    const auto dims = shape_dims(shape, u);
    std::vector<std::size_t> digit(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        digit[i] = index % dims[i];
        index /= dims[i];
    }
    const MonomialIdeal zero = MonomialIdeal::zero(n);
    LawInput in{zero, zero, Subquotient::quotient_ring(zero), std::nullopt, std::nullopt, {}, -1};
    switch (shape) {
        case LawShape::IdealModule:
            in.I = u.ideals[digit[0]];
            in.M = u.modules[digit[1]];
            break;
        case LawShape::Triple:
            in.I = u.ideals[digit[0]];
            in.J = u.ideals[digit[1]];
            in.M = u.modules[digit[2]];
            break;
        case LawShape::TripleWithIdeal:
            in.I = u.ideals[digit[0]];
            in.J = u.ideals[digit[1]];
            in.M = u.modules[digit[2]];
            in.aux = u.ideals[digit[3]];
            break;
        case LawShape::Extension:
            in.I = u.ideals[digit[0]];
            in.J = u.ideals[digit[1]];
            in.M = u.modules[digit[2]];
            in.middle = u.ideals[digit[3]];
            break;
        case LawShape::ModuleSequence:
            in.M = u.modules[digit[0]];
            in.seq = u.sequences[digit[1]];
            in.k = kKValues[digit[2]];
            break;
        case LawShape::FullSequence:
            throw InputError("full-sequence laws are drawn, not decoded");
    }
    return in;
}

// FNV-1a, so draws do not depend on the standard library's string hash.
std::uint64_t law_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : id) h = (h ^ c) * 0x100000001b3ULL;
    return seed ^ h;
}

// (I, J, M, seq ⊆ I, k) draws; sequence elements come from grid monomials in I.
std::vector<LawInput> draw_full_sequences(const CensusSpec& spec, const Universe& u, const std::string& id) {
    std::mt19937_64 rng(law_seed(spec.seed, id));
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < u.ideals.size(); ++i) {
        if (!u.ideals[i].is_zero()) nonzero.push_back(i);
    }
    std::vector<LawInput> out;
    if (nonzero.empty()) return out;
    auto pick = [&rng](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };
    for (std::size_t s = 0; s < spec.sequence_samples; ++s) {
        const MonomialIdeal& I = u.ideals[nonzero[pick(nonzero.size())]];
        std::vector<const ExponentVector*> inside;
        for (const auto& m : u.monomials) {
            if (I.contains(m)) inside.push_back(&m);
        }
        LawInput in{I, u.ideals[pick(u.ideals.size())], u.modules[pick(u.modules.size())], std::nullopt,
                    std::nullopt, {}, kKValues[pick(std::size(kKValues))]};
        const std::size_t len = 1 + pick(static_cast<std::size_t>(spec.max_sequence_length));
        for (std::size_t i = 0; i < len; ++i) in.seq.push_back(*inside[pick(inside.size())]);
        out.push_back(std::move(in));
    }
    return out;
}

struct LocalResult {
    LawTally tally;
    std::vector<CounterexampleArtifact> artifacts;
};

void keep_artifact(std::vector<CounterexampleArtifact>& list, CounterexampleArtifact artifact) {
    list.push_back(std::move(artifact));
    if (list.size() > 4 * kArtifactsPerLaw) {
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.instance < b.instance; });
        list.resize(kArtifactsPerLaw);
    }
}

LocalResult evaluate_many(const LawSpec& law, DepthEngine& engine, const std::string& ring, std::size_t count,
                          const std::function<LawInput(std::size_t)>& input_at,
                          const std::function<std::size_t(std::size_t)>& instance_at) {
    LocalResult total;
    total.tally.law = law.id;
#pragma omp parallel
    {
        LocalResult local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            LawInput in = input_at(idx);
            LawOutcome outcome;
            bool error = false;
            try {
                outcome = evaluate_law(law, engine, in);
            } catch (const std::exception& ex) {
                error = true;
                outcome.law = law.id;
                outcome.applicable = true;
                outcome.holds = false;
                outcome.detail = std::string("error: ") + ex.what();
            }
            ++local.tally.evaluated;
            if (error) {
                ++local.tally.errors;
            } else if (outcome.applicable) {
                ++local.tally.applicable;
                if (!outcome.holds) ++local.tally.failures;
            }
            if (error || (outcome.applicable && !outcome.holds)) {
                keep_artifact(local.artifacts,
                              CounterexampleArtifact{law.id, ring, instance_at(idx), std::move(in), std::move(outcome)});
            }
        }
#pragma omp critical(pairdepth_census_merge)
        {
            total.tally.evaluated += local.tally.evaluated;
            total.tally.applicable += local.tally.applicable;
            total.tally.failures += local.tally.failures;
            total.tally.errors += local.tally.errors;
            for (auto& a : local.artifacts) total.artifacts.push_back(std::move(a));
        }
    }
    std::sort(total.artifacts.begin(), total.artifacts.end(),
              [](const auto& a, const auto& b) { return a.instance < b.instance; });
    if (total.artifacts.size() > kArtifactsPerLaw) total.artifacts.resize(kArtifactsPerLaw);
    return total;
}

std::string format_ideal_opt(const RingContext& ring, const std::optional<MonomialIdeal>& ideal) {
    return ideal ? ring.format_ideal(*ideal) : std::string();
}

}  // namespace

std::size_t CensusReport::failures() const {
    std::size_t total = 0;
    for (const auto& t : tallies) total += t.failures;
    return total;
}

std::size_t CensusReport::errors() const {
    std::size_t total = 0;
    for (const auto& t : tallies) total += t.errors;
    return total;
}

const LawTally& CensusReport::tally(const std::string& law) const {
    for (const auto& t : tallies) {
        if (t.law == law) return t;
    }
    throw InputError("no tally for law '" + law + "'");
}

CensusReport run_census(const CensusSpec& spec, const std::vector<const LawSpec*>& laws, DepthEngine& engine) {
    spec.validate();
    Universe u;
    u.ideals = enumerate_ideals(spec.n, spec.max_exponent, spec.max_generators);
    u.modules = enumerate_modules(u.ideals, spec.include_subquotients, spec.seed);
    u.monomials = grid_monomials(spec.n, spec.max_exponent);
    const bool need_sequences = std::any_of(laws.begin(), laws.end(), [](const LawSpec* l) {
        return l->shape == LawShape::ModuleSequence;
    });
    if (need_sequences) u.sequences = enumerate_sequences(spec.n, spec.max_exponent, spec.max_sequence_length);

    const RingContext ring = RingContext::standard(spec.n, engine.field());
    const std::string ring_text = ring.to_string();
    CensusReport report;
    report.spec = spec;
    report.field = engine.field().to_string();
    report.ideals = u.ideals.size();
    report.modules = u.modules.size();

    for (const LawSpec* law : laws) {
        LocalResult result;
        bool truncated = false;
        if (law->shape == LawShape::FullSequence) {
            const auto inputs = draw_full_sequences(spec, u, law->id);
            result = evaluate_many(*law, engine, ring_text, inputs.size(),
                                   [&](std::size_t i) { return inputs[i]; }, [](std::size_t i) { return i; });
        } else {
            const auto dims = shape_dims(law->shape, u);
            std::size_t space = 1;
            for (auto d : dims) space *= d;
            std::vector<std::size_t> indices;
            if (spec.samples > 0) {
                std::mt19937_64 rng(law_seed(spec.seed, law->id));
                std::uniform_int_distribution<std::size_t> dist(0, space - 1);
                indices.resize(std::min(spec.samples, spec.max_evaluations));
                for (auto& idx : indices) idx = dist(rng);
                truncated = spec.samples > spec.max_evaluations;
            }
            const bool drawn = spec.samples > 0;
            std::size_t count = drawn ? indices.size() : space;
            if (!drawn && count > spec.max_evaluations) {
                count = spec.max_evaluations;
                truncated = true;
            }
            const auto instance = [&](std::size_t i) { return drawn ? indices[i] : i; };
            result = evaluate_many(
                *law, engine, ring_text, count,
                [&](std::size_t i) { return decode(law->shape, u, instance(i), spec.n); }, instance);
        }
        result.tally.truncated = truncated;
        if (truncated) {
            report.complete = false;
            report.notes.push_back(law->id + ": evaluation budget exhausted, run truncated");
        }
        if (result.tally.errors > 0) {
            report.complete = false;
            report.notes.push_back(law->id + ": " + std::to_string(result.tally.errors) + " instances raised errors");
        }
        report.tallies.push_back(result.tally);
        for (auto& a : result.artifacts) report.artifacts.push_back(std::move(a));
    }
    return report;
}

CensusReport cross_path_consistency(const CensusSpec& spec, DepthEngine& engine) {
    return run_census(spec, {&find_law("localization-consistency"), &find_law("grade-routes")}, engine);
}

nlohmann::ordered_json to_json(const CounterexampleArtifact& artifact) {
    const RingContext ring = parse_ring(artifact.ring);
    nlohmann::ordered_json doc;
    doc["law"] = artifact.law;
    doc["ring"] = artifact.ring;
    doc["instance"] = artifact.instance;
    doc["I"] = ring.format_ideal(artifact.input.I);
    doc["J"] = ring.format_ideal(artifact.input.J);
    doc["M"] = ring.format_module(artifact.input.M);
    doc["aux"] = format_ideal_opt(ring, artifact.input.aux);
    doc["middle"] = format_ideal_opt(ring, artifact.input.middle);
    doc["seq"] = artifact.input.seq.empty() ? std::string() : format_sequence(ring, artifact.input.seq);
    doc["k"] = artifact.input.k;
    doc["applicable"] = artifact.outcome.applicable;
    doc["holds"] = artifact.outcome.holds;
    doc["lhs"] = artifact.outcome.lhs;
    doc["rhs"] = artifact.outcome.rhs;
    doc["detail"] = artifact.outcome.detail;
    return doc;
}

CounterexampleArtifact artifact_from_json(const nlohmann::json& doc) {
    try {
        CounterexampleArtifact a;
        a.law = doc.at("law").get<std::string>();
        a.ring = doc.at("ring").get<std::string>();
        a.instance = doc.value("instance", std::size_t{0});
        const RingContext ring = parse_ring(a.ring);
        a.input.I = parse_ideal(ring, doc.at("I").get<std::string>());
        a.input.J = parse_ideal(ring, doc.at("J").get<std::string>());
        a.input.M = parse_module(ring, doc.at("M").get<std::string>());
        const auto aux = doc.value("aux", std::string());
        if (!aux.empty()) a.input.aux = parse_ideal(ring, aux);
        const auto middle = doc.value("middle", std::string());
        if (!middle.empty()) a.input.middle = parse_ideal(ring, middle);
        const auto seq = doc.value("seq", std::string());
        if (!seq.empty()) a.input.seq = parse_sequence(ring, seq);
        a.input.k = doc.value("k", -1);
        a.outcome.law = a.law;
        a.outcome.applicable = doc.value("applicable", true);
        a.outcome.holds = doc.value("holds", false);
        a.outcome.lhs = doc.value("lhs", std::string());
        a.outcome.rhs = doc.value("rhs", std::string());
        a.outcome.detail = doc.value("detail", std::string());
        return a;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed artifact: ") + ex.what());
    }
}

LawOutcome replay_artifact(const CounterexampleArtifact& artifact) {
    DepthEngine engine(parse_ring(artifact.ring).field());
    return evaluate_law(find_law(artifact.law), engine, artifact.input);
}

nlohmann::ordered_json to_json(const CensusSpec& spec) {
    nlohmann::ordered_json doc;
    doc["n"] = spec.n;
    doc["max_exponent"] = spec.max_exponent;
    doc["max_generators"] = spec.max_generators;
    doc["include_subquotients"] = spec.include_subquotients;
    doc["seed"] = spec.seed;
    doc["samples"] = spec.samples;
    doc["sequence_samples"] = spec.sequence_samples;
    return doc;
}

nlohmann::ordered_json to_json(const CensusReport& report) {
    nlohmann::ordered_json doc;
    doc["census"] = to_json(report.spec);
    doc["field"] = report.field;
    doc["ideals"] = report.ideals;
    doc["modules"] = report.modules;
    doc["complete"] = report.complete;
    doc["failures"] = report.failures();
    doc["errors"] = report.errors();
    auto laws = nlohmann::ordered_json::array();
    for (const auto& t : report.tallies) {
        nlohmann::ordered_json row;
        row["law"] = t.law;
        row["evaluated"] = t.evaluated;
        row["applicable"] = t.applicable;
        row["failures"] = t.failures;
        row["errors"] = t.errors;
        row["truncated"] = t.truncated;
        laws.push_back(std::move(row));
    }
    doc["laws"] = std::move(laws);
    doc["notes"] = report.notes;
    auto artifacts = nlohmann::ordered_json::array();
    for (const auto& a : report.artifacts) artifacts.push_back(to_json(a));
    doc["artifacts"] = std::move(artifacts);
    return doc;
}

CensusSpec parse_census_spec(const std::string& text) {
    CensusSpec spec;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("census option '" + item + "' lacks '='");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || value.empty()) throw InputError("census option '" + key + "' needs an integer");
        if (key == "n") {
            spec.n = static_cast<int>(v);
        } else if (key == "exp") {
            spec.max_exponent = static_cast<int>(v);
        } else if (key == "gens") {
            spec.max_generators = static_cast<int>(v);
        } else if (key == "sub") {
            spec.include_subquotients = v != 0;
        } else if (key == "samples") {
            if (v < 0) throw InputError("negative sample count");
            spec.samples = static_cast<std::size_t>(v);
        } else if (key == "seqsamples") {
            if (v < 0) throw InputError("negative sample count");
            spec.sequence_samples = static_cast<std::size_t>(v);
        } else {
            throw InputError("unknown census option '" + key + "'");
        }
        start = comma + 1;
    }
    spec.validate();
    return spec;
}

}  // namespace pairdepth
