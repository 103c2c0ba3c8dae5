#include "pairdepth/execute.hpp"

#include <algorithm>
#include <sstream>

#include "pairdepth/decomp.hpp"
#include "pairdepth/engine.hpp"
#include "pairdepth/syntax.hpp"
#include "pairdepth/verify.hpp"

namespace pairdepth {

namespace {

using Json = nlohmann::ordered_json;

Json depth_value(const ExtendedDepth& d) { return d.is_infinite() ? Json("inf") : Json(d.value()); }

Json prime_json(const RingContext& ring, const MonomialPrime& p) { return ring.var_list(p.vars()); }

Json primes_json(const RingContext& ring, const std::vector<MonomialPrime>& primes) {
    Json out = Json::array();
    for (const auto& p : primes) out.push_back(prime_json(ring, p));
    return out;
}

Json degree_json(const std::optional<ExponentVector>& degree) { return degree ? Json(*degree) : Json(nullptr); }

Json grade_json(const GradeResult& g) {
    Json out;
    out["value"] = depth_value(g.value);
    out["witness_degree"] = degree_json(g.witness_degree);
    if (!g.warning.empty()) out["warning"] = g.warning;
    return out;
}

Json depth_json(const RingContext& ring, const DepthReport& r) {
    Json out;
    out["depth"] = depth_value(r.depth);
    out["witness_prime"] = r.witness_prime ? prime_json(ring, *r.witness_prime) : Json(nullptr);
    out["dim_mod_JM"] = r.dim_mod_JM;
    out["is_cm"] = r.is_cm;
    out["w_minimal"] = primes_json(ring, r.w.minimal_primes);
    return out;
}

Json regseq_json(const Request& req, DepthEngine& engine) {
    const RingContext& ring = req.ring;
    const Subquotient& M = req.require_module();
    Json out;
    if (req.integers.count("construct")) {
        const auto g = greedy_regular_sequence(req.ideal("a"), M, req.integers.at("construct"), engine);
        out["mode"] = "construct";
        out["success"] = g.success;
        out["sequence"] = format_sequence(ring, g.sequence);
        out["cover"] = primes_json(ring, g.cover);
        if (!g.success) {
            out["failed_step"] = g.failed_step;
            out["reason"] = g.reason;
        }
        return out;
    }
    const int k = req.integer_or("k", -1);
    const auto poor = is_poor_k_regular(*req.seq, M, k, engine);
    const auto full = is_k_regular(*req.seq, M, k, engine);
    out["mode"] = "check";
    out["k"] = k;
    out["poor_k_regular"] = poor.verdict;
    out["k_regular"] = full.verdict;
    out["failing_index"] = poor.failing_index ? Json(*poor.failing_index) : Json(nullptr);
    out["blocking_prime"] = poor.blocking_prime ? prime_json(ring, *poor.blocking_prime) : Json(nullptr);
    out["quotient_dim"] = full.quotient_dim ? Json(*full.quotient_dim) : Json(nullptr);
    return out;
}

std::string verify_text(const Json& doc) {
    std::ostringstream os;
    std::size_t width = 4;
    for (const auto& row : doc["laws"]) width = std::max(width, row["law"].get<std::string>().size());
    os << "census      n=" << doc["census"]["n"] << " exp=" << doc["census"]["max_exponent"]
       << " seed=" << doc["census"]["seed"] << " ideals=" << doc["ideals"] << " modules=" << doc["modules"] << "\n";
    for (const auto& row : doc["laws"]) {
        const std::string law = row["law"].get<std::string>();
        os << law << std::string(width - law.size() + 2, ' ') << "evaluated=" << row["evaluated"]
           << " applicable=" << row["applicable"] << " failures=" << row["failures"] << " errors=" << row["errors"]
           << "\n";
    }
    os << "failures    " << doc["failures"] << "\n";
    os << "complete    " << (doc["complete"].get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

Json run(const Request& req, const ExecuteOptions& opts, int& exit_code) {
    const RingContext& ring = req.ring;
    DepthEngine engine(ring.field());
    Json out;
    auto ctx = [&] { return PairContext{req.ideal("I"), req.ideal("J"), req.require_module()}; };
    switch (req.command) {
        case Command::Depth:
        case Command::Wset: {
            const auto r = pair_depth(ctx(), ring.field());
            if (req.command == Command::Depth) {
                out = depth_json(ring, r);
            } else {
                out["w_minimal"] = primes_json(ring, r.w.minimal_primes);
                out["w_members"] = primes_json(ring, r.w.all_member_primes);
            }
            break;
        }
        case Command::Cm: {
            const auto r = is_pair_cm(ctx(), ring.field());
            out["depth"] = depth_value(r.depth);
            out["dim_mod_JM"] = r.dim_mod_JM;
            out["is_cm"] = r.is_cm;
            if (!r.diagnostic.empty() && !r.is_cm) out["diagnostic"] = r.diagnostic;
            break;
        }
        case Command::Depthp:
            out["depth_localized"] = depth_value(pair_depth_localized(ctx(), ring.field()));
            break;
        case Command::Torsion: {
            const auto c = ctx();
            const auto r = pair_depth(c, ring.field());
            out["is_ij_torsion"] = is_ij_torsion(c);
            out["is_cm"] = r.is_cm;
            out["dim_mod_JM"] = r.dim_mod_JM;
            out["artinian"] = artinian_conclusion(c);
            break;
        }
        case Command::Grade:
            out = grade_json(grade(req.ideal("a"), req.require_module(), ring.field()));
            break;
        case Command::Ext: {
            const auto& a = req.ideal("a");
            const auto& M = req.require_module();
            if (req.integers.count("i")) {
                const int i = req.integers.at("i");
                out["index"] = i;
                out["nonzero"] = ext_nonvanishing(a, M, i, ring.field());
            } else {
                const auto profile = ext_profile(a, M, ring.field());
                out["nonzero_positions"] = profile.positions();
                out["value"] = profile.first() ? Json(*profile.first()) : Json("inf");
            }
            break;
        }
        case Command::Ass:
            out["ass"] = primes_json(ring, associated_primes(req.require_module()));
            break;
        case Command::Dim:
            out["dim"] = dim_module(req.require_module());
            break;
        case Command::Decomp: {
            const auto& a = req.ideal("a");
            Json comps = Json::array();
            for (const auto& c : irreducible_decomposition(a)) comps.push_back(ring.format_ideal(c.ideal()));
            out["components"] = comps;
            out["minimal_primes"] = primes_json(ring, minimal_primes(a));
            out["height"] = height(a);
            break;
        }
        case Command::Regseq:
            out = regseq_json(req, engine);
            break;
        case Command::Verify: {
            CensusSpec spec = parse_census_spec(req.options.count("census") ? req.options.at("census") : "n=2,exp=2");
            if (opts.seed) spec.seed = *opts.seed;
            const auto laws = select_laws(req.options.count("laws") ? req.options.at("laws") : "all");
            if (spec.n != ring.nvars()) throw InputError("census n must match the number of ring variables");
            const auto report = run_census(spec, laws, engine);
            out = to_json(report);
            if (report.failures() > 0) exit_code = kExitVerification;
            break;
        }
    }
    return out;
}

}  // namespace

Output execute(const Request& request, const ExecuteOptions& options) {
    Request req = request;
    if (options.field_override) req.ring.set_field(*options.field_override);
    Output out;
    try {
        out.json = run(req, options, out.exit_code);
    } catch (const ParseError& e) {
        out.exit_code = kExitParse;
        out.json = Json{{"command", to_string(req.command)}, {"error", e.what()}};
    } catch (const InputError& e) {
        out.exit_code = kExitParse;
        out.json = Json{{"command", to_string(req.command)}, {"error", e.what()}};
    } catch (const DomainError& e) {
        out.exit_code = kExitDomain;
        out.json = Json{{"command", to_string(req.command)}, {"error", e.what()}};
    }
    out.text = req.command == Command::Verify && !out.json.contains("error") ? verify_text(out.json)
                                                                              : render_text(out.json);
    return out;
}

Output execute_line(const std::string& line, const ExecuteOptions& options) {
    try {
        return execute(parse_request(line), options);
    } catch (const ParseError& e) {
        Output out;
        out.exit_code = kExitParse;
        out.json = Json{{"error", e.what()}, {"position", e.position()}};
        out.text = render_text(out.json);
        return out;
    }
}

std::string render_text(const nlohmann::ordered_json& doc) {
    std::size_t width = 0;
    for (const auto& [key, value] : doc.items()) width = std::max(width, key.size());
    std::ostringstream os;
    for (const auto& [key, value] : doc.items()) {
        os << key << std::string(width - key.size() + 2, ' ');
        os << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return os.str();
}

}  // namespace pairdepth
