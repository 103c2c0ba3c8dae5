// pairdepth: batch front end for the request language.
//
//   pairdepth [--json] [--field F7] [--threads N] [--out FILE] [-e REQUEST]... [FILE]
//   pairdepth verify --census n=2,exp=2 --laws all --seed 42 --out report.json
//
// Without -e or FILE, requests are read from stdin, one per line; blank lines
// and lines starting with '#' are skipped.

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pairdepth/execute.hpp"
#include "pairdepth/syntax.hpp"
#include "pairdepth/verify.hpp"

namespace {

using pairdepth::ExecuteOptions;
using pairdepth::Output;

pairdepth::Field parse_field(const std::string& tag) {
    return pairdepth::parse_ring(tag + "[x]").field();
}

bool skip_line(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

int emit(const std::vector<Output>& outputs, bool json, const std::string& out_path) {
    std::ostringstream os;
    int code = 0;
    for (const auto& o : outputs) {
        if (json) {
            os << o.json.dump() << "\n";
        } else {
            if (&o != &outputs.front()) os << "\n";
            os << o.text;
        }
        code = std::max(code, o.exit_code);
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "pairdepth: cannot write " << out_path << "\n";
            return pairdepth::kExitDomain;
        }
        file << os.str();
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Depth of pairs of monomial ideals on monomial subquotients"};
    app.require_subcommand(0, 1);

    bool json = false;
    std::string field_tag;
    int threads = 0;
    std::uint64_t seed = 42;
    std::string out_path;
    std::vector<std::string> expressions;
    std::string input_path;
    app.add_flag("--json", json, "Emit one compact JSON document per request");
    app.add_option("--field", field_tag, "Override the coefficient field (Q or Fp)");
    app.add_option("--threads", threads, "OpenMP thread count")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Seed for sampled census regimes");
    app.add_option("--out", out_path, "Write output to FILE");
    app.add_option("-e,--expr", expressions, "Request text (repeatable)");
    app.add_option("file", input_path, "File of requests, one per line");

    auto* verify = app.add_subcommand("verify", "Run the law census");
    std::string census = "n=2,exp=2";
    std::string laws = "all";
    verify->add_option("--census", census, "Census bounds, e.g. n=2,exp=2");
    verify->add_option("--laws", laws, "Law ids, comma separated, or all");
    verify->add_option("--seed", seed, "Seed for sampled regimes");
    verify->add_option("--out", out_path, "Write the report to FILE");
    verify->add_flag("--json", json, "Emit JSON");
    verify->add_option("--field", field_tag, "Coefficient field (Q or Fp)");

    CLI11_PARSE(app, argc, argv);

    if (threads > 0) omp_set_num_threads(threads);
    ExecuteOptions options;
    options.seed = seed;
    try {
        if (!field_tag.empty()) options.field_override = parse_field(field_tag);
    } catch (const std::exception& e) {
        std::cerr << "pairdepth: " << e.what() << "\n";
        return pairdepth::kExitParse;
    }

    std::vector<std::string> lines;
    if (verify->parsed()) {
        int n = 2;
        try {
            n = pairdepth::parse_census_spec(census).n;
        } catch (const std::exception& e) {
            std::cerr << "pairdepth: " << e.what() << "\n";
            return pairdepth::kExitParse;
        }
        const auto ring = pairdepth::RingContext::standard(n);
        lines.push_back(ring.to_string() + "; verify census=" + census + " laws=" + laws);
    } else if (!expressions.empty()) {
        lines = expressions;
    } else {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (!input_path.empty()) {
            file.open(input_path);
            if (!file) {
                std::cerr << "pairdepth: cannot read " << input_path << "\n";
                return pairdepth::kExitParse;
            }
            in = &file;
        }
        for (std::string line; std::getline(*in, line);) {
            if (!skip_line(line)) lines.push_back(line);
        }
    }

    std::vector<Output> outputs;
    outputs.reserve(lines.size());
    for (const auto& line : lines) outputs.push_back(pairdepth::execute_line(line, options));
    return emit(outputs, json, out_path);
}
