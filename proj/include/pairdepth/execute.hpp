#ifndef PAIRDEPTH_EXECUTE_HPP
#define PAIRDEPTH_EXECUTE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pairdepth/request.hpp"

namespace pairdepth {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitParse = 2, kExitVerification = 3 };

struct ExecuteOptions {
    std::optional<Field> field_override;
    std::optional<std::uint64_t> seed;
};

struct Output {
    int exit_code = kExitOk;
    nlohmann::ordered_json json;
    std::string text;
};

/// Runs one request. Domain errors become exit code 1 with an "error" member;
/// verify runs with failures return 3.
Output execute(const Request& request, const ExecuteOptions& options = {});

/// Parses then executes; parse errors become exit code 2.
Output execute_line(const std::string& line, const ExecuteOptions& options = {});

/// Key-aligned plain rendering of a flat JSON object.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace pairdepth

#endif  // PAIRDEPTH_EXECUTE_HPP
