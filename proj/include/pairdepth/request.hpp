#ifndef PAIRDEPTH_REQUEST_HPP
#define PAIRDEPTH_REQUEST_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairdepth/core.hpp"
#include "pairdepth/sequences.hpp"

namespace pairdepth {

enum class Command { Depth, Cm, Grade, Wset, Ass, Decomp, Dim, Regseq, Ext, Depthp, Torsion, Verify };

std::string to_string(Command c);
/// Throws InputError on an unknown name.
Command command_from_string(std::string_view name);

/// One line of the request language:
///   Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)
/// Ideal keys are I, J, a, b, c; the module key is M; seq=[x, y]; integer keys
/// k, i, construct; verify takes census=... and laws=...
struct Request {
    RingContext ring;
    Command command = Command::Depth;
    std::map<std::string, MonomialIdeal> ideals;
    std::optional<Subquotient> module;
    std::optional<MonomialSequence> seq;
    std::map<std::string, int> integers;
    std::map<std::string, std::string> options;

    const MonomialIdeal& ideal(const std::string& key) const;
    const Subquotient& require_module() const;
    int integer_or(const std::string& key, int fallback) const;

    friend bool operator==(const Request&, const Request&) = default;
};

/// Throws ParseError with a byte position into `text`.
Request parse_request(std::string_view text);

/// Canonical text; parse_request(print(r)) == r.
std::string print(const Request& request);

}  // namespace pairdepth

#endif  // PAIRDEPTH_REQUEST_HPP
