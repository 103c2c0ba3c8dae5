#include "pairdepth/request.hpp"

#include <array>
#include <cctype>
#include <set>

#include "pairdepth/syntax.hpp"

namespace pairdepth {

namespace {

constexpr std::array<std::pair<Command, const char*>, 12> kCommandNames = {{
    {Command::Depth, "depth"},
    {Command::Cm, "cm"},
    {Command::Grade, "grade"},
    {Command::Wset, "wset"},
    {Command::Ass, "ass"},
    {Command::Decomp, "decomp"},
    {Command::Dim, "dim"},
    {Command::Regseq, "regseq"},
    {Command::Ext, "ext"},
    {Command::Depthp, "depthp"},
    {Command::Torsion, "torsion"},
    {Command::Verify, "verify"},
}};

const std::vector<std::string> kIdealKeys = {"I", "J", "a", "b", "c"};
const std::vector<std::string> kIntegerKeys = {"k", "i", "construct"};
const std::vector<std::string> kOptionKeys = {"census", "laws"};

struct Requirements {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

Requirements requirements(Command c) {
    switch (c) {
        case Command::Depth:
        case Command::Cm:
        case Command::Wset:
        case Command::Depthp:
        case Command::Torsion:
            return {{"I", "J", "M"}, {}};
        case Command::Grade:
            return {{"a", "M"}, {}};
        case Command::Ext:
            return {{"a", "M"}, {"i"}};
        case Command::Ass:
        case Command::Dim:
            return {{"M"}, {}};
        case Command::Decomp:
            return {{"a"}, {}};
        case Command::Regseq:
            return {{"M"}, {"seq", "k", "a", "construct"}};
        case Command::Verify:
            return {{}, {"census", "laws"}};
    }
    return {};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

// Strips the " at position N" suffix so the position can be re-based.
std::string bare_message(const ParseError& e) {
    std::string msg = e.what();
    const auto at = msg.rfind(" at position ");
    return at == std::string::npos ? msg : msg.substr(0, at);
}

template <class F>
auto rebased(std::size_t offset, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(bare_message(e), offset + e.position());
    } catch (const InputError& e) {
        throw ParseError(e.what(), offset);
    }
}

}  // namespace

std::string to_string(Command c) {
    for (const auto& [cmd, name] : kCommandNames) {
        if (cmd == c) return name;
    }
    return "?";
}

Command command_from_string(std::string_view name) {
    for (const auto& [cmd, n] : kCommandNames) {
        if (name == n) return cmd;
    }
    throw InputError("unknown command '" + std::string(name) + "'");
}

const MonomialIdeal& Request::ideal(const std::string& key) const {
    auto it = ideals.find(key);
    if (it == ideals.end()) throw InputError("request lacks ideal " + key);
    return it->second;
}

const Subquotient& Request::require_module() const {
    if (!module) throw InputError("request lacks module M");
    return *module;
}

int Request::integer_or(const std::string& key, int fallback) const {
    auto it = integers.find(key);
    return it == integers.end() ? fallback : it->second;
}

Request parse_request(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("expected ';' after the ring", text.size());
    std::size_t ring_start = 0;
    while (ring_start < semi && std::isspace(static_cast<unsigned char>(text[ring_start]))) ++ring_start;
    std::size_t ring_end = semi;
    while (ring_end > ring_start && std::isspace(static_cast<unsigned char>(text[ring_end - 1]))) --ring_end;
    Request req;
    req.ring = rebased(ring_start, [&] { return parse_ring(text.substr(ring_start, ring_end - ring_start)); });

    std::size_t pos = semi + 1;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    const std::size_t cmd_start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == cmd_start) throw ParseError("expected a command", cmd_start);
    try {
        req.command = command_from_string(text.substr(cmd_start, pos - cmd_start));
    } catch (const InputError& e) {
        throw ParseError(e.what(), cmd_start);
    }
    const Requirements need = requirements(req.command);
    std::set<std::string> seen;

    while (true) {
        skip_space();
        if (pos >= text.size()) break;
        const std::size_t key_start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        const std::string key(text.substr(key_start, pos - key_start));
        if (key.empty() || pos >= text.size() || text[pos] != '=') throw ParseError("expected key=value", key_start);
        if (!contains(need.required, key) && !contains(need.optional, key)) {
            throw ParseError("key '" + key + "' not accepted by " + to_string(req.command), key_start);
        }
        if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", key_start);
        ++pos;
        const std::size_t value_start = pos;
        int depth = 0;
        while (pos < text.size()) {
            const char c = text[pos];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (depth < 0) throw ParseError("unbalanced bracket", pos);
            if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) break;
            ++pos;
        }
        if (depth != 0) throw ParseError("unterminated bracket", value_start);
        const std::string_view value = text.substr(value_start, pos - value_start);
        if (value.empty()) throw ParseError("empty value for '" + key + "'", value_start);

        if (contains(kIdealKeys, key)) {
            req.ideals[key] = rebased(value_start, [&] { return parse_ideal(req.ring, value); });
        } else if (key == "M") {
            req.module = rebased(value_start, [&] { return parse_module(req.ring, value); });
        } else if (key == "seq") {
            req.seq = rebased(value_start, [&] { return parse_sequence(req.ring, value); });
        } else if (contains(kIntegerKeys, key)) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(std::string(value), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != value.size()) throw ParseError("'" + key + "' needs an integer", value_start);
            req.integers[key] = v;
        } else {
            req.options[key] = std::string(value);
        }
    }
    for (const auto& key : need.required) {
        if (!seen.count(key)) throw ParseError("missing key '" + key + "'", text.size());
    }
    if (req.command == Command::Regseq && !req.seq && !req.integers.count("construct")) {
        throw ParseError("regseq needs seq=[...] or a=(...) construct=N", text.size());
    }
    if (req.command == Command::Regseq && req.integers.count("construct") && !req.ideals.count("a")) {
        throw ParseError("regseq construct=N needs a=(...)", text.size());
    }
    return req;
}

std::string print(const Request& request) {
    const RingContext& ring = request.ring;
    std::string out = ring.to_string() + "; " + to_string(request.command);
    for (const auto& key : kIdealKeys) {
        if (auto it = request.ideals.find(key); it != request.ideals.end()) {
            out += " " + key + "=" + ring.format_ideal(it->second);
        }
    }
    if (request.module) out += " M=" + ring.format_module(*request.module);
    if (request.seq) out += " seq=" + format_sequence(ring, *request.seq);
    for (const auto& key : kIntegerKeys) {
        if (auto it = request.integers.find(key); it != request.integers.end()) {
            out += " " + key + "=" + std::to_string(it->second);
        }
    }
    for (const auto& key : kOptionKeys) {
        if (auto it = request.options.find(key); it != request.options.end()) out += " " + key + "=" + it->second;
    }
    return out;
}

}  // namespace pairdepth
