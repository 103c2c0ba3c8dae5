#ifndef PAIRDEPTH_SYNTAX_HPP
#define PAIRDEPTH_SYNTAX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pairdepth/core.hpp"

namespace pairdepth {

/// Parse failure carrying the byte offset into the parsed text.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t position)
        : InputError(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// `Q[x,y]` or `F7[x,y,z]`.
RingContext parse_ring(std::string_view text);

/// `x^2*y`, `x2y`, or `1`. Only declared variable names are accepted; when names
/// overlap the longest declared name wins.
ExponentVector parse_monomial(const RingContext& ring, std::string_view text);

/// `(x^2*y, y^3)`, `(0)`, `(1)`.
MonomialIdeal parse_ideal(const RingContext& ring, std::string_view text);

/// `(1)/(x*y)` is R/(xy). Rejects B ⊄ A.
Subquotient parse_module(const RingContext& ring, std::string_view text);

/// `[x, y^2]`
std::vector<ExponentVector> parse_sequence(const RingContext& ring, std::string_view text);

std::string format_sequence(const RingContext& ring, const std::vector<ExponentVector>& seq);

}  // namespace pairdepth

#endif  // PAIRDEPTH_SYNTAX_HPP
