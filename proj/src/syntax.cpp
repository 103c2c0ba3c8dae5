#include "pairdepth/syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace pairdepth {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, base_ + pos_); }

    int integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        (void)ptr;
        if (ec != std::errc() || value > std::numeric_limits<int>::max()) {
            pos_ = start;
            fail("malformed exponent");
        }
        return static_cast<int>(value);
    }

    std::string_view rest() const { return text_.substr(pos_); }
    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Longest declared name that prefixes the cursor, or -1.
int match_variable(const RingContext& ring, std::string_view rest, std::size_t& length) {
    int best = -1;
    length = 0;
    for (int i = 0; i < ring.nvars(); ++i) {
        const std::string& name = ring.var_names()[static_cast<std::size_t>(i)];
        if (name.size() > length && rest.substr(0, name.size()) == name) {
            best = i;
            length = name.size();
        }
    }
    return best;
}

ExponentVector monomial_at(const RingContext& ring, Cursor& cur) {
    ExponentVector e(static_cast<std::size_t>(ring.nvars()), 0);
    cur.skip_space();
    if (cur.peek_raw() == '1') {
        cur.advance(1);
        return e;
    }
    bool any = false;
    while (true) {
        cur.skip_space();
        if (!is_ident_start(cur.peek_raw())) {
            if (!any) cur.fail("expected a monomial");
            break;
        }
        // Consume adjacent factors such as x2y.
        while (is_ident_start(cur.peek_raw())) {
            std::size_t len = 0;
            const int var = match_variable(ring, cur.rest(), len);
            if (var < 0) {
                std::size_t end = 0;
                const auto rest = cur.rest();
                while (end < rest.size() && is_ident_char(rest[end])) ++end;
                cur.fail("undeclared variable '" + std::string(rest.substr(0, end)) + "'");
            }
            cur.advance(len);
            int exponent = 1;
            if (cur.peek_raw() == '^') {
                cur.advance(1);
                exponent = cur.integer();
            } else if (std::isdigit(static_cast<unsigned char>(cur.peek_raw()))) {
                exponent = cur.integer();
            }
            auto& slot = e[static_cast<std::size_t>(var)];
            if (__builtin_add_overflow(slot, exponent, &slot)) cur.fail("exponent overflow");
            any = true;
        }
        if (!cur.accept('*')) break;
    }
    return e;
}

MonomialIdeal ideal_at(const RingContext& ring, Cursor& cur) {
    cur.expect('(');
    std::vector<ExponentVector> gens;
    if (cur.peek() == '0') {
        cur.advance(1);
        cur.expect(')');
        return MonomialIdeal::zero(ring.nvars());
    }
    do {
        gens.push_back(monomial_at(ring, cur));
    } while (cur.accept(','));
    cur.expect(')');
    return MonomialIdeal(ring.nvars(), std::move(gens));
}

}  // namespace

RingContext parse_ring(std::string_view text) {
    std::size_t offset = 0;
    text = trim(text, offset);
    Cursor cur(text, offset);
    Field field;
    if (cur.accept('Q')) {
        field = Field::rationals();
    } else if (cur.accept('F')) {
        const std::size_t at = cur.pos();
        const int p = cur.integer();
        if (!is_prime_number(static_cast<std::uint64_t>(p))) {
            throw ParseError("field characteristic " + std::to_string(p) + " is not prime", offset + at);
        }
        field = Field::prime(static_cast<std::uint64_t>(p));
    } else {
        cur.fail("expected a field tag Q or F<p>");
    }
    cur.expect('[');
    std::vector<std::string> names;
    do {
        cur.skip_space();
        const auto rest = cur.rest();
        if (rest.empty() || !is_ident_start(rest.front())) cur.fail("expected a variable name");
        std::size_t end = 0;
        while (end < rest.size() && is_ident_char(rest[end])) ++end;
        names.emplace_back(rest.substr(0, end));
        cur.advance(end);
    } while (cur.accept(','));
    cur.expect(']');
    if (!cur.done()) cur.fail("trailing characters after ring declaration");
    try {
        return RingContext(std::move(names), field);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what(), offset);
    }
}

ExponentVector parse_monomial(const RingContext& ring, std::string_view text) {
    std::size_t offset = 0;
    text = trim(text, offset);
    Cursor cur(text, offset);
    auto e = monomial_at(ring, cur);
    if (!cur.done()) cur.fail("trailing characters after monomial");
    return e;
}

MonomialIdeal parse_ideal(const RingContext& ring, std::string_view text) {
    std::size_t offset = 0;
    text = trim(text, offset);
    Cursor cur(text, offset);
    auto ideal = ideal_at(ring, cur);
    if (!cur.done()) cur.fail("trailing characters after ideal");
    return ideal;
}

Subquotient parse_module(const RingContext& ring, std::string_view text) {
    std::size_t offset = 0;
    text = trim(text, offset);
    Cursor cur(text, offset);
    auto numerator = ideal_at(ring, cur);
    const std::size_t slash = offset + cur.pos();
    cur.expect('/');
    auto denominator = ideal_at(ring, cur);
    if (!cur.done()) cur.fail("trailing characters after module");
    if (!is_subideal(denominator, numerator)) {
        throw ParseError("module denominator is not contained in its numerator", slash);
    }
    return Subquotient(std::move(numerator), std::move(denominator));
}

std::vector<ExponentVector> parse_sequence(const RingContext& ring, std::string_view text) {
    std::size_t offset = 0;
    text = trim(text, offset);
    Cursor cur(text, offset);
    cur.expect('[');
    std::vector<ExponentVector> seq;
    if (!cur.accept(']')) {
        do {
            seq.push_back(monomial_at(ring, cur));
        } while (cur.accept(','));
        cur.expect(']');
    }
    if (!cur.done()) cur.fail("trailing characters after sequence");
    return seq;
}

std::string format_sequence(const RingContext& ring, const std::vector<ExponentVector>& seq) {
    std::string out = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += ", ";
        out += ring.format_monomial(seq[i]);
    }
    return out + "]";
}

}  // namespace pairdepth
