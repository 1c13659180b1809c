#pragma once

// Input grammar for point lists:  item ("," item)*,  item := integer | integer "^" multiplicity

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace beukers {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::invalid_argument(msg + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct ParsedPoints {
    std::vector<std::int64_t> values;  // expanded: "0^2,1" -> {0, 0, 1}
    bool used_multiplicity = false;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }
    std::size_t pos() const { return pos_; }
    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int64_t integer(bool allow_sign)
    {
        skip_space();
        const std::size_t start = pos_;
        bool negative = false;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer", pos_);
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int digit = text_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) throw ParseError("integer too large", start);
            v = v * 10 + digit;
            ++pos_;
        }
        return negative ? -v : v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ParsedPoints parse_points(std::string_view text)
{
    detail::Cursor cur(text);
    ParsedPoints out;
    cur.skip_space();
    if (cur.done()) throw ParseError("empty point list", 0);
    for (;;) {
        const std::int64_t value = cur.integer(true);
        std::int64_t mult = 1;
        if (cur.accept('^')) {
            const std::size_t at = cur.pos();
            mult = cur.integer(false);
            if (mult < 1) throw ParseError("multiplicity must be >= 1", at);
            if (mult > 64) throw ParseError("multiplicity too large", at);
            out.used_multiplicity = true;
        }
        out.values.insert(out.values.end(), static_cast<std::size_t>(mult), value);
        cur.skip_space();
        if (cur.done()) break;
        if (!cur.accept(',')) throw ParseError("expected ',' or '^'", cur.pos());
    }
    return out;
}

/// Comma-separated nonnegative exponents, as taken by eval / denom-check.
inline std::vector<std::int64_t> parse_exponents(std::string_view text)
{
    detail::Cursor cur(text);
    std::vector<std::int64_t> out;
    cur.skip_space();
    if (cur.done()) throw ParseError("empty exponent list", 0);
    for (;;) {
        out.push_back(cur.integer(false));
        cur.skip_space();
        if (cur.done()) break;
        if (!cur.accept(',')) throw ParseError("expected ','", cur.pos());
    }
    return out;
}

} // namespace beukers
