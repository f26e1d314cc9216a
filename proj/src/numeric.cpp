#include "fracdim/numeric.hpp"

#include "fracdim/errors.hpp"

#include <cctype>
#include <cstdio>

namespace fracdim {

std::string decimal12(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", to_double(r));
    return buf;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty integer");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ParseError("malformed integer '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("malformed integer '" + std::string(text) + "'");
    BigInt value(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt p = parse_bigint(text.substr(0, slash));
    BigInt q = parse_bigint(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

}  // namespace fracdim
