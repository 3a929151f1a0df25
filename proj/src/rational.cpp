#include "hspin/rational.hpp"

#include "hspin/error.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace hspin {

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    return Integer(text);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
    const Integer p = parse_integer(trim(t.substr(0, slash)), text);
    const Integer q = parse_integer(trim(t.substr(slash + 1)), text);
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

WeightVector parse_weight(std::string_view text) {
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(parse_rational(text.substr(start, comma == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    WeightVector w(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) w(static_cast<Eigen::Index>(i)) = parts[i];
    return w;
}

std::string weight_to_string(const WeightVector& w, char sep) {
    std::string out;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (i) out += sep;
        out += to_string(w(i));
    }
    return out;
}

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw Error(ErrorKind::InternalNonInteger, to_string(q));
    const Integer z = numer(q);
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorKind::InternalNonInteger, "out of range: " + z.str());
    return z.convert_to<std::int64_t>();
}

}  // namespace hspin
