#include "pcs/notation.hpp"

#include <charconv>
#include <limits>

#include "pcs/error.hpp"

namespace pcs {

namespace {

std::string_view trim(std::string_view s) {
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && blank(s.back())) s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, int& out) {
    s = trim(s);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<int> expand(std::string_view text) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
        text = trim(text.substr(1, text.size() - 2));
    }
    if (text.empty()) throw ParseError("empty censoring scheme");

    std::vector<int> out;
    while (true) {
        const std::size_t comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        const std::size_t star = token.find('*');
        int value = 0;
        int repeat = 1;
        const bool ok = star == std::string_view::npos
                            ? parse_int(token, value)
                            : parse_int(token.substr(0, star), value) &&
                                  parse_int(token.substr(star + 1), repeat);
        if (!ok || value < 0 || repeat < 1) {
            throw ParseError("malformed scheme token '" + std::string(trim(token)) + "'");
        }
        if (out.size() + static_cast<std::size_t>(repeat) > 1'000'000) {
            throw ParseError("scheme token '" + std::string(trim(token)) + "' expands too far");
        }
        out.insert(out.end(), static_cast<std::size_t>(repeat), value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

CensoringScheme parse_scheme_notation(std::string_view text, int n, int m) {
    std::vector<int> r = expand(text);
    if (r.size() != static_cast<std::size_t>(m)) {
        throw ParseError("scheme '" + std::string(trim(text)) + "' has " + std::to_string(r.size()) +
                         " entries, expected m=" + std::to_string(m));
    }
    long long total = 0;
    for (int v : r) total += v;
    if (total != static_cast<long long>(n) - m) {
        throw ParseError("scheme '" + std::string(trim(text)) + "' removes " +
                         std::to_string(total) + " units, expected n-m=" + std::to_string(n - m));
    }
    return CensoringScheme(n, m, std::move(r));
}

CensoringScheme parse_scheme_notation(std::string_view text) {
    std::vector<int> r = expand(text);
    long long total = static_cast<long long>(r.size());
    for (int v : r) total += v;
    if (total > std::numeric_limits<int>::max()) throw ParseError("scheme too large");
    return CensoringScheme::from_removals(std::move(r));
}

std::string format_scheme_notation(const CensoringScheme& scheme) {
    const auto& r = scheme.removals();
    std::string out;
    for (std::size_t i = 0; i < r.size();) {
        std::size_t j = i;
        while (j < r.size() && r[j] == r[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(r[i]);
        if (j - i >= 2) out += '*' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace pcs
