#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fichescan {

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

inline std::string lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

/// Collapses any run of whitespace to a single space and trims the ends.
inline std::string collapse_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = true;  // swallow leading whitespace
    for (char c : s) {
        if (is_space(c)) {
            in_ws = true;
        } else {
            if (in_ws && !out.empty()) out.push_back(' ');
            out.push_back(c);
            in_ws = false;
        }
    }
    return out;
}

inline bool contains(std::string_view haystack, std::string_view needle) {
    return haystack.find(needle) != std::string_view::npos;
}

inline bool icontains(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end(),
                          [](unsigned char a, unsigned char b) {
                              return std::tolower(a) == std::tolower(b);
                          });
    return it != haystack.end();
}

inline std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == delim) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '\n') {
            std::string_view line = s.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            out.emplace_back(line);
            start = i + 1;
        }
    }
    if (!out.empty() && out.back().empty() && (s.empty() || s.back() == '\n')) out.pop_back();
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

/// Maps accented Latin letters to their base ASCII letter; other multi-byte
/// sequences pass through unchanged. Input and output are UTF-8.
inline std::string strip_diacritics(std::string_view s) {
    static const struct { uint32_t cp; char base; } table[] = {
        {0xC0, 'A'}, {0xC1, 'A'}, {0xC2, 'A'}, {0xC3, 'A'}, {0xC4, 'A'}, {0xC5, 'A'},
        {0xC7, 'C'}, {0xC8, 'E'}, {0xC9, 'E'}, {0xCA, 'E'}, {0xCB, 'E'},
        {0xCC, 'I'}, {0xCD, 'I'}, {0xCE, 'I'}, {0xCF, 'I'}, {0xD1, 'N'},
        {0xD2, 'O'}, {0xD3, 'O'}, {0xD4, 'O'}, {0xD5, 'O'}, {0xD6, 'O'}, {0xD8, 'O'},
        {0xD9, 'U'}, {0xDA, 'U'}, {0xDB, 'U'}, {0xDC, 'U'}, {0xDD, 'Y'},
        {0xE0, 'a'}, {0xE1, 'a'}, {0xE2, 'a'}, {0xE3, 'a'}, {0xE4, 'a'}, {0xE5, 'a'},
        {0xE7, 'c'}, {0xE8, 'e'}, {0xE9, 'e'}, {0xEA, 'e'}, {0xEB, 'e'},
        {0xEC, 'i'}, {0xED, 'i'}, {0xEE, 'i'}, {0xEF, 'i'}, {0xF1, 'n'},
        {0xF2, 'o'}, {0xF3, 'o'}, {0xF4, 'o'}, {0xF5, 'o'}, {0xF6, 'o'}, {0xF8, 'o'},
        {0xF9, 'u'}, {0xFA, 'u'}, {0xFB, 'u'}, {0xFC, 'u'}, {0xFD, 'y'}, {0xFF, 'y'},
        {0x152, 'O'}, {0x153, 'o'}, {0x160, 'S'}, {0x161, 's'}, {0x17D, 'Z'}, {0x17E, 'z'},
        {0x178, 'Y'},
    };
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        // decode one UTF-8 sequence
        uint32_t cp = 0;
        size_t len = 0;
        if ((c & 0xE0) == 0xC0) { cp = c & 0x1F; len = 2; }
        else if ((c & 0xF0) == 0xE0) { cp = c & 0x0F; len = 3; }
        else if ((c & 0xF8) == 0xF0) { cp = c & 0x07; len = 4; }
        else { out.push_back(static_cast<char>(c)); ++i; continue; }
        if (i + len > s.size()) { out.push_back(static_cast<char>(c)); ++i; continue; }
        bool valid = true;
        for (size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) { valid = false; break; }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!valid) { out.push_back(static_cast<char>(c)); ++i; continue; }
        char base = 0;
        for (const auto& e : table) {
            if (e.cp == cp) { base = e.base; break; }
        }
        if (base) {
            out.push_back(base);
        } else {
            out.append(s.substr(i, len));
        }
        i += len;
    }
    return out;
}

/// Levenshtein edit distance over bytes (apply normalization first).
inline size_t edit_distance(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<size_t> prev(a.size() + 1), cur(a.size() + 1);
    for (size_t j = 0; j <= a.size(); ++j) prev[j] = j;
    for (size_t i = 1; i <= b.size(); ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= a.size(); ++j) {
            size_t cost = (a[j - 1] == b[i - 1]) ? 0 : 1;
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
        }
        std::swap(prev, cur);
    }
    return prev[a.size()];
}

/// Rounds 100*num/den to integer percent, half away from zero.
/// Exact integer arithmetic, no float involved.
inline int percent_int(long long num, long long den) {
    if (den == 0) return 0;
    long long v = 100 * num;
    long long q = v / den;
    long long r = v % den;
    if (2 * r >= den) ++q;
    return static_cast<int>(q);
}

/// Rounds 100*num/den to tenths of a percent, half away from zero.
/// Returns integer tenths, e.g. 2824/4684 -> 603 (i.e. 60.3%).
inline long long percent_tenths(long long num, long long den) {
    if (den == 0) return 0;
    long long v = 1000 * num;
    long long q = v / den;
    long long r = v % den;
    if (2 * r >= den) ++q;
    return q;
}

/// Formats integer tenths as a one-decimal string: 603 -> "60.3".
inline std::string format_tenths(long long tenths) {
    std::string sign = tenths < 0 ? "-" : "";
    long long t = tenths < 0 ? -tenths : tenths;
    return sign + std::to_string(t / 10) + "." + std::to_string(t % 10);
}

}  // namespace fichescan
