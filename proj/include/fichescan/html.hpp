#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fichescan/strings.hpp"

namespace fichescan {

/// Decodes numeric (&#233; &#xE9;) and common named HTML entities to UTF-8.
/// Unknown entities are left verbatim.
inline std::string decode_entities(std::string_view s) {
    static const std::map<std::string, std::string, std::less<>> named = {
        {"amp", "&"},     {"lt", "<"},      {"gt", ">"},      {"quot", "\""},
        {"apos", "'"},    {"nbsp", " "},    {"eacute", "é"}, {"egrave", "è"},
        {"ecirc", "ê"}, {"euml", "ë"}, {"agrave", "à"}, {"acirc", "â"},
        {"auml", "ä"},  {"aacute", "á"}, {"iuml", "ï"}, {"icirc", "î"},
        {"iacute", "í"}, {"ouml", "ö"}, {"ocirc", "ô"}, {"oacute", "ó"},
        {"uuml", "ü"},  {"ucirc", "û"}, {"uacute", "ú"}, {"ugrave", "ù"},
        {"ccedil", "ç"}, {"ntilde", "ñ"}, {"szlig", "ß"}, {"oelig", "œ"},
        {"Eacute", "É"}, {"Egrave", "È"}, {"Auml", "Ä"},  {"Ouml", "Ö"},
        {"Uuml", "Ü"},  {"Ccedil", "Ç"}, {"deg", "°"},  {"euro", "€"},
        {"ndash", "–"}, {"mdash", "—"}, {"lsquo", "‘"}, {"rsquo", "’"},
        {"ldquo", "“"}, {"rdquo", "”"}, {"hellip", "…"},
    };
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view body = s.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            // numeric reference
            uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (size_t k = 2; k < body.size() && ok; ++k) {
                    char c = body[k];
                    cp <<= 4;
                    if (c >= '0' && c <= '9') cp |= static_cast<uint32_t>(c - '0');
                    else if (c >= 'a' && c <= 'f') cp |= static_cast<uint32_t>(c - 'a' + 10);
                    else if (c >= 'A' && c <= 'F') cp |= static_cast<uint32_t>(c - 'A' + 10);
                    else ok = false;
                }
            } else {
                for (size_t k = 1; k < body.size() && ok; ++k) {
                    char c = body[k];
                    if (c < '0' || c > '9') { ok = false; break; }
                    cp = cp * 10 + static_cast<uint32_t>(c - '0');
                }
            }
            if (ok && cp > 0 && cp <= 0x10FFFF) {
                // encode codepoint as UTF-8
                if (cp < 0x80) {
                    out.push_back(static_cast<char>(cp));
                } else if (cp < 0x800) {
                    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                } else if (cp < 0x10000) {
                    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                } else {
                    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                }
                i = semi + 1;
                continue;
            }
        } else if (auto it = named.find(body); it != named.end()) {
            out += it->second;
            i = semi + 1;
            continue;
        }
        out.push_back(s[i++]);
    }
    return out;
}

struct HtmlToken {
    enum class Kind { Open, Close, Text } kind;
    std::string name;                          // lowercase tag name (Open/Close)
    std::map<std::string, std::string> attrs;  // Open only
    std::string text;                          // Text only, entities decoded
};

/// Event-stream tokenizer, lenient about real-world markup. Comments,
/// doctype, processing instructions, and script/style bodies are dropped.
inline std::vector<HtmlToken> tokenize_html(std::string_view html) {
    std::vector<HtmlToken> tokens;
    size_t i = 0;
    auto emit_text = [&](std::string_view raw) {
        std::string decoded = decode_entities(raw);
        if (trim(decoded).empty()) return;
        tokens.push_back({HtmlToken::Kind::Text, "", {}, decoded});
    };
    while (i < html.size()) {
        size_t lt = html.find('<', i);
        if (lt == std::string_view::npos) {
            emit_text(html.substr(i));
            break;
        }
        if (lt > i) emit_text(html.substr(i, lt - i));
        if (html.compare(lt, 4, "<!--") == 0) {
            size_t end = html.find("-->", lt + 4);
            i = (end == std::string_view::npos) ? html.size() : end + 3;
            continue;
        }
        if (lt + 1 < html.size() && (html[lt + 1] == '!' || html[lt + 1] == '?')) {
            size_t end = html.find('>', lt);
            i = (end == std::string_view::npos) ? html.size() : end + 1;
            continue;
        }
        size_t gt = html.find('>', lt);
        if (gt == std::string_view::npos) break;  // truncated tag, stop
        std::string_view inner = html.substr(lt + 1, gt - lt - 1);
        i = gt + 1;
        bool closing = !inner.empty() && inner[0] == '/';
        if (closing) inner.remove_prefix(1);
        if (!inner.empty() && inner.back() == '/') inner.remove_suffix(1);
        size_t name_end = 0;
        while (name_end < inner.size() && !is_space(inner[name_end])) ++name_end;
        std::string name = lower_ascii(inner.substr(0, name_end));
        if (name.empty()) continue;
        if (closing) {
            tokens.push_back({HtmlToken::Kind::Close, name, {}, ""});
            continue;
        }
        HtmlToken tok{HtmlToken::Kind::Open, name, {}, ""};
        // attributes: name, name=bare, name="quoted", name='quoted'
        size_t p = name_end;
        while (p < inner.size()) {
            while (p < inner.size() && is_space(inner[p])) ++p;
            size_t an = p;
            while (p < inner.size() && !is_space(inner[p]) && inner[p] != '=') ++p;
            if (an == p) break;
            std::string aname = lower_ascii(inner.substr(an, p - an));
            std::string aval;
            while (p < inner.size() && is_space(inner[p])) ++p;
            if (p < inner.size() && inner[p] == '=') {
                ++p;
                while (p < inner.size() && is_space(inner[p])) ++p;
                if (p < inner.size() && (inner[p] == '"' || inner[p] == '\'')) {
                    char q = inner[p++];
                    size_t vend = inner.find(q, p);
                    if (vend == std::string_view::npos) vend = inner.size();
                    aval = decode_entities(inner.substr(p, vend - p));
                    p = (vend < inner.size()) ? vend + 1 : vend;
                } else {
                    size_t vend = p;
                    while (vend < inner.size() && !is_space(inner[vend])) ++vend;
                    aval = decode_entities(inner.substr(p, vend - p));
                    p = vend;
                }
            }
            tok.attrs[aname] = aval;
        }
        if (name == "script" || name == "style") {
            std::string close = "</" + name;
            size_t end = html.find(close, i);
            if (end == std::string_view::npos) {
                i = html.size();
            } else {
                size_t endgt = html.find('>', end);
                i = (endgt == std::string_view::npos) ? html.size() : endgt + 1;
            }
            continue;
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

}  // namespace fichescan
