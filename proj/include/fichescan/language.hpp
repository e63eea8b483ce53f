#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "fichescan/course_sheet.hpp"
#include "fichescan/strings.hpp"

namespace fichescan {

namespace lang {
inline constexpr const char* kUnknown = "unknown";
inline constexpr std::array<const char*, 5> kDetectable = {"nl", "en", "fr", "de", "es"};
}  // namespace lang

/// Maps a human-readable language name ("Dutch", "Nederlands", "en", ...)
/// to a language tag. Unrecognized values map to "unknown".
inline std::string language_tag_from_name(const std::string& name) {
    std::string v = lower_ascii(trim(name));
    if (v == "nl" || v == "dutch" || v == "nederlands") return "nl";
    if (v == "en" || v == "english" || v == "engels") return "en";
    if (v == "fr" || v == "french" || v == "frans" || v == "français" || v == "francais")
        return "fr";
    if (v == "de" || v == "german" || v == "duits" || v == "deutsch") return "de";
    if (v == "es" || v == "spanish" || v == "spaans" || v == "español" || v == "espanol")
        return "es";
    return lang::kUnknown;
}

namespace detail {

inline const std::unordered_set<std::string>& stopwords(std::string_view tag) {
    static const std::unordered_set<std::string> nl = {
        "de", "het", "een", "en", "van", "te", "dat", "die", "in", "je", "niet",
        "zijn", "op", "aan", "met", "als", "voor", "maar", "om", "dit", "deze",
        "wordt", "worden", "bij", "naar", "uit", "ook", "er", "tot", "hun", "of"};
    static const std::unordered_set<std::string> en = {
        "the", "be", "to", "of", "and", "a", "in", "that", "have", "it", "for",
        "not", "on", "with", "as", "you", "do", "at", "this", "but", "by", "from",
        "they", "we", "is", "are", "was", "or", "an", "their"};
    static const std::unordered_set<std::string> fr = {
        "le", "la", "les", "des", "du", "un", "une", "et", "est", "que", "qui",
        "dans", "pour", "ce", "cette", "il", "elle", "au", "aux", "ne", "pas",
        "sur", "se", "plus", "par", "avec", "son", "ou", "sont", "leur"};
    static const std::unordered_set<std::string> de = {
        "der", "die", "das", "und", "ist", "ein", "eine", "zu", "den", "dem",
        "nicht", "mit", "sich", "auf", "im", "als", "auch", "es", "an",
        "werden", "aus", "er", "hat", "dass", "sie", "nach", "bei", "um", "nur", "wird"};
    static const std::unordered_set<std::string> es = {
        "el", "los", "las", "del", "una", "y", "es", "que", "por", "con",
        "para", "se", "su", "al", "lo", "como", "pero", "sus", "le", "ya",
        "o", "este", "esta", "porque", "cuando", "los", "sobre", "entre", "hay", "son"};
    static const std::unordered_set<std::string> empty;
    if (tag == "nl") return nl;
    if (tag == "en") return en;
    if (tag == "fr") return fr;
    if (tag == "de") return de;
    if (tag == "es") return es;
    return empty;
}

inline std::vector<std::string> words(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalpha(u) || u >= 0x80) {
            cur.push_back(static_cast<char>(std::tolower(u)));
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace detail

/// Stopword hit rate of `text` against one language's list, in [0,1].
inline double stopword_rate(std::string_view text, std::string_view tag) {
    auto toks = detail::words(text);
    if (toks.empty()) return 0.0;
    const auto& set = detail::stopwords(tag);
    size_t hits = 0;
    for (const auto& t : toks)
        if (set.count(t)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(toks.size());
}

/// Returns the explicit instruction-language field when present; otherwise
/// falls back to a stopword-frequency vote over the section texts. The
/// winning language must score at least twice the runner-up, else "unknown".
inline std::string detect_language(const CourseSheet& sheet) {
    if (sheet.instruction_language != lang::kUnknown && !sheet.instruction_language.empty()) {
        return sheet.instruction_language;
    }
    std::string text;
    for (const auto& [sec, body] : sheet.sections) {
        text += body;
        text += '\n';
    }
    if (trim(text).empty()) return lang::kUnknown;
    std::string best = lang::kUnknown;
    double best_rate = 0.0, second_rate = 0.0;
    for (const char* tag : lang::kDetectable) {
        double r = stopword_rate(text, tag);
        if (r > best_rate) {
            second_rate = best_rate;
            best_rate = r;
            best = tag;
        } else if (r > second_rate) {
            second_rate = r;
        }
    }
    if (best_rate <= 0.0) return lang::kUnknown;
    if (best_rate >= 2.0 * second_rate) return best;
    return lang::kUnknown;
}

}  // namespace fichescan
