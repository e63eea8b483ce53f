#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "fichescan/course_sheet.hpp"
#include "fichescan/html.hpp"
#include "fichescan/language.hpp"
#include "fichescan/strings.hpp"

namespace fichescan {

namespace detail {

inline std::string norm_key(std::string_view s) {
    return collapse_ws(lower_ascii(strip_diacritics(s)));
}

enum class Bucket { None, Team, Programmes, Sec };

struct HeadingTarget {
    Bucket bucket = Bucket::None;
    Section section = Section::other;
};

/// Bilingual heading normalization: catalogue sheets mix Dutch and English
/// headings for the same section.
inline HeadingTarget classify_heading(const std::string& heading) {
    std::string h = norm_key(heading);
    auto any = [&](std::initializer_list<const char*> names) {
        for (const char* n : names)
            if (h == n) return true;
        return false;
    };
    if (any({"teaching team", "team", "docenten", "lesgevers", "teaching staff",
             "titularis en medewerkers"}))
        return {Bucket::Team, Section::other};
    if (any({"programmes", "programs", "opleidingen", "programme affiliations",
             "study programmes"}))
        return {Bucket::Programmes, Section::other};
    if (any({"learning objectives", "objectives", "learning outcomes", "leerdoelen",
             "eindcompetenties", "competences", "leerresultaten", "doelstellingen"}))
        return {Bucket::Sec, Section::learning_objectives};
    if (any({"teaching methods", "teaching methods and contact hours", "onderwijsmethoden",
             "werkvormen", "teaching activities", "onderwijsactiviteiten"}))
        return {Bucket::Sec, Section::teaching_methods};
    if (any({"assessment", "evaluation", "evaluatie", "beoordeling", "examenvormen",
             "assessment structure", "toetsing"}))
        return {Bucket::Sec, Section::assessment};
    if (any({"additional assessment information", "additional information regarding assessment",
             "aanvullende informatie mbt evaluatie", "aanvullende informatie m.b.t. evaluatie",
             "additional assessment info"}))
        return {Bucket::Sec, Section::additional_assessment_info};
    if (any({"course description", "description", "inhoud", "omschrijving", "course content",
             "beschrijving"}))
        return {Bucket::Sec, Section::description};
    if (any({"materials", "course materials", "study materials", "studiemateriaal",
             "leermateriaal"}))
        return {Bucket::Sec, Section::materials};
    return {Bucket::Sec, Section::other};
}

inline bool is_coordinator_item(const std::string& item, std::string* name_out) {
    std::string s = trim(item);
    size_t open = s.rfind('(');
    if (open == std::string::npos || s.empty() || s.back() != ')') {
        *name_out = s;
        return false;
    }
    std::string marker = norm_key(s.substr(open + 1, s.size() - open - 2));
    if (marker == "coordinator" || marker == "coordinateur" || marker == "titularis") {
        *name_out = trim(s.substr(0, open));
        return true;
    }
    *name_out = s;
    return false;
}

}  // namespace detail

struct ParsedSheet {
    CourseSheet sheet;
    std::vector<SheetWarning> warnings;
};

/// Extracts a typed CourseSheet from one catalogue HTML document.
///
/// Metadata comes from definition lists (dt/dd pairs), the title from the
/// first h1 (falling back to the head title), and body sections from
/// h2/h3-delimited blocks. Unrecognized headings and metadata keys are
/// preserved under the `other` section. A document with repeated h1 title
/// blocks is treated as a single sheet with concatenated sections and a
/// MultiFiche warning.
inline ParsedSheet parse_sheet(const RawDocument& doc) {
    auto tokens = tokenize_html(doc.body);
    bool has_element = false;
    for (const auto& t : tokens)
        if (t.kind != HtmlToken::Kind::Text) { has_element = true; break; }
    if (!has_element) throw MalformedDocument("no HTML elements in document from " + doc.source_url);

    CourseSheet sheet;
    sheet.source_url = doc.source_url;
    sheet.fetched_at = doc.fetched_at;
    sheet.catalogue_year = doc.catalogue_year;

    std::vector<std::string> titles;
    std::string head_title;
    std::map<std::string, std::string> metadata;          // normalized dt -> dd
    std::vector<std::string> metadata_order;              // for stable `other` spillover
    std::vector<std::string> team_items, programme_items;
    std::map<Section, std::vector<std::string>> section_lines;

    detail::Bucket bucket = detail::Bucket::None;
    Section cur_section = Section::other;
    bool in_head_title = false, in_h1 = false, in_heading = false, in_dt = false, in_dd = false;
    bool in_li = false;
    std::string capture, pending_dt, cur_line;

    auto flush_line = [&] {
        std::string line = collapse_ws(cur_line);
        cur_line.clear();
        if (line.empty()) return;
        switch (bucket) {
            case detail::Bucket::Team: team_items.push_back(line); break;
            case detail::Bucket::Programmes: programme_items.push_back(line); break;
            case detail::Bucket::Sec: section_lines[cur_section].push_back(line); break;
            case detail::Bucket::None: break;
        }
    };

    for (const auto& tok : tokens) {
        if (tok.kind == HtmlToken::Kind::Text) {
            if (in_head_title) head_title += tok.text;
            else if (in_h1 || in_heading || in_dt || in_dd) capture += tok.text;
            else cur_line += " " + tok.text;
            continue;
        }
        const std::string& tag = tok.name;
        if (tok.kind == HtmlToken::Kind::Open) {
            if (tag == "title") { in_head_title = true; }
            else if (tag == "h1") { flush_line(); in_h1 = true; capture.clear(); }
            else if (tag == "h2" || tag == "h3") { flush_line(); in_heading = true; capture.clear(); }
            else if (tag == "dt") { flush_line(); in_dt = true; capture.clear(); }
            else if (tag == "dd") { in_dd = true; capture.clear(); }
            else if (tag == "li") { flush_line(); in_li = true; }
            else if (tag == "p" || tag == "div" || tag == "tr" || tag == "br") { flush_line(); }
        } else {  // Close
            if (tag == "title") { in_head_title = false; }
            else if (tag == "h1") {
                in_h1 = false;
                std::string t = collapse_ws(capture);
                if (!t.empty()) titles.push_back(t);
                bucket = detail::Bucket::None;
            } else if (tag == "h2" || tag == "h3") {
                in_heading = false;
                std::string h = collapse_ws(capture);
                auto target = detail::classify_heading(h);
                bucket = target.bucket;
                cur_section = target.section;
                if (target.bucket == detail::Bucket::Sec && target.section == Section::other &&
                    !h.empty()) {
                    section_lines[Section::other].push_back(h + ":");
                }
            } else if (tag == "dt") {
                in_dt = false;
                pending_dt = detail::norm_key(capture);
            } else if (tag == "dd") {
                in_dd = false;
                std::string v = collapse_ws(capture);
                if (!pending_dt.empty() && !metadata.count(pending_dt)) {
                    metadata[pending_dt] = v;
                    metadata_order.push_back(pending_dt);
                }
                pending_dt.clear();
            } else if (tag == "li") {
                in_li = false;
                flush_line();
            } else if (tag == "p" || tag == "div" || tag == "tr") {
                flush_line();
            }
        }
    }
    flush_line();
    (void)in_li;

    ParsedSheet out;

    // title
    if (!titles.empty()) sheet.title = titles.front();
    else if (!collapse_ws(head_title).empty()) sheet.title = collapse_ws(head_title);
    if (titles.size() > 1) {
        out.warnings.push_back({"", "MultiFiche",
                                std::to_string(titles.size()) + " title blocks merged into one sheet"});
    }
    if (sheet.title.empty()) throw MissingRequiredField("no title in " + doc.source_url);

    auto meta = [&](std::initializer_list<const char*> keys) -> std::optional<std::string> {
        for (const char* k : keys) {
            auto it = metadata.find(k);
            if (it != metadata.end()) return it->second;
        }
        return std::nullopt;
    };

    if (auto v = meta({"course code", "code", "opleidingsonderdeelcode", "vakcode", "course id"}))
        sheet.course_code = trim(*v);
    if (sheet.course_code.empty()) throw MissingRequiredField("no course code in " + doc.source_url);

    if (auto v = meta({"credits", "ects", "studiepunten", "credit points"})) {
        int n = 0;
        for (char c : *v) {
            if (c >= '0' && c <= '9') n = n * 10 + (c - '0');
            else if (n > 0) break;
        }
        sheet.ects = n;  // 0 means unspecified
    }
    if (auto v = meta({"level", "academic level", "niveau", "cycle"}))
        sheet.level = level_from_string(*v);
    if (auto v = meta({"semester", "onderwijsperiode"})) sheet.semester = *v;
    if (auto v = meta({"language of instruction", "instruction language", "onderwijstaal",
                       "taught in", "taal"}))
        sheet.instruction_language = language_tag_from_name(*v);
    if (auto v = meta({"faculty", "faculteit"})) sheet.faculty = *v;
    if (auto v = meta({"programmes", "programs", "programme", "opleidingen", "opleiding",
                       "programme affiliations"})) {
        for (const auto& p : split(*v, ';')) {
            std::string t = trim(p);
            if (!t.empty()) sheet.programme_affiliations.push_back(t);
        }
    }
    for (const auto& item : programme_items) {
        sheet.programme_affiliations.push_back(item);
    }

    for (const auto& item : team_items) {
        TeamMember m;
        m.is_coordinator = detail::is_coordinator_item(item, &m.name);
        if (!m.name.empty()) sheet.teaching_team.push_back(m);
    }

    // unknown metadata keys are kept as text so downstream scans still see them
    static const std::unordered_set<std::string> known_keys = {
        "course code", "code", "opleidingsonderdeelcode", "vakcode", "course id",
        "credits", "ects", "studiepunten", "credit points",
        "level", "academic level", "niveau", "cycle",
        "semester", "onderwijsperiode",
        "language of instruction", "instruction language", "onderwijstaal", "taught in", "taal",
        "faculty", "faculteit",
        "programmes", "programs", "programme", "opleidingen", "opleiding",
        "programme affiliations", "title", "course title", "titel"};
    for (const auto& k : metadata_order) {
        if (!known_keys.count(k)) {
            section_lines[Section::other].push_back(k + ": " + metadata[k]);
        }
    }

    for (const auto& [sec, lines] : section_lines) {
        std::string text = join(lines, "\n");
        if (!trim(text).empty()) sheet.sections[sec] = text;
    }

    if (sheet.programme_affiliations.empty()) {
        out.warnings.push_back({sheet.course_code, "NoProgramme", "sheet lists no programme"});
    }
    for (auto& w : validate_sheet(sheet)) {
        out.warnings.push_back(w);
    }
    for (auto& w : out.warnings) {
        if (w.course_code.empty()) w.course_code = sheet.course_code;
    }
    out.sheet = std::move(sheet);
    return out;
}

}  // namespace fichescan
