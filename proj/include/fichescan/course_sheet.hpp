#pragma once

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fichescan/clock.hpp"
#include "fichescan/errors.hpp"
#include "fichescan/strings.hpp"

namespace fichescan {

enum class Level { Bachelor, Master, Other };

inline std::string to_string(Level l) {
    switch (l) {
        case Level::Bachelor: return "Bachelor";
        case Level::Master: return "Master";
        default: return "Other";
    }
}

inline Level level_from_string(const std::string& s) {
    std::string v = lower_ascii(trim(s));
    if (v == "bachelor" || v == "ba") return Level::Bachelor;
    if (v == "master" || v == "ma") return Level::Master;
    return Level::Other;
}

/// Canonical sheet sections, in the order they are flattened for prompts
/// and serialized in snapshots. Unrecognized headings land in `other`.
enum class Section {
    learning_objectives,
    teaching_methods,
    assessment,
    additional_assessment_info,
    description,
    materials,
    other,
};

inline constexpr std::array<Section, 7> kSectionOrder = {
    Section::learning_objectives, Section::teaching_methods,   Section::assessment,
    Section::additional_assessment_info, Section::description, Section::materials,
    Section::other,
};

inline std::string to_string(Section s) {
    switch (s) {
        case Section::learning_objectives: return "learning_objectives";
        case Section::teaching_methods: return "teaching_methods";
        case Section::assessment: return "assessment";
        case Section::additional_assessment_info: return "additional_assessment_info";
        case Section::description: return "description";
        case Section::materials: return "materials";
        default: return "other";
    }
}

inline std::optional<Section> section_from_string(const std::string& s) {
    for (Section sec : kSectionOrder) {
        if (to_string(sec) == s) return sec;
    }
    return std::nullopt;
}

/// "2024-2025"; second year must be first year + 1.
inline bool valid_academic_year(const std::string& year) {
    if (year.size() != 9 || year[4] != '-') return false;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 7u, 8u}) {
        if (!std::isdigit(static_cast<unsigned char>(year[i]))) return false;
    }
    int first = std::stoi(year.substr(0, 4));
    int second = std::stoi(year.substr(5, 4));
    return second == first + 1;
}

/// One fetched catalogue page, before parsing.
struct RawDocument {
    std::string source_url;
    Timestamp fetched_at{};
    std::string catalogue_year;
    std::string body;
};

struct TeamMember {
    std::string name;
    bool is_coordinator = false;

    bool operator==(const TeamMember&) const = default;
};

/// Parsed, typed representation of one catalogue entry for one year.
struct CourseSheet {
    std::string course_code;
    std::string title;
    int ects = 0;
    Level level = Level::Other;
    std::string semester;
    std::string instruction_language = "unknown";
    std::string faculty;
    std::vector<std::string> programme_affiliations;
    std::vector<TeamMember> teaching_team;
    std::map<Section, std::string> sections;
    std::string source_url;
    Timestamp fetched_at{};
    std::string catalogue_year;

    bool operator==(const CourseSheet&) const = default;

    bool has_section(Section s) const { return sections.count(s) > 0; }

    const std::string* section_text(Section s) const {
        auto it = sections.find(s);
        return it == sections.end() ? nullptr : &it->second;
    }

    std::vector<std::string> coordinator_names() const {
        std::vector<std::string> names;
        for (const auto& m : teaching_team)
            if (m.is_coordinator) names.push_back(m.name);
        return names;
    }
};

/// Canonical plain-text flattening of a sheet: title and metadata first,
/// then sections in fixed order. This is the {sheet_text} fed to providers
/// and the reference text for hallucination checks.
inline std::string flatten_sheet(const CourseSheet& s) {
    std::string out;
    out += "Course code: " + s.course_code + "\n";
    out += "Title: " + s.title + "\n";
    out += "Catalogue year: " + s.catalogue_year + "\n";
    out += "ECTS: " + std::to_string(s.ects) + "\n";
    out += "Level: " + to_string(s.level) + "\n";
    out += "Semester: " + s.semester + "\n";
    out += "Language of instruction: " + s.instruction_language + "\n";
    out += "Faculty: " + s.faculty + "\n";
    out += "Programmes: " + join(s.programme_affiliations, "; ") + "\n";
    std::vector<std::string> team;
    for (const auto& m : s.teaching_team) {
        team.push_back(m.is_coordinator ? m.name + " (coordinator)" : m.name);
    }
    out += "Teaching team: " + join(team, "; ") + "\n";
    for (Section sec : kSectionOrder) {
        if (const std::string* text = s.section_text(sec)) {
            out += "\n[" + to_string(sec) + "]\n" + *text + "\n";
        }
    }
    return out;
}

/// Per-sheet validation findings that are not hard errors.
struct SheetWarning {
    std::string course_code;
    std::string kind;
    std::string detail;
};

/// Invariant checks that warn rather than fail: multiple coordinator flags.
inline std::vector<SheetWarning> validate_sheet(const CourseSheet& s) {
    std::vector<SheetWarning> warnings;
    int coordinators = 0;
    for (const auto& m : s.teaching_team)
        if (m.is_coordinator) ++coordinators;
    if (coordinators > 1) {
        warnings.push_back({s.course_code, "MultipleCoordinators",
                            std::to_string(coordinators) + " team members flagged"});
    }
    return warnings;
}

}  // namespace fichescan
