#pragma once

#include <stdexcept>
#include <string>

namespace fichescan {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FICHESCAN_ERROR(Name)                                       \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what)                      \
            : Error(std::string(#Name) + ": " + what) {}            \
    }

// ingest
FICHESCAN_ERROR(NetworkError);
FICHESCAN_ERROR(HttpStatusError);
FICHESCAN_ERROR(MissingRequiredField);
FICHESCAN_ERROR(MalformedDocument);
FICHESCAN_ERROR(IoError);
FICHESCAN_ERROR(MixedYears);

// classification
FICHESCAN_ERROR(UnresolvedPlaceholder);
FICHESCAN_ERROR(ProviderTransient);
FICHESCAN_ERROR(ProviderPermanent);
FICHESCAN_ERROR(ReplayMiss);
FICHESCAN_ERROR(UnparseableCategory);
FICHESCAN_ERROR(EmptyNarrative);
FICHESCAN_ERROR(InvalidLabelTable);

// pilot harness
FICHESCAN_ERROR(MissingResult);
FICHESCAN_ERROR(DuplicateResult);
FICHESCAN_ERROR(TagOnMatch);
FICHESCAN_ERROR(EmptyDescription);

// scan pipeline
FICHESCAN_ERROR(ConflictingDuplicates);
FICHESCAN_ERROR(UnknownCourse);
FICHESCAN_ERROR(EmptyReason);
FICHESCAN_ERROR(AllRetriesExhausted);

// distribution
FICHESCAN_ERROR(NoRecipients);
FICHESCAN_ERROR(TransportError);

// aggregation
FICHESCAN_ERROR(EmptyScope);
FICHESCAN_ERROR(UnknownProgramme);
FICHESCAN_ERROR(MissingSheet);

// longitudinal
FICHESCAN_ERROR(InconsistentMapping);
FICHESCAN_ERROR(MissingCategory);

// config / cli
FICHESCAN_ERROR(ConfigError);

#undef FICHESCAN_ERROR

}  // namespace fichescan
