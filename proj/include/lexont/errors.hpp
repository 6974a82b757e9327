#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexont {

// Every failure the library reports carries one of these codes. The CLI
// prints them verbatim as `error: <code>: <detail>` and maps them to exit 1.
enum class ErrorCode {
    InvalidArgument,
    UnknownDimension,
    UnknownRelation,
    ParseError,
    IoError,
    EmptySnapshot,
    UnknownSense,
    MissingNominalization,
    UnknownRelationSignature,
    NoBridgeRelation,
    UnresolvableApplication,
    InvalidTemplate,
    EmptyCompletion,
    RankOutOfRange,
    ProviderError,
    EmptyDimensionList,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    std::string_view code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace lexont
