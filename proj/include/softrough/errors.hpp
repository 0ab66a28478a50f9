#pragma once

#include <stdexcept>
#include <string>

namespace softrough {

/// Machine-greppable error categories. The CLI prints them as
/// `error[<tag>] <detail>` and maps every one to exit code 2.
enum class Errc {
    DuplicateLabel,
    EmptyUniverse,
    UnknownLabel,
    NotAPartition,
    NotEquivalence,
    UniverseMismatch,
    DuplicateAttribute,
    BadAttributeName,
    EmptyAttributeSet,
    EmptySubject,
    UndefinedMeasure,
    InvalidBeta,
    SizeOutOfRange,
    IndivisibleGranule,
    EmptyRegion,
    IoFailure,
    ParseError,
};

const char* errc_tag(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_tag(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }
    const char* tag() const { return errc_tag(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace softrough
