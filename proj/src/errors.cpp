#include "softrough/errors.hpp"

namespace softrough {

const char* errc_tag(Errc code) {
    switch (code) {
        case Errc::DuplicateLabel: return "DuplicateLabel";
        case Errc::EmptyUniverse: return "EmptyUniverse";
        case Errc::UnknownLabel: return "UnknownLabel";
        case Errc::NotAPartition: return "NotAPartition";
        case Errc::NotEquivalence: return "NotEquivalence";
        case Errc::UniverseMismatch: return "UniverseMismatch";
        case Errc::DuplicateAttribute: return "DuplicateAttribute";
        case Errc::BadAttributeName: return "BadAttributeName";
        case Errc::EmptyAttributeSet: return "EmptyAttributeSet";
        case Errc::EmptySubject: return "EmptySubject";
        case Errc::UndefinedMeasure: return "UndefinedMeasure";
        case Errc::InvalidBeta: return "InvalidBeta";
        case Errc::SizeOutOfRange: return "SizeOutOfRange";
        case Errc::IndivisibleGranule: return "IndivisibleGranule";
        case Errc::EmptyRegion: return "EmptyRegion";
        case Errc::IoFailure: return "IoFailure";
        case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace softrough
