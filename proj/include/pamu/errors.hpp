#pragma once

#include <stdexcept>
#include <string>

namespace pamu {

// Base for every library error so callers can catch pamu failures wholesale.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// core_types
struct NegativeMass : Error { using Error::Error; };
struct DegenerateDistribution : Error { using Error::Error; };
struct SumMismatch : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct VocabularyMismatch : Error { using Error::Error; };

// extraction
struct ExtractorUnavailable : Error { using Error::Error; };
struct MissingAnnotation : Error { using Error::Error; };
struct ZeroLength : Error { using Error::Error; };
struct EmptyHistory : Error { using Error::Error; };
struct Timeout : Error { using Error::Error; };
struct MalformedResponse : Error { using Error::Error; };
struct NonSimplexScores : Error { using Error::Error; };

// perception
struct InsufficientHistory : Error { using Error::Error; };

// generation
struct BackendUnreachable : Error { using Error::Error; };
struct BackendError : Error { using Error::Error; };
struct EmptyCompletion : Error { using Error::Error; };

// evaluation
struct EmptyReference : Error { using Error::Error; };

// harness
struct ParseError : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };

}  // namespace pamu
