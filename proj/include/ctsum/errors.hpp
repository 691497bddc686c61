#pragma once

#include <stdexcept>
#include <string>

namespace ctsum {

// Resource / input problems: bad files, bad config, contract violations.
// The CLI maps these to exit code 1.
struct DecodingError : std::runtime_error {
    explicit DecodingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IncompatibleStatsError : std::runtime_error {
    explicit IncompatibleStatsError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Empty-result condition: the document has no term that survives the
// stopword / dictionary / embedding filters. CLI exit code 2.
struct NoScoreableTermsError : std::runtime_error {
    explicit NoScoreableTermsError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ctsum
