#pragma once

#include <stdexcept>
#include <string>

namespace seshadri {

// Base for all domain errors raised by the library. The CLI maps these to
// exit code 2; anything else escaping is an internal failure (exit 3).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class NegativeRadicand : public DomainError {
public:
    explicit NegativeRadicand(const std::string& message)
        : DomainError("negative_radicand", message) {}
};

class PicardRankUnsupported : public DomainError {
public:
    explicit PicardRankUnsupported(const std::string& message)
        : DomainError("picard_rank_unsupported", message) {}
};

class AlphaTooLarge : public DomainError {
public:
    explicit AlphaTooLarge(const std::string& message)
        : DomainError("alpha_too_large", message) {}
};

// A certificate whose step list cannot even be replayed (wrong arity,
// unknown tags, empty sides). Carries the offending step index, or -1
// when the defect is not tied to a single step.
class MalformedCertificate : public DomainError {
public:
    MalformedCertificate(int step_index, const std::string& message)
        : DomainError("malformed_certificate", message), step_index_(step_index) {}

    int step_index() const { return step_index_; }

private:
    int step_index_;
};

}  // namespace seshadri
