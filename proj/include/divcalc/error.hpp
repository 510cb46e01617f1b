#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divcalc {

/// Base error for every engine failure. `code()` is a stable machine-readable
/// tag ("not-big", "dimension-mismatch", ...) that the CLI echoes verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct Issue {
    std::string code;
    std::string message;
};

/// Raised by model validation; carries every violated invariant, not just the first.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Issue> issues)
        : Error("validation", summarize(issues)), issues_(std::move(issues)) {}

    const std::vector<Issue>& issues() const noexcept { return issues_; }

private:
    static std::string summarize(const std::vector<Issue>& issues) {
        std::string out = "model validation failed:";
        for (const auto& i : issues) out += " [" + i.code + "] " + i.message + ";";
        return out;
    }

    std::vector<Issue> issues_;
};

}  // namespace divcalc
