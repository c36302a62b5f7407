#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace syzex {

enum class ErrorCode {
    InvalidSpec,
    NonHomogeneousRelation,
    NonParallelRelation,
    NotFiniteDimensional,
    InvalidModule,
    AlgebraMismatch,
    BudgetExceeded,
    ContradictoryFacts,
    UnknownCorpusId,
};

const char* to_string(ErrorCode code);

class SyzexError : public std::runtime_error {
public:
    SyzexError(ErrorCode code, const std::string& what, std::vector<std::string> details = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), details_(std::move(details))
    {
    }

    ErrorCode code() const { return code_; }
    const std::vector<std::string>& details() const { return details_; }

private:
    ErrorCode code_;
    std::vector<std::string> details_;
};

} // namespace syzex
