#ifndef LBRW_ERROR_HPP
#define LBRW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lbrw {

// Error taxonomy shared by all modules. Codes map 1:1 to CLI exit codes
// (see tools/lbrw_main.cpp) and to the machine-readable error record.
enum class ErrorCode {
    AsymmetricKernel = 10,
    NotStochastic,
    Periodic,
    EmptyKernel,
    RangeError,
    NonpositiveGrowth,
    IntensityOverflow,
    MemoryBudgetExceeded,
    NoAncestorMass,
    OccupancyViolation,
    InfeasibleGeometry,
    DomainError,
    MissingDecomposition,
    BudgetExceeded,
    NonConvergence,
    ParseError,
    UnknownKey,
    IoError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace lbrw

#endif
