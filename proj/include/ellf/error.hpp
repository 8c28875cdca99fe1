#pragma once

#include <stdexcept>
#include <string>

namespace ellf {

// Error codes surfaced by the library.  The CLI maps these to
// machine-readable JSON; tests match on the code.
enum class Errc {
    ConductorTooSmall,
    SizeOverflow,
    ZeroDivisorInverse,
    DivisionByZero,
    PoleAtPoint,
    DivisionByZeroPoly,
    BadOrder,
    NotMultiplicative,
    ZeroArgument,
    FormalLambda,
    ZeroDilation,
    SupportContainsZero,
    UnramifiedCharacter,
    BadParameter,
    PreconditionViolated,
    NotSchwartz,
    DenominatorDivisibleByP,
    PrecisionInconclusive,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ellf
