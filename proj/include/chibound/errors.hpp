#ifndef CHIBOUND_ERRORS_HPP
#define CHIBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chibound {

enum class Errc {
    InvalidSet,            // vertex set refers to vertices outside the graph
    InvalidArgument,
    InvalidTriangle,       // triple passed as a triangle does not induce K3
    InvalidConfiguration,  // operation preconditions on vertices violated
    InvalidColoring,       // partial or malformed coloring
    UnsupportedSize,       // graph too large for the requested exact path
    UnknownName,
    Parse,                 // malformed graph6 input
    ClassViolation,        // input is not in the required hereditary class
    HypothesisViolation,   // a stated hypothesis of a coloring claim fails
    GenerationFailure,     // repair budget exhausted
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace chibound

#endif
