#pragma once

#include <stdexcept>
#include <string>

namespace tcc {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorKind {
    BadInput,    // malformed input, unparsable data, wrong sizes
    Validation,  // data parsed fine but violates a mathematical precondition
    Degenerate,  // Reeb data hit an exact-integer floor argument
    Internal,    // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error bad_input(const std::string& msg) { return Error(ErrorKind::BadInput, msg); }
inline Error validation_error(const std::string& msg) { return Error(ErrorKind::Validation, msg); }
inline Error degenerate_error(const std::string& msg) { return Error(ErrorKind::Degenerate, msg); }
inline Error internal_error(const std::string& msg) { return Error(ErrorKind::Internal, msg); }

}  // namespace tcc
