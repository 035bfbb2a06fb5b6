#ifndef SYMNORM_ERRORS_HPP
#define SYMNORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symnorm {

// Error categories mirrored one-to-one by the C API status codes.
enum class ErrorCode {
    InvalidArgument,  // malformed input: bad dimension, non-finite entries, bad parameter
    Precondition,     // structural precondition violated (non-normal, non-expansive, ...)
    Domain,           // function evaluation outside its domain
    Parse,            // unparsable literal (matrix JSON, norm selector, function spec)
    UnknownId,        // unregistered check or search target
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace symnorm

#endif
