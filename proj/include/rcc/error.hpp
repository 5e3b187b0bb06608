#ifndef RCC_ERROR_HPP
#define RCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rcc {

/// Broad failure classes. The CLI maps these onto process exit codes.
enum class ErrorKind {
    InvalidParameter,  // p, k, m outside the supported range
    NotInvertible,
    ContextMismatch,   // operands built over different (p, k) or lengths
    Precondition,      // mathematical precondition violated
    CapExceeded,       // enumeration would exceed the configured limit
    Parse,             // malformed textual input
    Schema,            // structurally invalid JSON document
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) throw Error(kind, what);
}

}  // namespace rcc

#endif
