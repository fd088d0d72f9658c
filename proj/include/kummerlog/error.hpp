#ifndef KUMMERLOG_ERROR_HPP
#define KUMMERLOG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kummerlog {

/* Error categories. The numeric values double as CLI exit codes. */
enum class ErrorCode : int {
    parse = 2,
    invalid_input = 3,       // mathematically invalid input (singular curve, zero element, ...)
    unsupported = 4,         // outside the implemented scope (search budget, reduction type, ...)
    internal_consistency = 5 // two independent computations disagree
};

class Error : public std::runtime_error {
    ErrorCode code_;
    std::string kind_;

  public:
    Error(ErrorCode code, std::string kind, std::string const& what)
        : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}

    ErrorCode code() const noexcept { return code_; }
    /* short machine-readable tag, e.g. "bound_exceeded" */
    std::string const& kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }
};

class ParseError : public Error {
    std::size_t pos_;

  public:
    ParseError(std::string const& what, std::size_t pos)
        : Error(ErrorCode::parse, "parse_error",
                what + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }
};

inline Error invalid_input(std::string kind, std::string const& what)
{
    return Error(ErrorCode::invalid_input, std::move(kind), what);
}

inline Error unsupported(std::string kind, std::string const& what)
{
    return Error(ErrorCode::unsupported, std::move(kind), what);
}

inline Error consistency_failure(std::string kind, std::string const& what)
{
    return Error(ErrorCode::internal_consistency, std::move(kind), what);
}

} // namespace kummerlog

#endif
