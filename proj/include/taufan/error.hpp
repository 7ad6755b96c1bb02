#pragma once

#include <stdexcept>
#include <string>

namespace taufan {

enum class ErrorKind {
    Parse,
    Usage,
    Budget,
    Inconsistency,
    Unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string module, const std::string& message)
        : std::runtime_error(message), kind_(kind), module_(std::move(module)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& module() const { return module_; }

private:
    ErrorKind kind_;
    std::string module_;
};

class ParseError : public Error {
public:
    ParseError(std::string module, int line, int column, const std::string& message)
        : Error(ErrorKind::Parse, std::move(module),
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

inline Error budget_error(const std::string& module, const std::string& message)
{
    return Error(ErrorKind::Budget, module, message);
}

inline Error inconsistency(const std::string& module, const std::string& message)
{
    return Error(ErrorKind::Inconsistency, module, message);
}

inline Error usage_error(const std::string& module, const std::string& message)
{
    return Error(ErrorKind::Usage, module, message);
}

}  // namespace taufan
