#pragma once

#include <stdexcept>
#include <string>

namespace xling {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input/output and file-format failures (CLI exit code 2).
class io_error : public error {
public:
    using error::error;
};

// Numeric failures and violated preconditions (CLI exit code 3).
class numeric_error : public error {
public:
    using error::error;
};

} // namespace xling
