#pragma once

#include <stdexcept>
#include <string>

namespace preisach {

// Raised when a caller violates a documented precondition (invalid
// thresholds, non-finite input, mismatched array lengths, ...).
class contract_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Configuration documents that fail to parse or validate. `field` is a
// dotted path such as "model.levels", empty when the error is positional.
class config_error : public std::runtime_error {
public:
    config_error(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace preisach
