#pragma once

#include <stdexcept>
#include <string>

namespace flipwidth {

// Precondition or argument violations (bad vertex id, bad order, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input text. `where` carries a byte offset or field name.
struct parse_error : std::runtime_error {
    std::string where;
    parse_error(const std::string& msg, std::string where_ = {})
        : std::runtime_error(where_.empty() ? msg : msg + " (at " + where_ + ")"),
          where(std::move(where_)) {}
};

// A caller violated a documented contract between operations.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A game strategy produced an illegal move. `offender` is "cop" or "robber".
struct strategy_fault : std::runtime_error {
    std::string offender;
    strategy_fault(std::string offender_, const std::string& msg)
        : std::runtime_error(offender_ + ": " + msg), offender(std::move(offender_)) {}
};

// Instance exceeds the configured exhaustive-search budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A geometric generator failed to realize its target structure.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace flipwidth
