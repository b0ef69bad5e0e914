#pragma once

#include <stdexcept>
#include <string>

namespace emu {

/// Malformed input file (bad JSON, wrong field types). Message carries the position.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that breaks a named domain invariant.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A train-set whose feasible path set is empty.
class UnschedulableError : public std::runtime_error {
public:
    UnschedulableError(std::string train_set_id, const std::string& what)
        : std::runtime_error(what), train_set_id_(std::move(train_set_id)) {}

    [[nodiscard]] const std::string& train_set_id() const { return train_set_id_; }

private:
    std::string train_set_id_;
};

/// Exhaustive search refused because the combination count exceeds the budget.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace emu
