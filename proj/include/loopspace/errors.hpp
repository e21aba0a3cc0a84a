#ifndef LOOPSPACE_ERRORS_HPP
#define LOOPSPACE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loopspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyWedge : public Error {
public:
    EmptyWedge() : Error("wedge must contain at least one sphere") {}
};

class NonSimplyConnected : public Error {
public:
    explicit NonSimplyConnected(int dim)
        : Error("sphere dimension " + std::to_string(dim) +
                " < 2: the wedge is not simply connected") {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

// Raised when a divisor-sum formula fails to divide exactly. Never expected.
class NonIntegerResult : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(int degree, std::string words, std::uint64_t budget)
        : Error("degree " + std::to_string(degree) + " has " + words +
                " basis words, over the budget of " + std::to_string(budget)),
          degree_(degree) {}

    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

} // namespace loopspace

#endif
