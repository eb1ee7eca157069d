#ifndef CONTACT_ERRORS_HPP
#define CONTACT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contact {

// CLI exit codes; library errors map onto these
enum ExitCode : int {
    exit_ok = 0,
    exit_parse_error = 2,
    exit_budget_exceeded = 3,
    exit_unsupported = 4,
    exit_verify_failed = 5,
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// A configured resource cap was hit; distinct from any mathematical failure.
class BudgetExceededError : public std::runtime_error {
  public:
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

class UnsupportedConfigError : public std::runtime_error {
  public:
    explicit UnsupportedConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace contact

#endif
