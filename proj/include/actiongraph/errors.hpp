#ifndef ACTIONGRAPH_ERRORS_HPP
#define ACTIONGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actiongraph {

/**
 * Thrown when a requested generation or edge count exceeds the configured
 * guard. Construction cost grows roughly fourfold per generation, so the
 * guards exist to fail before memory does.
 */
class GuardExceededError : public std::runtime_error {
public:
    GuardExceededError(std::size_t requested, std::size_t limit, const std::string& what_arg)
        : std::runtime_error(what_arg), requested_(requested), limit_(limit) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

/** Rejection of a malformed Dyck word, carrying the offending position. */
class DyckParseError : public std::runtime_error {
public:
    enum class Kind {
        IllegalCharacter,  // anything other than '(' or ')'
        NegativeBalance,   // ')' with no matching open '('
        UnbalancedFinal    // word ends with unclosed '('
    };

    DyckParseError(Kind kind, std::size_t position, const std::string& what_arg)
        : std::runtime_error(what_arg), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }

    // Zero-based index into the input; for UnbalancedFinal this is the word length.
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

}  // namespace actiongraph

#endif  // ACTIONGRAPH_ERRORS_HPP
