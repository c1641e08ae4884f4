#ifndef SYNROUGH_ERROR_HPP
#define SYNROUGH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace synrough
{

// Three failure classes, mapped onto CLI exit codes 2/3/4 by the tool.

/// Bad arguments or configuration supplied by the caller.
class UsageError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input data that cannot be processed (unreadable files, degenerate fields).
class InputError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A numerical invariant that should hold by construction did not.
class InvariantError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace synrough

#endif // SYNROUGH_ERROR_HPP
