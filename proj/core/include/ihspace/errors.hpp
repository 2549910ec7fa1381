#ifndef IHSPACE_ERRORS_HPP
#define IHSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ihs {

/// A vertex tuple repeats a vertex or uses a negative id.
class MalformedSimplexError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A value is requested outside the domain where it is defined
/// (e.g. a perversity at a codimension it does not cover).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Unknown catalog name.
class LookupError : public std::out_of_range
{
  public:
    using std::out_of_range::out_of_range;
};

/// Text or JSON input that does not follow its file format.
class ParseError : public std::runtime_error
{
  public:
    ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line)
    {
    }

    /// 1-based line number, 0 when not applicable.
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace ihs

#endif
