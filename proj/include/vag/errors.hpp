#ifndef VAG_ERRORS_HPP_
#define VAG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vag {

  // Malformed graph files, words, or subsets.
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An operation was called outside its domain (e.g. Garside normal form on a
  // non-spherical graph).
  class PreconditionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // A word problem was reached whose base case has no registered solver.
  // The stage string names where in the recursion this happened.
  class UnsupportedError : public std::runtime_error {
   public:
    UnsupportedError(std::string stage, std::string const& what)
        : std::runtime_error(what), stage_(std::move(stage)) {}

    std::string const& stage() const noexcept {
      return stage_;
    }

   private:
    std::string stage_;
  };

  // Raised in strict mode when a hat-graph label could not be decided within
  // the configured search bound.
  class InconclusiveError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The M-operation oracle exceeded its length or closure cap.
  class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace vag

#endif  // VAG_ERRORS_HPP_
