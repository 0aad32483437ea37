#ifndef DQW_ERROR_HPP
#define DQW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dqw {

/// Bad input: dimension mismatch, malformed data, out-of-range index.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction did not. Indicates a bug or an
/// invalid input star product; the message carries a witness.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input to the coboundary solver violates its preconditions.
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(const std::string& what, std::string witness)
      : std::invalid_argument(what + ": " + witness), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// The coboundary solver found no solution within its configured bounds.
class solver_exhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dqw

#endif  // DQW_ERROR_HPP
