#ifndef DIHEDRAL_ERRORS_HPP_
#define DIHEDRAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dihedral {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Bad input: surfaced by the CLI as exit code 2.
  class InvalidN : public Error {
   public:
    using Error::Error;
  };

  class InvalidK : public Error {
   public:
    using Error::Error;
  };

  class InvalidWord : public Error {
   public:
    using Error::Error;
  };

  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class Inconclusive : public Error {
   public:
    using Error::Error;
  };

  class UnknownSuite : public Error {
   public:
    using Error::Error;
  };

  class StateLimitExceeded : public Error {
   public:
    using Error::Error;
  };

  class NotNormalForm : public Error {
   public:
    using Error::Error;
  };

  // Internal consistency failures. These indicate a bug, not bad input.
  class StructureViolation : public Error {
   public:
    using Error::Error;
  };

  class RuleMismatch : public Error {
   public:
    using Error::Error;
  };

  class NonDecreasingStep : public Error {
   public:
    using Error::Error;
  };

}  // namespace dihedral

#endif  // DIHEDRAL_ERRORS_HPP_
