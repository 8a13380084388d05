#pragma once

#include <stdexcept>
#include <string>

namespace coxsol {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMatrix : public Error { using Error::Error; };
class InfiniteOrTooLarge : public Error { using Error::Error; };
class NotCoprime : public Error { using Error::Error; };
class NotASubgroup : public Error { using Error::Error; };
class CarrierMismatch : public Error { using Error::Error; };
class NotInComplement : public Error { using Error::Error; };
class SingularMatrix : public Error { using Error::Error; };
class RankGuard : public Error { using Error::Error; };
class StraighteningFailure : public Error { using Error::Error; };
class UnsupportedCase : public Error { using Error::Error; };
class PrerequisiteFailed : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class SearchExhausted : public Error { using Error::Error; };

}  // namespace coxsol
