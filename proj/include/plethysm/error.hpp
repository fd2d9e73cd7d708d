#ifndef PLETHYSM_ERROR_HPP_
#define PLETHYSM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace plethysm {

  //! Error categories shared by the C++ core and the C API.
  enum class ErrorCode : int {
    ok               = 0,
    invalid_argument = 1,
    size_cap         = 2,
    mismatch         = 3,
    parse            = 4,
    cap_too_small    = 5,
    not_factorizable = 6,
    flavor           = 7,
    law_failure      = 8,
    internal         = 9
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode c, std::string const& msg)
        : std::runtime_error(msg), _code(c) {}
    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void fail(ErrorCode c, std::string const& msg) {
    throw Error(c, msg);
  }

  inline void require(bool cond, ErrorCode c, std::string const& msg) {
    if (!cond) {
      throw Error(c, msg);
    }
  }

}  // namespace plethysm

#endif  // PLETHYSM_ERROR_HPP_
