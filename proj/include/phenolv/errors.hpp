#ifndef PHENOLV_ERRORS_HPP
#define PHENOLV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phenolv {

// Raised for bad user input: parameters, config files, mismatched sizes.
// The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a computation fails at runtime (blow-up, solver breakdown,
// non-finite state). The CLI maps this to exit code 2.
class simulation_error : public std::runtime_error {
  public:
    explicit simulation_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace phenolv

#endif
