#pragma once

#include <stdexcept>
#include <string>

namespace fracres {

/// A quadrature did not reach its tolerance. Carries the achieved estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what + " (achieved error " +
                           std::to_string(achieved_error) + ")"),
        achieved_error_(achieved_error) {}

  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace fracres
