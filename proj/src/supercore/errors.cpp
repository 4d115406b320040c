#include "superquant/errors.hpp"

namespace sq {

CriticalWeightError::CriticalWeightError(int k, int l, const Rational& delta)
    : PreconditionError("critical weight delta = " + format_rational(delta) + ": member l = " + std::to_string(l) +
                        " of the critical set of degree k = " + std::to_string(k)),
      k_(k),
      l_(l),
      delta_(delta) {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

}  // namespace sq
