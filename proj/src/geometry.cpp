#include "abfold/geometry.hpp"

#include "abfold/errors.hpp"

#include <fmt/core.h>

namespace abfold {

double wrap_angle(double x)
{
    if (!std::isfinite(x)) {
        throw DomainError(fmt::format("cannot wrap non-finite angle {}", x));
    }
    // Single-step rule first; it is exact for everything the optimizer produces.
    if (x <= -kPi) {
        x += kTwoPi;
    } else if (x > kPi) {
        x -= kTwoPi;
    }
    if (x > -kPi && x <= kPi) {
        return x;
    }
    double r = std::fmod(x + kPi, kTwoPi);
    if (r <= 0.0) {
        r += kTwoPi;
    }
    return r - kPi;
}

double circular_distance(double a, double b)
{
    return std::abs(wrap_angle(a - b));
}

} // namespace abfold
