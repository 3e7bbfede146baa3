#include "bellkit/spin.hpp"

#include <cmath>

namespace bellkit {

Spin Spin::from_j(double j) {
    const double twice = 2.0 * j;
    const double rounded = std::round(twice);
    if (!(std::abs(twice - rounded) < 1e-9))
        throw std::domain_error("Spin: j must be a half-integer");
    return Spin(static_cast<int>(rounded));
}

}  // namespace bellkit
