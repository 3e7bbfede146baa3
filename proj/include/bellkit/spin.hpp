#pragma once

#include <stdexcept>

namespace bellkit {

// Angular momentum label j, stored as 2j so half-integer spins stay exact.
// Canonical basis ordering is |k> = |j, j-k+1>, k = 1..2j+1, i.e. row 1
// carries m = +j and the last row m = -j.
class Spin {
public:
    static constexpr int kMaxTwiceJ = 60;

    explicit Spin(int twice_j) : twice_j_(twice_j) {
        if (twice_j < 0) throw std::domain_error("Spin: 2j must be non-negative");
        if (twice_j > kMaxTwiceJ)
            throw std::domain_error("Spin: 2j > 60 rejected (factorial prefactors overflow)");
    }

    // j given as a value; must be a non-negative half-integer.
    static Spin from_j(double j);

    int twice_j() const { return twice_j_; }
    double j() const { return 0.5 * twice_j_; }
    int dim() const { return twice_j_ + 1; }

    // m quantum number of the canonical basis state |k>, 1-based k.
    double m_of(int k) const { return 0.5 * twice_j_ - (k - 1); }

    bool operator==(const Spin&) const = default;

private:
    int twice_j_;
};

}  // namespace bellkit
