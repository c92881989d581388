#pragma once

#include "gic/matrix.hpp"

#include <string>
#include <vector>

namespace gic {

/// Integer polynomial, coefficients stored highest degree first.
class Polynomial {
public:
    explicit Polynomial(std::vector<Int> coefficients);

    const std::vector<Int>& coefficients() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    bool monic() const { return coeffs_.front() == 1; }

    /// Horner evaluation with the scalar replaced by a square matrix.
    IntMatrix evaluate(const IntMatrix& m) const;

    /// Space-separated coefficient list, highest degree first.
    std::string str() const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Int> coeffs_;
};

/// det(lambda*I - m) by the Faddeev-LeVerrier recursion; every division by the
/// step index is exact over the integers. The result is monic of degree order().
Polynomial char_poly(const IntMatrix& m);

} // namespace gic
