#pragma once

#include "gic/polynomial.hpp"

#include <vector>

namespace gic {

/// Real roots of a monic integer polynomial, ascending, computed as the
/// eigenvalues of the companion matrix. Intended as a reporting view for
/// characteristic polynomials of symmetric matrices, whose roots are real;
/// throws std::domain_error if a root has a material imaginary part.
std::vector<double> real_roots(const Polynomial& p);

} // namespace gic
