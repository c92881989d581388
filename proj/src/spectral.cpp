#include "gic/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gic {

std::vector<double> real_roots(const Polynomial& p) {
    if (!p.monic())
        throw std::domain_error("real_roots expects a monic polynomial");
    const std::size_t n = p.degree();
    if (n == 0)
        return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
    const auto& coeffs = p.coefficients();
    for (std::size_t i = 1; i < n; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        // last column holds -a_i for p = x^n + a_{n-1}x^{n-1} + ... + a_0
        const double a = coeffs[n - i].convert_to<double>();
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -a;
    }
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    std::vector<double> roots;
    roots.reserve(n);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const auto z = solver.eigenvalues()[i];
        if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z.real())))
            throw std::domain_error("polynomial has a root with a material imaginary part");
        roots.push_back(z.real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace gic
