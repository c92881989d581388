#include "gic/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gic {

Polynomial::Polynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty())
        throw std::invalid_argument("polynomial needs at least one coefficient");
}

IntMatrix Polynomial::evaluate(const IntMatrix& m) const {
    const std::size_t n = m.order();
    IntMatrix acc(n);
    for (const Int& c : coeffs_) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i)
            acc.at(i, i) += c;
    }
    return acc;
}

std::string Polynomial::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out << ' ';
        out << coeffs_[i].str();
    }
    return out.str();
}

Polynomial char_poly(const IntMatrix& m) {
    const std::size_t n = m.order();
    std::vector<Int> coeffs(n + 1);
    coeffs[0] = 1;

    IntMatrix work(n); // zero
    Int c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            work.at(i, i) += c;
        work = m * work;
        Int t = work.trace();
        Int q, r;
        boost::multiprecision::divide_qr(-t, Int(k), q, r);
        if (r != 0)
            throw std::logic_error("char_poly: trace division left a remainder");
        c = q;
        coeffs[k] = c;
    }
    return Polynomial(std::move(coeffs));
}

} // namespace gic
