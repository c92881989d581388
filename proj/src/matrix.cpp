#include "gic/matrix.hpp"

namespace gic {

IntMatrix IntMatrix::identity(std::size_t order) {
    IntMatrix m(order);
    for (std::size_t i = 0; i < order; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMatrix::symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = i + 1; j < order_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool IntMatrix::zero_diagonal() const {
    for (std::size_t i = 0; i < order_; ++i)
        if (at(i, i) != 0)
            return false;
    return true;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < order_; ++i)
        t += at(i, i);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    const std::size_t n = order_;
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Int& b = rhs.at(k, j);
                if (b != 0)
                    out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

} // namespace gic
