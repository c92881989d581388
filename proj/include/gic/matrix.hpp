#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace gic {

using Int = boost::multiprecision::cpp_int;

/// Square matrix of exact arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    static IntMatrix identity(std::size_t order);

    std::size_t order() const { return order_; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

    bool symmetric() const;
    bool zero_diagonal() const;
    Int trace() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<Int> entries_;
};

} // namespace gic
