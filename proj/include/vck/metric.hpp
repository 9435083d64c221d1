#pragma once

#include <string>
#include <vector>

#include "vck/kernel.hpp"

namespace vck {

struct MetricViolation {
    enum class Kind { not_square, non_finite, negative, diagonal, asymmetry, triangle };
    Kind kind;
    int i = -1, j = -1, k = -1;
    double amount = 0.0;

    std::string describe() const;
};

// Empty iff the matrix is a semimetric within tolerance 1e-12: symmetric,
// nonnegative, zero diagonal, triangle inequality. Off-diagonal zeros are
// allowed (semimetrics).
std::vector<MetricViolation> validate_metric(const Kernel& values);

// Square symmetric matrix with validated semimetric axioms.
class MetricMatrix {
public:
    static MetricMatrix checked(Kernel values); // throws ValidationError

    int size() const { return values_.rows(); }
    double at(int i, int j) const { return values_.at(i, j); }
    const Kernel& values() const { return values_; }

private:
    explicit MetricMatrix(Kernel values) : values_(std::move(values)) {}
    Kernel values_;
};

} // namespace vck
