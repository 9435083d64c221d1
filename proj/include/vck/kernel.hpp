#pragma once

#include <cstdint>
#include <vector>

#include "vck/space.hpp"

namespace vck {

// Dense real matrix over X x Y standing for a function of two variables.
class Kernel {
public:
    Kernel() = default;
    Kernel(int rows, int cols, double fill = 0.0);
    Kernel(int rows, int cols, std::vector<double> values);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * cols_ + j]; }
    double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<double>& values() const { return values_; }

    double max_abs() const;
    bool same_shape(const Kernel& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> values_;
};

// Boolean mask over X x Y standing for a measurable set.
class CellSet {
public:
    CellSet() = default;
    CellSet(int rows, int cols, bool fill = false);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return mask_[static_cast<std::size_t>(i) * cols_ + j] != 0; }
    void set(int i, int j, bool v) { mask_[static_cast<std::size_t>(i) * cols_ + j] = v ? 1 : 0; }

    std::size_t count() const;
    bool empty() const { return count() == 0; }

    CellSet unite(const CellSet& other) const;
    CellSet intersect(const CellSet& other) const;
    bool subset_of(const CellSet& other) const;

    const std::vector<std::uint8_t>& raw() const { return mask_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> mask_;
};

// { (i,j) : |f(i,j) - g(i,j)| > eps }, strict inequality.
CellSet level_set(const Kernel& f, const Kernel& g, double eps);

// (mu x nu)(Z)
double product_measure(const CellSet& z, const DiscreteSpace& x, const DiscreteSpace& y);

void require_shape(const Kernel& f, const DiscreteSpace& x, const DiscreteSpace& y);
void require_shape(const CellSet& z, const DiscreteSpace& x, const DiscreteSpace& y);

} // namespace vck
