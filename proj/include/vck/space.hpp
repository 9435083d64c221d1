#pragma once

#include <cstddef>
#include <vector>

namespace vck {

// Finite weighted point set standing for a probability space. Weights are
// strictly positive and sum to 1; construction normalizes and keeps the
// original sum around for reporting.
class DiscreteSpace {
public:
    static DiscreteSpace uniform(std::size_t n);

    const std::vector<double>& weights() const { return weights_; }
    double weight(std::size_t i) const { return weights_[i]; }
    std::size_t size() const { return weights_.size(); }
    double original_sum() const { return original_sum_; }

    bool same_weights(const DiscreteSpace& other) const;

private:
    DiscreteSpace() = default;
    friend DiscreteSpace make_space(const std::vector<double>& raw);

    std::vector<double> weights_;
    double original_sum_ = 1.0;
};

// Validates positivity/finiteness, normalizes to total mass 1.
DiscreteSpace make_space(const std::vector<double>& raw);

// Compensated sum; the plain left-to-right sum of many small weights loses
// more than the 1e-12 budget allows.
double kahan_sum(const std::vector<double>& xs);

} // namespace vck
