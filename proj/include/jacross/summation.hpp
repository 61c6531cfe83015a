#ifndef JACROSS_SUMMATION_HPP
#define JACROSS_SUMMATION_HPP

#include <cmath>

namespace jacross {

/// Neumaier-compensated accumulator. Adding terms in a fixed order makes the
/// result reproducible bit-for-bit run to run, which the verification CSVs
/// rely on.
class CompensatedSum {
  public:
    CompensatedSum() = default;

    void add(double term) {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            comp_ += (sum_ - t) + term;
        } else {
            comp_ += (term - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace jacross

#endif
