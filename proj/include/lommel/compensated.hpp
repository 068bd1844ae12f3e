#pragma once

namespace lommel {

/// Neumaier's variant of Kahan summation.
///
/// Unlike plain Kahan it stays accurate when an addend is larger in
/// magnitude than the running sum, which is the normal case for the
/// alternating series summed here.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Scalar initial) : sum_(initial) {}

  CompensatedSum& operator+=(Scalar value) {
    const Scalar t = sum_ + value;
    if (magnitude(sum_) >= magnitude(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(Scalar value) { return *this += -value; }

  Scalar value() const { return sum_ + compensation_; }

 private:
  static Scalar magnitude(Scalar v) { return v < Scalar(0) ? -v : v; }

  Scalar sum_ = Scalar(0);
  Scalar compensation_ = Scalar(0);
};

}  // namespace lommel
