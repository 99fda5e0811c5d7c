#pragma once

#include <cmath>

namespace cgas {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Double-double accumulator built on error-free TwoSum; roughly 32
// significant digits for sums of doubles.
class DoubleDoubleSum {
 public:
  void add(double x) {
    double s, e;
    two_sum(hi_, x, s, e);
    e += lo_;
    fast_two_sum(s, e, hi_, lo_);
  }
  DoubleDoubleSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return hi_ + lo_; }
  double hi() const { return hi_; }
  double lo() const { return lo_; }

 private:
  static void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
  }
  static void fast_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
  }
  double hi_ = 0.0;
  double lo_ = 0.0;
};

}  // namespace cgas
