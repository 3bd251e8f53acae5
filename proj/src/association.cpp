#include "scnlb/association.hpp"

#include <cmath>
#include <stdexcept>

namespace scnlb {

Association Association::one_hot(const std::vector<int>& choice, int num_bs) {
  Association a(static_cast<int>(choice.size()), num_bs);
  for (size_t p = 0; p < choice.size(); ++p) {
    int b = choice[p];
    if (b < 0 || b >= num_bs) throw std::out_of_range("one_hot: station index out of range");
    a.at(static_cast<int>(p), b) = 1.0;
  }
  return a;
}

bool Association::is_row_stochastic(double tol) const {
  for (int p = 0; p < num_points_; ++p) {
    double sum = 0.0;
    for (int b = 0; b < num_bs_; ++b) {
      double v = at(p, b);
      if (v < -tol || v > 1.0 + tol) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

bool Association::is_binary() const {
  for (double v : values_)
    if (v != 0.0 && v != 1.0) return false;
  return true;
}

int Association::assigned_bs(int point) const {
  int found = -1;
  for (int b = 0; b < num_bs_; ++b) {
    double v = at(point, b);
    if (v == 1.0) {
      if (found >= 0) return -1;
      found = b;
    } else if (v != 0.0) {
      return -1;
    }
  }
  return found;
}

double Association::max_abs_diff(const Association& other) const {
  if (other.values_.size() != values_.size())
    throw std::invalid_argument("association dimensions differ");
  double m = 0.0;
  for (size_t i = 0; i < values_.size(); ++i)
    m = std::max(m, std::abs(values_[i] - other.values_[i]));
  return m;
}

}  // namespace scnlb
