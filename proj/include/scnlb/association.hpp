#pragma once

#include <span>
#include <vector>

namespace scnlb {

/// The association matrix eta: one row per traffic point, one column per
/// base station. Rows are convex weights (sum to one); final answers are
/// one-hot rows. Stored flat, row-major.
class Association {
 public:
  Association() = default;
  Association(int num_points, int num_bs)
      : num_points_(num_points), num_bs_(num_bs),
        values_(static_cast<size_t>(num_points) * num_bs, 0.0) {}

  static Association one_hot(const std::vector<int>& choice, int num_bs);

  int num_points() const { return num_points_; }
  int num_bs() const { return num_bs_; }

  double at(int point, int bs) const { return values_[idx(point, bs)]; }
  double& at(int point, int bs) { return values_[idx(point, bs)]; }
  std::span<const double> row(int point) const {
    return {values_.data() + idx(point, 0), static_cast<size_t>(num_bs_)};
  }

  bool is_row_stochastic(double tol = 1e-9) const;
  bool is_binary() const;

  /// Index of the serving station of a one-hot row, -1 if the row is not
  /// one-hot.
  int assigned_bs(int point) const;

  double max_abs_diff(const Association& other) const;

  bool operator==(const Association&) const = default;

  const std::vector<double>& values() const { return values_; }

 private:
  size_t idx(int point, int bs) const { return static_cast<size_t>(point) * num_bs_ + bs; }

  int num_points_ = 0;
  int num_bs_ = 0;
  std::vector<double> values_;
};

}  // namespace scnlb
