#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gaugekit/errors.hpp"

namespace gaugekit {

/// Young diagram: weakly decreasing positive parts. Rows and columns are
/// 0-based; box (i, j) sits in row i, column j.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) fail(errc::invalid_argument, "partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) fail(errc::invalid_argument, "partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Row length; 0 past the last row.
  int row(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  /// Column height; 0 past the first row's length.
  int column(int j) const {
    int h = 0;
    while (h < length() && parts_[static_cast<std::size_t>(h)] > j) ++h;
    return h;
  }
  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < row(0); ++j) c.push_back(column(j));
    return Partition(std::move(c));
  }

  /// Arm and leg lengths, defined for any box (possibly outside the diagram).
  int arm(int i, int j) const { return row(i) - j - 1; }
  int leg(int i, int j) const { return column(j) - i - 1; }

  friend bool operator==(const Partition&, const Partition&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// All partitions of k in reverse-lexicographic order: (k), (k-1,1), (k-2,2), ...
inline std::vector<Partition> partitions_of(int k) {
  if (k < 0) fail(errc::invalid_argument, "partitions_of needs k >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

}  // namespace gaugekit
