#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace majority {

inline constexpr int kDefaultLattice = 149;

/// Binary state of a periodic 1-D lattice. The length is odd so that the
/// majority is always defined.
class Configuration {
 public:
  explicit Configuration(std::vector<std::uint8_t> cells);
  static Configuration uniform(int size, bool value);

  int size() const { return static_cast<int>(cells_.size()); }
  bool operator[](int i) const { return cells_[static_cast<std::size_t>(i)] != 0; }
  std::span<const std::uint8_t> cells() const { return cells_; }

  int ones() const;
  double density() const { return static_cast<double>(ones()) / size(); }
  /// True when 1s are the strict majority.
  bool majority() const { return 2 * ones() > size(); }
  /// 0 or 1 when every cell holds that value, -1 otherwise.
  int uniform_value() const;

  Configuration rotated(int shift) const;
  Configuration reversed() const;
  Configuration complemented() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<std::uint8_t> cells_;
};

}  // namespace majority
