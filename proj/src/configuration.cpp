#include "majority/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace majority {

Configuration::Configuration(std::vector<std::uint8_t> cells) : cells_(std::move(cells)) {
  if (cells_.size() % 2 == 0) {
    throw std::invalid_argument("lattice size must be odd, got " + std::to_string(cells_.size()));
  }
  for (auto& c : cells_) c = c ? 1 : 0;
}

Configuration Configuration::uniform(int size, bool value) {
  return Configuration(std::vector<std::uint8_t>(static_cast<std::size_t>(size), value ? 1 : 0));
}

int Configuration::ones() const {
  return std::accumulate(cells_.begin(), cells_.end(), 0);
}

int Configuration::uniform_value() const {
  const int k = ones();
  if (k == 0) return 0;
  if (k == size()) return 1;
  return -1;
}

Configuration Configuration::rotated(int shift) const {
  const int n = size();
  std::vector<std::uint8_t> out(cells_.size());
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(((i + shift) % n + n) % n)] = cells_[static_cast<std::size_t>(i)];
  return Configuration(std::move(out));
}

Configuration Configuration::reversed() const {
  std::vector<std::uint8_t> out(cells_.rbegin(), cells_.rend());
  return Configuration(std::move(out));
}

Configuration Configuration::complemented() const {
  std::vector<std::uint8_t> out(cells_);
  for (auto& c : out) c ^= 1;
  return Configuration(std::move(out));
}

}  // namespace majority
