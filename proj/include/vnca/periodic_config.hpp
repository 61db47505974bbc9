#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vnca {

/// A spatially periodic configuration of the full line, stored as one period
/// of cells.  The stored period is kept as given (it is part of the value);
/// least_period() computes the reduction.  Cell indices are arbitrary
/// integers and wrap around the stored period.
class PeriodicConfig {
public:
  PeriodicConfig(unsigned alphabet, std::vector<std::uint8_t> cells);

  static PeriodicConfig constant(unsigned alphabet, std::uint8_t symbol,
                                 std::size_t period = 1);
  /// Cells as a digit string, e.g. "0110".  Alphabet at most 10.
  static PeriodicConfig from_string(unsigned alphabet, std::string_view digits);

  unsigned alphabet() const { return alphabet_; }
  std::size_t period() const { return cells_.size(); }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  std::uint8_t cell(long long index) const {
    const long long p = static_cast<long long>(cells_.size());
    long long r = index % p;
    if (r < 0) r += p;
    return cells_[static_cast<std::size_t>(r)];
  }

  std::string to_string() const;

  bool operator==(const PeriodicConfig&) const = default;

private:
  unsigned alphabet_;
  std::vector<std::uint8_t> cells_;
};

/// Smallest d >= 1 such that the configuration is d-periodic; divides the
/// stored period.
std::size_t least_period(const PeriodicConfig& x);

/// Equality as bi-infinite configurations (stored periods may differ).
bool same_configuration(const PeriodicConfig& a, const PeriodicConfig& b);

}  // namespace vnca
