#include "vnca/periodic_config.hpp"

#include <numeric>
#include <stdexcept>

namespace vnca {

PeriodicConfig::PeriodicConfig(unsigned alphabet, std::vector<std::uint8_t> cells)
    : alphabet_(alphabet), cells_(std::move(cells)) {
  if (alphabet_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (cells_.empty()) throw std::invalid_argument("period must be at least 1");
  for (std::uint8_t c : cells_) {
    if (c >= alphabet_) throw std::invalid_argument("cell symbol out of range");
  }
}

PeriodicConfig PeriodicConfig::constant(unsigned alphabet, std::uint8_t symbol,
                                        std::size_t period) {
  if (period == 0) throw std::invalid_argument("period must be at least 1");
  return PeriodicConfig(alphabet, std::vector<std::uint8_t>(period, symbol));
}

PeriodicConfig PeriodicConfig::from_string(unsigned alphabet, std::string_view digits) {
  if (alphabet > 10) throw std::invalid_argument("digit strings require alphabet <= 10");
  std::vector<std::uint8_t> cells;
  cells.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid cell digit");
    cells.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return PeriodicConfig(alphabet, std::move(cells));
}

std::string PeriodicConfig::to_string() const {
  if (alphabet_ > 10) throw std::logic_error("digit strings require alphabet <= 10");
  std::string out;
  out.reserve(cells_.size());
  for (std::uint8_t c : cells_) out.push_back(static_cast<char>('0' + c));
  return out;
}

std::size_t least_period(const PeriodicConfig& x) {
  const auto& cells = x.cells();
  const std::size_t p = cells.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = cells[i] == cells[i % d];
    if (ok) return d;
  }
  return p;  // unreachable, d = p always matches
}

bool same_configuration(const PeriodicConfig& a, const PeriodicConfig& b) {
  if (a.alphabet() != b.alphabet()) return false;
  const std::size_t l = std::lcm(a.period(), b.period());
  for (std::size_t i = 0; i < l; ++i) {
    if (a.cell(static_cast<long long>(i)) != b.cell(static_cast<long long>(i))) return false;
  }
  return true;
}

}  // namespace vnca
