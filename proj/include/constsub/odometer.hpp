// Eventually periodic elements of the p-odometer, least significant digit
// first: delta = (delta_0, delta_1, ...) stands for sum delta_i p^i.

#ifndef CONSTSUB_ODOMETER_HPP_
#define CONSTSUB_ODOMETER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace constsub {

using Digit = std::uint32_t;

class OdometerDigits {
 public:
  /// Validates digit range and a nonempty period, then reduces to the
  /// canonical form (minimal period, then minimal preperiod).
  OdometerDigits(std::size_t base, std::vector<Digit> preperiod, std::vector<Digit> period);

  [[nodiscard]] static OdometerDigits zero(std::size_t base);
  /// -1, i.e. every digit p-1.
  [[nodiscard]] static OdometerDigits minus_one(std::size_t base);

  [[nodiscard]] std::size_t base() const noexcept { return base_; }
  [[nodiscard]] std::vector<Digit> const& preperiod() const noexcept { return preperiod_; }
  [[nodiscard]] std::vector<Digit> const& period() const noexcept { return period_; }

  [[nodiscard]] Digit digit(std::size_t i) const;
  [[nodiscard]] std::vector<Digit> prefix(std::size_t k) const;

  /// delta + 1 with the carry running to the right.
  [[nodiscard]] OdometerDigits successor() const;

  /// Periodic part all zeros (a non-negative integer).
  [[nodiscard]] bool is_eventually_zero() const;
  /// Periodic part all p-1 (a negative integer).
  [[nodiscard]] bool is_eventually_max() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(OdometerDigits const&, OdometerDigits const&) = default;

 private:
  std::size_t        base_;
  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

/// Successor on a finite digit prefix; the carry out of the last digit is
/// dropped (arithmetic in Z / p^k Z).
[[nodiscard]] std::vector<Digit> odometer_successor(std::vector<Digit> digits,
                                                    std::size_t base);

}  // namespace constsub

#endif  // CONSTSUB_ODOMETER_HPP_
