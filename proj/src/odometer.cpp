#include "constsub/odometer.hpp"

#include <algorithm>

#include "constsub/error.hpp"

namespace constsub {

namespace {

template <typename T>
void canonicalize(std::vector<T>& pre, std::vector<T>& per) {
  std::size_t const n = per.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) {
      ok = per[i] == per[i - d];
    }
    if (ok) {
      per.resize(d);
      break;
    }
  }
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
}

}  // namespace

OdometerDigits::OdometerDigits(std::size_t base, std::vector<Digit> preperiod,
                               std::vector<Digit> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (base_ < 2) {
    throw PreconditionError("odometer base must be at least 2");
  }
  if (period_.empty()) {
    throw ValidationError("odometer digit period must be nonempty");
  }
  auto in_range = [this](Digit d) { return d < base_; };
  if (!std::all_of(preperiod_.begin(), preperiod_.end(), in_range) ||
      !std::all_of(period_.begin(), period_.end(), in_range)) {
    throw ValidationError("odometer digit out of range");
  }
  canonicalize(preperiod_, period_);
}

OdometerDigits OdometerDigits::zero(std::size_t base) { return {base, {}, {0}}; }

OdometerDigits OdometerDigits::minus_one(std::size_t base) {
  return {base, {}, {static_cast<Digit>(base - 1)}};
}

Digit OdometerDigits::digit(std::size_t i) const {
  if (i < preperiod_.size()) {
    return preperiod_[i];
  }
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::vector<Digit> OdometerDigits::prefix(std::size_t k) const {
  std::vector<Digit> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = digit(i);
  return out;
}

OdometerDigits OdometerDigits::successor() const {
  std::size_t const span = preperiod_.size() + period_.size();
  Digit const top = static_cast<Digit>(base_ - 1);
  for (std::size_t i = 0; i < span; ++i) {
    if (digit(i) != top) {
      std::size_t const start = std::max(i + 1, preperiod_.size());
      std::vector<Digit> pre = prefix(start);
      for (std::size_t j = 0; j < i; ++j) pre[j] = 0;
      pre[i] += 1;
      std::vector<Digit> per(period_.size());
      for (std::size_t j = 0; j < per.size(); ++j) per[j] = digit(start + j);
      return {base_, std::move(pre), std::move(per)};
    }
  }
  return zero(base_);
}

bool OdometerDigits::is_eventually_zero() const {
  return std::all_of(period_.begin(), period_.end(), [](Digit d) { return d == 0; });
}

bool OdometerDigits::is_eventually_max() const {
  return std::all_of(period_.begin(), period_.end(),
                     [this](Digit d) { return d + 1 == base_; });
}

std::string OdometerDigits::to_string() const {
  std::string out;
  for (Digit d : preperiod_) out += std::to_string(d) + " ";
  out += "(";
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(period_[i]);
  }
  out += ")^inf";
  return out;
}

std::vector<Digit> odometer_successor(std::vector<Digit> digits, std::size_t base) {
  for (Digit& d : digits) {
    if (d + 1 < base) {
      ++d;
      return digits;
    }
    d = 0;
  }
  return digits;
}

}  // namespace constsub
