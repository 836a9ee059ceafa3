#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace td {

// Exact rational epsilon, 0 < num/den < 1/6. All threshold comparisons the
// solver makes are integer cross-multiplications; epsilon never touches
// floating point, so strict-vs-nonstrict boundaries behave exactly.
struct Epsilon {
  uint32_t num = 1;
  uint32_t den = 10;

  Epsilon() = default;

  Epsilon(uint32_t n, uint32_t d) : num(n), den(d) {
    if (num == 0 || den == 0 || 6ull * num >= den)
      throw std::invalid_argument("epsilon must satisfy 0 < num/den < 1/6, got " +
                                  std::to_string(n) + "/" + std::to_string(d));
  }

  static Epsilon parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
      throw std::invalid_argument("epsilon must be of the form num/den");
    try {
      unsigned long n = std::stoul(std::string(s.substr(0, slash)));
      unsigned long d = std::stoul(std::string(s.substr(slash + 1)));
      return Epsilon(static_cast<uint32_t>(n), static_cast<uint32_t>(d));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("epsilon must be of the form num/den");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("epsilon out of range");
    }
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  // card <= (1/2 - eps) * n
  bool le_half_minus_eps(uint64_t card, uint32_t n) const {
    return 2 * uint64_t{den} * card <= uint64_t(den - 2 * num) * n;
  }

  // floor((1/2 - eps) * n); equivalent to le_half_minus_eps for integers.
  uint32_t half_minus_eps_floor(uint32_t n) const {
    return static_cast<uint32_t>(uint64_t(den - 2 * num) * n / (2 * uint64_t{den}));
  }

  // card < 2 * eps * n
  bool lt_two_eps(uint64_t card, uint32_t n) const {
    return uint64_t{den} * card < 2 * uint64_t{num} * n;
  }

  // a + b < (1/2 + eps) * n
  bool sum_lt_half_plus_eps(uint64_t a, uint64_t b, uint32_t n) const {
    return 2 * uint64_t{den} * (a + b) < uint64_t(den + 2 * num) * n;
  }

  // y < (1/4 + 3*eps/2) * n
  bool lt_quarter_plus_3eps_half(uint64_t y, uint32_t n) const {
    return 4 * uint64_t{den} * y < uint64_t(den + 6 * num) * n;
  }

  bool operator==(const Epsilon& o) const { return num == o.num && den == o.den; }
};

}  // namespace td
