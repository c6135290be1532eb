#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace wsep {

// Angular momenta and projections stored exactly as twice their physical
// value, so j=1/2 has twice_value 1 and m=-1 has twice_value -2. Keeps
// selection rules free of float comparisons.
struct HalfInteger {
  int twice_value = 0;

  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int twice) : twice_value(twice) {}

  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger whole(int n) { return HalfInteger(2 * n); }

  constexpr double value() const { return 0.5 * twice_value; }
  constexpr bool is_integer() const { return twice_value % 2 == 0; }

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_value); }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_value + b.twice_value);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_value - b.twice_value);
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  // "2", "3/2" style; exact.
  std::string str() const;
  // Accepts "3/2", "-1/2", "2", "1.5", "0.5". Empty optional on anything else.
  static std::optional<HalfInteger> parse(std::string_view text);
};

constexpr bool is_valid_j(HalfInteger j) { return j.twice_value >= 0; }

// |m| <= j with j - m integral.
constexpr bool is_projection_of(HalfInteger j, HalfInteger m) {
  const int a = m.twice_value < 0 ? -m.twice_value : m.twice_value;
  return a <= j.twice_value && (j.twice_value - m.twice_value) % 2 == 0;
}

// d = 2j + 1
constexpr int dimension(HalfInteger j) { return j.twice_value + 1; }

// row/column index i corresponds to m = j - i (index 0 is m = j).
constexpr HalfInteger projection_at(HalfInteger j, int index) {
  return HalfInteger(j.twice_value - 2 * index);
}

}  // namespace wsep
