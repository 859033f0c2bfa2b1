#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "twlayout/int128.hpp"
#include "twlayout/track_layout.hpp"

namespace twlayout {

/// Positive or negative fraction num/den kept in lowest terms with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  std::int64_t floor() const;
  std::int64_t ceil() const;
  bool positive() const { return num > 0; }
  std::string str() const;
  auto operator<=>(const Rational& o) const {
    return static_cast<Int128>(num) * o.den <=> static_cast<Int128>(o.num) * den;
  }
  bool operator==(const Rational&) const = default;
};

/// Accepts "7", "7/3" or a terminating decimal such as "2.5".
Rational parse_rational(std::string_view text);

/// Merges tracks whose numbers agree modulo 2s+1, s being the maximum span.
/// Track order inside a merged track follows increasing track number.
TrackLayout wrap(const Graph& g, const TrackLayout& layout, std::span<const int> numbering = {});
TrackLayout wrap_modulo(const TrackLayout& layout, int modulus, std::span<const int> numbering = {});

/// Splits every track into consecutive blocks of at most ceil(n/t') vertices.
TrackLayout balance(const TrackLayout& layout, Rational t_prime);
std::int64_t balance_cap(std::size_t n, Rational t_prime);

/// Moves every second vertex of each track onto a twin track placed right
/// after it. Proper layouts are returned unchanged.
TrackLayout improper_to_proper(const TrackLayout& layout);

}  // namespace twlayout
