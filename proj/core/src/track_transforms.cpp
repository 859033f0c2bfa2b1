#include "twlayout/track_transforms.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "twlayout/error.hpp"

namespace twlayout {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw LayoutError(ErrorKind::BadParams, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw LayoutError(ErrorKind::BadParams, "not an integer: " + std::string(s));
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 12) throw LayoutError(ErrorKind::BadParams, "too many decimals: " + std::string(text));
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const auto whole = text.substr(0, dot);
    const bool neg = !whole.empty() && whole.front() == '-';
    const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    return Rational(w * scale + (neg ? -f : f), scale);
  }
  return Rational(parse_int(text));
}

TrackLayout wrap_modulo(const TrackLayout& layout, int modulus, std::span<const int> numbering) {
  if (modulus < 1) throw LayoutError(ErrorKind::BadParams, "wrap modulus must be positive");
  const std::size_t t = layout.tracks.size();
  std::vector<int> num(t);
  for (std::size_t i = 0; i < t; ++i) num[i] = numbering.empty() ? static_cast<int>(i) + 1 : numbering[i];
  std::vector<std::size_t> by_number(t);
  std::iota(by_number.begin(), by_number.end(), 0);
  std::sort(by_number.begin(), by_number.end(), [&](std::size_t a, std::size_t b) { return num[a] < num[b]; });

  TrackLayout out;
  out.mode = layout.mode;
  out.tracks.resize(std::min<std::size_t>(t, static_cast<std::size_t>(modulus)));
  if (t == 0) return out;
  const int base = num[by_number.front()];
  for (std::size_t i : by_number) {
    const auto j = static_cast<std::size_t>((num[i] - base) % modulus);
    out.tracks[j].insert(out.tracks[j].end(), layout.tracks[i].begin(), layout.tracks[i].end());
  }
  out.drop_empty_tracks();
  return out;
}

TrackLayout wrap(const Graph& g, const TrackLayout& layout, std::span<const int> numbering) {
  const int s = max_span(g, layout, numbering);
  return wrap_modulo(layout, 2 * s + 1, numbering);
}

std::int64_t balance_cap(std::size_t n, Rational t_prime) {
  if (!t_prime.positive()) throw LayoutError(ErrorKind::BadParams, "balance needs t' > 0");
  return Rational(static_cast<std::int64_t>(n) * t_prime.den, t_prime.num).ceil();
}

TrackLayout balance(const TrackLayout& layout, Rational t_prime) {
  const std::size_t n = layout.vertex_count();
  const std::int64_t cap = balance_cap(n, t_prime);
  TrackLayout out;
  out.mode = layout.mode;
  for (const auto& track : layout.tracks) {
    if (static_cast<std::int64_t>(track.size()) <= cap) {
      out.tracks.push_back(track);
      continue;
    }
    for (std::size_t i = 0; i < track.size(); i += static_cast<std::size_t>(cap)) {
      const std::size_t end = std::min(track.size(), i + static_cast<std::size_t>(cap));
      out.tracks.emplace_back(track.begin() + static_cast<std::ptrdiff_t>(i), track.begin() + static_cast<std::ptrdiff_t>(end));
    }
  }
  return out;
}

TrackLayout improper_to_proper(const TrackLayout& layout) {
  if (layout.mode == TrackMode::Proper) return layout;
  TrackLayout out;
  out.mode = TrackMode::Proper;
  for (const auto& track : layout.tracks) {
    std::vector<Vertex> even, odd;
    for (std::size_t i = 0; i < track.size(); ++i) (i % 2 == 0 ? even : odd).push_back(track[i]);
    if (!even.empty()) out.tracks.push_back(std::move(even));
    if (!odd.empty()) out.tracks.push_back(std::move(odd));
  }
  return out;
}

}  // namespace twlayout
