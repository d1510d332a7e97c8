#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqm/errors.hpp"

namespace eqm {

using Complex = std::complex<double>;

/// Finite union of disjoint closed real intervals [a_1,b_1] u ... u [a_N,b_N]
/// stored as the strictly increasing endpoint sequence a_1 < b_1 < ... < b_N.
class IntervalUnion {
 public:
  /// Relative spacing below which two consecutive endpoints count as equal.
  static constexpr double kCoincidenceTol = 1e-12;

  static IntervalUnion from_endpoints(std::vector<double> endpoints) {
    if (endpoints.empty()) fail(ErrorCode::EmptyInput, "no endpoints given");
    if (endpoints.size() % 2 != 0) {
      fail(ErrorCode::OddEndpointCount, "endpoint count must be even");
    }
    for (double e : endpoints) {
      if (!std::isfinite(e)) fail(ErrorCode::NonFinite, "endpoint is not finite");
    }
    const double span = endpoints.back() - endpoints.front();
    const double min_gap = kCoincidenceTol * std::max(span, 0.0);
    for (std::size_t i = 1; i < endpoints.size(); ++i) {
      if (!(endpoints[i] - endpoints[i - 1] > min_gap)) {
        std::ostringstream os;
        os << "endpoints must be strictly increasing (index " << i - 1 << ", " << i << ")";
        fail(ErrorCode::NonIncreasing, os.str());
      }
    }
    IntervalUnion k;
    k.e_ = std::move(endpoints);
    return k;
  }

  /// The reference segment [-2, 2].
  static IntervalUnion segment(double a = -2.0, double b = 2.0) {
    return from_endpoints({a, b});
  }

  std::size_t size() const noexcept { return e_.size() / 2; }
  double left(std::size_t l) const { return e_[2 * l]; }
  double right(std::size_t l) const { return e_[2 * l + 1]; }
  double width(std::size_t l) const { return right(l) - left(l); }
  double hull_left() const { return e_.front(); }
  double hull_right() const { return e_.back(); }
  std::span<const double> endpoints() const noexcept { return e_; }

  double enclosing_radius() const {
    return std::max(std::abs(hull_left()), std::abs(hull_right()));
  }

  /// Band whose open interior contains x.
  std::optional<std::size_t> band_of(double x) const {
    for (std::size_t l = 0; l < size(); ++l) {
      if (x > left(l) && x < right(l)) return l;
    }
    return std::nullopt;
  }

  bool contains(double x) const {
    for (std::size_t l = 0; l < size(); ++l) {
      if (x >= left(l) && x <= right(l)) return true;
    }
    return false;
  }

  /// Total length of the bands meeting the open strip (lo, hi).
  double overlap(double lo, double hi) const {
    double total = 0.0;
    for (std::size_t l = 0; l < size(); ++l) {
      total += std::max(0.0, std::min(hi, right(l)) - std::max(lo, left(l)));
    }
    return total;
  }

  /// R(z) = prod (z - a_l)(z - b_l).
  Complex polynomial_r(Complex z) const {
    Complex r = 1.0;
    for (double e : e_) r *= (z - e);
    return r;
  }

  bool operator==(const IntervalUnion&) const = default;

 private:
  std::vector<double> e_;
};

/// x -> scale * x + shift.
struct AffineMap {
  double scale = 1.0;
  double shift = 0.0;

  double operator()(double x) const { return scale * x + shift; }
  Complex operator()(Complex z) const { return scale * z + shift; }

  AffineMap inverse() const {
    if (scale == 0.0) fail(ErrorCode::InvalidConfig, "affine map is not invertible");
    return {1.0 / scale, -shift / scale};
  }

  /// (*this) o inner.
  AffineMap after(const AffineMap& inner) const {
    return {scale * inner.scale, scale * inner.shift + shift};
  }

  IntervalUnion apply(const IntervalUnion& k) const {
    if (scale == 0.0) fail(ErrorCode::InvalidConfig, "affine map is not invertible");
    std::vector<double> image;
    image.reserve(k.endpoints().size());
    for (double e : k.endpoints()) image.push_back((*this)(e));
    if (scale < 0.0) std::reverse(image.begin(), image.end());
    return IntervalUnion::from_endpoints(std::move(image));
  }
};

/// Boundary value of sqrt(R) on the real line following the sign table
///   x >= b_N:             +sqrt|R|
///   a_l <= x <= b_l:      (-1)^(N+l) i sqrt|R|   (limit from Im z -> 0+)
///   b_l <= x <= a_{l+1}:  (-1)^(N+l) sqrt|R|
///   x <= a_1:             (-1)^N sqrt|R|
/// with l counted from 1. The lower-side limit is the conjugate on bands.
inline Complex sqrt_r_real(const IntervalUnion& k, double x, bool from_above = true) {
  const std::size_t n = k.size();
  const double mag = std::sqrt(std::abs(k.polynomial_r(Complex(x, 0.0)).real()));
  if (x >= k.hull_right()) return mag;
  if (x <= k.hull_left()) return (n % 2 == 0) ? mag : -mag;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t l = idx + 1;
    const double sign = ((n + l) % 2 == 0) ? 1.0 : -1.0;
    if (x >= k.left(idx) && x <= k.right(idx)) {
      return Complex(0.0, from_above ? sign * mag : -sign * mag);
    }
    if (idx + 1 < n && x > k.right(idx) && x < k.left(idx + 1)) return sign * mag;
  }
  return mag;
}

/// Analytic branch of sqrt(R) off the bands with sqrt(R(z)) / z^N -> 1.
/// Each band contributes sqrt(z - a) sqrt(z - b) with principal roots; that
/// product has its cut exactly on [a, b] and behaves like z at infinity.
inline Complex sqrt_r(const IntervalUnion& k, Complex z) {
  if (z.imag() == 0.0 && k.band_of(z.real())) {
    fail(ErrorCode::OnCut, "point lies on a band; use sqrt_r_real with a side");
  }
  Complex value = 1.0;
  for (std::size_t l = 0; l < k.size(); ++l) {
    value *= std::sqrt(z - k.left(l)) * std::sqrt(z - k.right(l));
  }
  return value;
}

/// Image of K with unit capacity and conformal centroid at the origin, given
/// cap(K) and the centroid of K; uses cap(aK+b) = |a| cap(K).
inline std::pair<IntervalUnion, AffineMap> normalize(const IntervalUnion& k, double capacity,
                                                     double centroid) {
  if (!(capacity > 0.0) || !std::isfinite(capacity)) {
    fail(ErrorCode::ZeroCapacityInput, "capacity must be positive");
  }
  const AffineMap map{1.0 / capacity, -centroid / capacity};
  return {map.apply(k), map};
}

/// max over t in K of |z - t|.
inline double farthest_distance(const IntervalUnion& k, Complex z) {
  return std::max(std::abs(z - k.hull_left()), std::abs(z - k.hull_right()));
}

/// Parses "a1,b1,a2,b2,..." (whitespace tolerated); "L" names [-2, 2].
inline IntervalUnion parse_interval_union(std::string_view text) {
  std::string s(text);
  if (s == "L") return IntervalUnion::segment();
  std::vector<double> values;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) fail(ErrorCode::ParseError, "empty endpoint in '" + s + "'");
    const auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad number '" + token + "'");
    }
    if (used != token.size()) fail(ErrorCode::ParseError, "bad number '" + token + "'");
    values.push_back(v);
  }
  return IntervalUnion::from_endpoints(std::move(values));
}

}  // namespace eqm
