#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The anonauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <gmpxx.h>

#include <optional>

namespace anonauction::group {

/// Affine point on y² = x³ + x, or the point at infinity.
struct Point
{
  mpz_class x;
  mpz_class y;
  bool      infinity = true;

  static Point identity()
  {
    return {};
  }
  static Point affine(mpz_class x, mpz_class y)
  {
    return {std::move(x), std::move(y), false};
  }

  bool is_identity() const noexcept
  {
    return infinity;
  }

  friend bool operator==(Point const &a, Point const &b)
  {
    if (a.infinity || b.infinity)
    {
      return a.infinity == b.infinity;
    }
    return a.x == b.x && a.y == b.y;
  }
};

/// The supersingular curve y² = x³ + x over F_ell.
///
/// These are the raw, uninstrumented operations. Protocol code goes through
/// PublicGroup, which counts them.
class Curve
{
public:
  explicit Curve(mpz_class ell);

  mpz_class const &modulus() const noexcept
  {
    return ell_;
  }

  bool  contains(Point const &p) const;
  Point add(Point const &a, Point const &b) const;
  Point dbl(Point const &a) const;
  Point neg(Point const &a) const;
  /// Double-and-add; negative scalars multiply the negated point.
  Point mul(mpz_class const &k, Point const &p) const;

  /// Square root of x³ + x if it exists (ell ≡ 3 mod 4 → single powering).
  std::optional<mpz_class> solve_y(mpz_class const &x) const;

private:
  mpz_class ell_;
  mpz_class sqrt_exp_;  // (ell + 1) / 4
};

}  // namespace anonauction::group
