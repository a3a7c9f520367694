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

#include "anonauction/group/curve.hpp"

namespace anonauction::group {
namespace {

mpz_class mod(mpz_class v, mpz_class const &m)
{
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return v;
}

mpz_class inverse(mpz_class const &v, mpz_class const &m)
{
  mpz_class out;
  mpz_invert(out.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return out;
}

}  // namespace

Curve::Curve(mpz_class ell)
  : ell_(std::move(ell))
  , sqrt_exp_((ell_ + 1) / 4)
{}

bool Curve::contains(Point const &p) const
{
  if (p.infinity)
  {
    return true;
  }
  if (p.x < 0 || p.x >= ell_ || p.y < 0 || p.y >= ell_)
  {
    return false;
  }
  mpz_class lhs = mod(p.y * p.y, ell_);
  mpz_class rhs = mod(p.x * p.x * p.x + p.x, ell_);
  return lhs == rhs;
}

Point Curve::neg(Point const &a) const
{
  if (a.infinity)
  {
    return a;
  }
  return Point::affine(a.x, mod(-a.y, ell_));
}

Point Curve::dbl(Point const &a) const
{
  if (a.infinity || a.y == 0)
  {
    return Point::identity();
  }
  // λ = (3x² + 1) / 2y
  mpz_class lambda = mod((3 * a.x * a.x + 1) * inverse(mod(2 * a.y, ell_), ell_), ell_);
  mpz_class x3     = mod(lambda * lambda - 2 * a.x, ell_);
  mpz_class y3     = mod(lambda * (a.x - x3) - a.y, ell_);
  return Point::affine(std::move(x3), std::move(y3));
}

Point Curve::add(Point const &a, Point const &b) const
{
  if (a.infinity)
  {
    return b;
  }
  if (b.infinity)
  {
    return a;
  }
  if (a.x == b.x)
  {
    if (a.y == b.y)
    {
      return dbl(a);
    }
    return Point::identity();
  }
  mpz_class lambda = mod((b.y - a.y) * inverse(mod(b.x - a.x, ell_), ell_), ell_);
  mpz_class x3     = mod(lambda * lambda - a.x - b.x, ell_);
  mpz_class y3     = mod(lambda * (a.x - x3) - a.y, ell_);
  return Point::affine(std::move(x3), std::move(y3));
}

Point Curve::mul(mpz_class const &k, Point const &p) const
{
  if (k < 0)
  {
    return mul(-k, neg(p));
  }
  Point  result = Point::identity();
  size_t bits   = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;)
  {
    result = dbl(result);
    if (mpz_tstbit(k.get_mpz_t(), i))
    {
      result = add(result, p);
    }
  }
  return result;
}

std::optional<mpz_class> Curve::solve_y(mpz_class const &x) const
{
  mpz_class rhs = mod(x * x * x + x, ell_);
  mpz_class y;
  mpz_powm(y.get_mpz_t(), rhs.get_mpz_t(), sqrt_exp_.get_mpz_t(), ell_.get_mpz_t());
  if (mod(y * y, ell_) != rhs)
  {
    return std::nullopt;
  }
  return y;
}

}  // namespace anonauction::group
