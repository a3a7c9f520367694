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

#include "anonauction/group/fp2.hpp"

namespace anonauction::group {
namespace {

mpz_class reduce(mpz_class v, mpz_class const &ell)
{
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), ell.get_mpz_t());
  return v;
}

}  // namespace

Fp2 fp2_mul(Fp2 const &a, Fp2 const &b, mpz_class const &ell)
{
  // (a0 + a1 i)(b0 + b1 i) = a0 b0 − a1 b1 + (a0 b1 + a1 b0) i
  mpz_class re = a.re * b.re - a.im * b.im;
  mpz_class im = a.re * b.im + a.im * b.re;
  return {reduce(std::move(re), ell), reduce(std::move(im), ell)};
}

Fp2 fp2_sqr(Fp2 const &a, mpz_class const &ell)
{
  mpz_class re = (a.re + a.im) * (a.re - a.im);
  mpz_class im = 2 * a.re * a.im;
  return {reduce(std::move(re), ell), reduce(std::move(im), ell)};
}

Fp2 fp2_conj(Fp2 const &a, mpz_class const &ell)
{
  return {a.re, reduce(-a.im, ell)};
}

Fp2 fp2_inv(Fp2 const &a, mpz_class const &ell)
{
  mpz_class norm = reduce(a.re * a.re + a.im * a.im, ell);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), norm.get_mpz_t(), ell.get_mpz_t());
  return {reduce(a.re * inv, ell), reduce(-a.im * inv, ell)};
}

Fp2 fp2_pow(Fp2 const &base, mpz_class const &exponent, mpz_class const &ell)
{
  if (exponent < 0)
  {
    return fp2_pow(fp2_inv(base, ell), -exponent, ell);
  }
  Fp2    result = Fp2::one();
  size_t bits   = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;)
  {
    result = fp2_sqr(result, ell);
    if (mpz_tstbit(exponent.get_mpz_t(), i))
    {
      result = fp2_mul(result, base, ell);
    }
  }
  return result;
}

}  // namespace anonauction::group
