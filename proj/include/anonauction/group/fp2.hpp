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

namespace anonauction::group {

/// Element a + b·i of F_ell[i]/(i² + 1). Valid because ell ≡ 3 (mod 4), so
/// −1 is a non-residue and the extension is a field.
struct Fp2
{
  mpz_class re;
  mpz_class im;

  static Fp2 one()
  {
    return {1, 0};
  }

  bool is_one() const
  {
    return re == 1 && im == 0;
  }

  friend bool operator==(Fp2 const &a, Fp2 const &b)
  {
    return a.re == b.re && a.im == b.im;
  }
};

// Arithmetic over an explicit modulus; inputs must already be reduced.
Fp2 fp2_mul(Fp2 const &a, Fp2 const &b, mpz_class const &ell);
Fp2 fp2_sqr(Fp2 const &a, mpz_class const &ell);
Fp2 fp2_conj(Fp2 const &a, mpz_class const &ell);
Fp2 fp2_inv(Fp2 const &a, mpz_class const &ell);
Fp2 fp2_pow(Fp2 const &base, mpz_class const &exponent, mpz_class const &ell);

}  // namespace anonauction::group
