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

#include "anonauction/error.hpp"
#include "anonauction/group/group.hpp"

namespace anonauction::group {
namespace {

mpz_class random_prime(unsigned bits, Rng &rng)
{
  for (;;)
  {
    mpz_class candidate = rng.random_bits(bits);
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (is_probable_prime(candidate))
    {
      return candidate;
    }
  }
}

void require(bool condition, char const *what)
{
  if (!condition)
  {
    throw Error(Errc::invalid_argument, what);
  }
}

}  // namespace

bool is_probable_prime(mpz_class const &v)
{
  return v > 1 && mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

BaseField find_base_field(mpz_class const &n, std::uint64_t max_cofactor)
{
  for (std::uint64_t r = 1; r <= max_cofactor; ++r)
  {
    mpz_class ell = n * r - 1;
    if (mpz_fdiv_ui(ell.get_mpz_t(), 4) == 3 && is_probable_prime(ell))
    {
      return {mpz_class(static_cast<unsigned long>(r)), ell};
    }
  }
  throw Error(Errc::parameter_search_exhausted,
              "no prime ell = n*r - 1 with r <= " + std::to_string(max_cofactor));
}

GroupParams group_from_primes(mpz_class const &p, mpz_class const &q, Rng &rng,
                              GroupGenOptions const &options)
{
  require(p != q, "p and q must differ");
  require(p > 2 && q > 2 && is_probable_prime(p) && is_probable_prime(q),
          "p and q must be odd primes");

  mpz_class n     = p * q;
  BaseField field = find_base_field(n, options.max_cofactor);
  Curve     curve(field.ell);

  // The curve group is cyclic of order ell + 1 = n·r, so [r]P lands in the
  // order-n subgroup; keep it only if its order is exactly n.
  Point g;
  for (;;)
  {
    mpz_class x = rng.uniform_below(field.ell);
    auto      y = curve.solve_y(x);
    if (!y)
    {
      continue;
    }
    if (rng.next_u64() & 1u)
    {
      *y = (field.ell - *y) % field.ell;
    }
    g = curve.mul(field.cofactor, Point::affine(x, *y));
    if (g.is_identity())
    {
      continue;
    }
    if (curve.mul(n / p, g).is_identity() || curve.mul(n / q, g).is_identity())
    {
      continue;
    }
    break;
  }

  mpz_class alpha = rng.uniform_nonzero_below(q);
  Point     h     = curve.mul(alpha * p, g);

  return GroupParams{PublicGroup(n, field.ell, std::move(g), std::move(h)), p, q};
}

GroupParams gen_group_params(unsigned p_bits, unsigned q_bits, Rng &rng,
                             GroupGenOptions const &options)
{
  require(p_bits >= 8 && q_bits >= 8, "prime sizes must be at least 8 bits");
  mpz_class p = random_prime(p_bits, rng);
  mpz_class q = random_prime(q_bits, rng);
  while (q == p)
  {
    q = random_prime(q_bits, rng);
  }
  return group_from_primes(p, q, rng, options);
}

void validate(GroupParams const &params)
{
  auto const &pub   = params.pub;
  auto const &curve = pub.curve();
  require(is_probable_prime(pub.ell()), "ell must be prime");
  require(mpz_fdiv_ui(pub.ell().get_mpz_t(), 4) == 3, "ell must be 3 mod 4");
  require(pub.n() * pub.cofactor() == pub.ell() + 1, "n * r must equal ell + 1");
  require(params.p != params.q, "p and q must differ");
  require(is_probable_prime(params.p) && is_probable_prime(params.q), "p and q must be prime");
  require(params.p * params.q == pub.n(), "n must equal p * q");
  require(curve.contains(pub.g()) && curve.contains(pub.h()), "generators must be on the curve");
  require(curve.mul(pub.n(), pub.g()).is_identity(), "[n]g must be the identity");
  require(!curve.mul(params.q, pub.g()).is_identity(), "[n/p]g must not be the identity");
  require(!curve.mul(params.p, pub.g()).is_identity(), "[n/q]g must not be the identity");
  require(!pub.h().is_identity(), "h must not be the identity");
  require(curve.mul(params.q, pub.h()).is_identity(), "[q]h must be the identity");
}

}  // namespace anonauction::group
