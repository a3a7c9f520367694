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

#include "anonauction/bytes.hpp"
#include "anonauction/group/curve.hpp"
#include "anonauction/group/fp2.hpp"
#include "anonauction/rng.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>

namespace anonauction::group {

/// Element of the order-n subgroup of F_ell²*, the pairing's target group.
struct GtElement
{
  Fp2 value = Fp2::one();

  bool is_one() const
  {
    return value.is_one();
  }
  friend bool operator==(GtElement const &, GtElement const &) = default;
};

/// The public half of the composite-order pairing group: everything except
/// the factorization of n.
///
/// Point and target-group operations here are the counted ones; see
/// OpCounter. Encodings:
///   point  = prefix ∥ x   where prefix is 0x02/0x03 (parity of y) and x is
///            big-endian, padded to byte_length(ell). Identity is 0x00 ∥ 0…0.
///   scalar = big-endian, padded to byte_length(n).
class PublicGroup
{
public:
  /// Throws Error(invalid_argument) unless ell ≡ 3 (mod 4), n | ell + 1 and
  /// g, h lie on the curve.
  PublicGroup(mpz_class n, mpz_class ell, Point g, Point h);

  mpz_class const &n() const noexcept
  {
    return n_;
  }
  mpz_class const &ell() const noexcept
  {
    return curve_.modulus();
  }
  mpz_class const &cofactor() const noexcept
  {
    return cofactor_;
  }
  Point const &g() const noexcept
  {
    return g_;
  }
  Point const &h() const noexcept
  {
    return h_;
  }
  Curve const &curve() const noexcept
  {
    return curve_;
  }

  Point add(Point const &a, Point const &b) const;
  Point neg(Point const &a) const;
  /// a − b, counted as one negation plus one addition.
  Point sub(Point const &a, Point const &b) const;
  Point mul(mpz_class const &k, Point const &p) const;

  bool on_curve(Point const &p) const;
  /// On the curve and annihilated by n. Uncounted (a validation step).
  bool in_group(Point const &p) const;

  /// Modified Tate pairing ê(P, Q) = f_{n,P}(φ(Q))^((ell²−1)/n) with the
  /// distortion map φ(x, y) = (−x, i·y). Throws Error(invalid_point) if
  /// either argument is off the curve.
  GtElement pair(Point const &p, Point const &q) const;

  GtElement gt_mul(GtElement const &a, GtElement const &b) const;
  GtElement gt_pow(GtElement const &a, mpz_class const &k) const;
  GtElement gt_inv(GtElement const &a) const;

  std::size_t field_bytes() const noexcept
  {
    return field_bytes_;
  }
  std::size_t point_bytes() const noexcept
  {
    return field_bytes_ + 1;
  }
  std::size_t scalar_bytes() const noexcept
  {
    return scalar_bytes_;
  }

  Bytes encode(Point const &p) const;
  void  encode_to(ByteWriter &out, Point const &p) const;
  /// Throws Error(invalid_point) for a bad prefix, x ≥ ell, or an x with no
  /// curve point.
  Point decode(ByteSpan bytes) const;
  Point read_point(ByteReader &in) const;

  void      encode_scalar_to(ByteWriter &out, mpz_class const &v) const;
  mpz_class read_scalar(ByteReader &in) const;

  /// H_1 into Z_n.
  mpz_class hash_to_zn(ByteSpan data) const;

  /// n, ell as length-prefixed big-endian integers followed by g and h.
  void               serialize_to(ByteWriter &out) const;
  static PublicGroup deserialize(ByteReader &in);

  friend bool operator==(PublicGroup const &a, PublicGroup const &b)
  {
    return a.n_ == b.n_ && a.ell() == b.ell() && a.g_ == b.g_ && a.h_ == b.h_;
  }

private:
  mpz_class   n_;
  Curve       curve_;
  mpz_class   cofactor_;
  mpz_class   final_exp_;  // (ell + 1) / n, applied after the (ell − 1) part
  Point       g_;
  Point       h_;
  std::size_t field_bytes_;
  std::size_t scalar_bytes_;
};

/// Full group description held by the auction manager. p and q are secret;
/// q doubles as the tracing key.
struct GroupParams
{
  PublicGroup pub;
  mpz_class   p;
  mpz_class   q;
};

struct GroupGenOptions
{
  /// Largest cofactor r tried in the search for a prime ell = n·r − 1.
  std::uint64_t max_cofactor = 1u << 16;
};

/// Samples primes p ≠ q of the requested sizes and builds the group around
/// n = pq. Throws Error(invalid_argument) for sizes below 8 bits and
/// Error(parameter_search_exhausted) if no ell is found.
GroupParams gen_group_params(unsigned p_bits, unsigned q_bits, Rng &rng,
                             GroupGenOptions const &options = {});

/// Same construction with caller-chosen primes (any size ≥ 3). Used for the
/// tiny worked examples. Throws Error(invalid_argument) if p == q or either
/// is not prime.
GroupParams group_from_primes(mpz_class const &p, mpz_class const &q, Rng &rng,
                              GroupGenOptions const &options = {});

struct BaseField
{
  mpz_class cofactor;
  mpz_class ell;
};

/// Smallest r ≥ 1 with ell = n·r − 1 prime and ell ≡ 3 (mod 4).
BaseField find_base_field(mpz_class const &n, std::uint64_t max_cofactor);

/// Checks every GroupParams invariant, throwing Error(invalid_argument) on
/// the first violation.
void validate(GroupParams const &params);

bool is_probable_prime(mpz_class const &v);

}  // namespace anonauction::group
