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

#include "anonauction/group/group.hpp"

#include "anonauction/error.hpp"
#include "anonauction/group/hash.hpp"
#include "anonauction/group/op_counter.hpp"

namespace anonauction::group {
namespace {

constexpr std::uint8_t kIdentityFlag = 0x00;
constexpr std::uint8_t kEvenY        = 0x02;
constexpr std::uint8_t kOddY         = 0x03;

std::size_t byte_length(mpz_class const &v)
{
  return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
}

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

void write_fixed(ByteWriter &out, mpz_class const &v, std::size_t width)
{
  Bytes  buf(width, 0);
  size_t count = 0;
  if (v != 0)
  {
    std::size_t len = byte_length(v);
    mpz_export(buf.data() + (width - len), &count, 1, 1, 1, 0, v.get_mpz_t());
  }
  out.raw(buf);
}

mpz_class read_unsigned(ByteSpan bytes)
{
  mpz_class v = 0;
  if (!bytes.empty())
  {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

void write_blob(ByteWriter &out, mpz_class const &v)
{
  ByteWriter tmp;
  write_fixed(tmp, v, byte_length(v));
  out.blob(tmp.bytes());
}

}  // namespace

PublicGroup::PublicGroup(mpz_class n, mpz_class ell, Point g, Point h)
  : n_(std::move(n))
  , curve_(std::move(ell))
  , g_(std::move(g))
  , h_(std::move(h))
{
  mpz_class const &p = curve_.modulus();
  if (n_ <= 1 || p <= 3 || mod(p, 4) != 3 || mod(p + 1, n_) != 0)
  {
    throw Error(Errc::invalid_argument, "group needs ell = 3 mod 4 and n | ell + 1");
  }
  if (!curve_.contains(g_) || !curve_.contains(h_))
  {
    throw Error(Errc::invalid_argument, "generators must lie on the curve");
  }
  cofactor_     = (p + 1) / n_;
  final_exp_    = cofactor_;
  field_bytes_  = byte_length(p);
  scalar_bytes_ = byte_length(n_);
}

Point PublicGroup::add(Point const &a, Point const &b) const
{
  OpCounter::record(Op::multiplication);
  return curve_.add(a, b);
}

Point PublicGroup::neg(Point const &a) const
{
  OpCounter::record(Op::inversion);
  return curve_.neg(a);
}

Point PublicGroup::sub(Point const &a, Point const &b) const
{
  return add(a, neg(b));
}

Point PublicGroup::mul(mpz_class const &k, Point const &p) const
{
  OpCounter::record(Op::exponentiation);
  return curve_.mul(k, p);
}

bool PublicGroup::on_curve(Point const &p) const
{
  return curve_.contains(p);
}

bool PublicGroup::in_group(Point const &p) const
{
  return curve_.contains(p) && curve_.mul(n_, p).is_identity();
}

GtElement PublicGroup::pair(Point const &p, Point const &q) const
{
  if (!curve_.contains(p) || !curve_.contains(q))
  {
    throw Error(Errc::invalid_point, "pairing argument is not on the curve");
  }
  OpCounter::record(Op::pairing);
  if (p.is_identity() || q.is_identity())
  {
    return {};
  }

  mpz_class const &ell = curve_.modulus();
  // φ(Q) = (−x_Q, i·y_Q). A line Y − y_T − λ(X − x_T) evaluated there is
  // (λ(x_Q + x_T) − y_T) + y_Q·i. Vertical lines evaluate into F_ell and are
  // erased by the (ell − 1) factor of the final exponentiation, so they are
  // skipped.
  auto line = [&](mpz_class const &lambda, Point const &t) {
    return Fp2{mod(lambda * (q.x + t.x) - t.y, ell), q.y};
  };

  Fp2    f = Fp2::one();
  Point  t = p;
  size_t bits = mpz_sizeinbase(n_.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;)
  {
    f = fp2_sqr(f, ell);
    if (!t.is_identity())
    {
      if (t.y == 0)
      {
        t = Point::identity();
      }
      else
      {
        mpz_class lambda = mod((3 * t.x * t.x + 1) * inverse(mod(2 * t.y, ell), ell), ell);
        f                = fp2_mul(f, line(lambda, t), ell);
        t                = curve_.dbl(t);
      }
    }
    if (mpz_tstbit(n_.get_mpz_t(), i))
    {
      if (t.is_identity())
      {
        t = p;
      }
      else if (t.x == p.x)
      {
        if (t.y == p.y && t.y != 0)
        {
          mpz_class lambda = mod((3 * t.x * t.x + 1) * inverse(mod(2 * t.y, ell), ell), ell);
          f                = fp2_mul(f, line(lambda, t), ell);
          t                = curve_.dbl(t);
        }
        else
        {
          t = Point::identity();
        }
      }
      else
      {
        mpz_class lambda = mod((p.y - t.y) * inverse(mod(p.x - t.x, ell), ell), ell);
        f                = fp2_mul(f, line(lambda, t), ell);
        t                = curve_.add(t, p);
      }
    }
  }

  // f^(ell − 1) = conj(f) / f, since Frobenius conjugates when ell ≡ 3 mod 4.
  Fp2 unitary = fp2_mul(fp2_conj(f, ell), fp2_inv(f, ell), ell);
  return {fp2_pow(unitary, final_exp_, ell)};
}

GtElement PublicGroup::gt_mul(GtElement const &a, GtElement const &b) const
{
  OpCounter::record(Op::multiplication);
  return {fp2_mul(a.value, b.value, curve_.modulus())};
}

GtElement PublicGroup::gt_pow(GtElement const &a, mpz_class const &k) const
{
  OpCounter::record(Op::exponentiation);
  return {fp2_pow(a.value, k, curve_.modulus())};
}

GtElement PublicGroup::gt_inv(GtElement const &a) const
{
  OpCounter::record(Op::inversion);
  return {fp2_inv(a.value, curve_.modulus())};
}

Bytes PublicGroup::encode(Point const &p) const
{
  ByteWriter out;
  encode_to(out, p);
  return std::move(out).take();
}

void PublicGroup::encode_to(ByteWriter &out, Point const &p) const
{
  if (p.is_identity())
  {
    out.u8(kIdentityFlag);
    write_fixed(out, 0, field_bytes_);
    return;
  }
  out.u8(mpz_odd_p(p.y.get_mpz_t()) ? kOddY : kEvenY);
  write_fixed(out, p.x, field_bytes_);
}

Point PublicGroup::decode(ByteSpan bytes) const
{
  ByteReader in(bytes);
  Point      p = read_point(in);
  if (in.remaining() != 0)
  {
    throw Error(Errc::invalid_point, "trailing bytes after point encoding");
  }
  return p;
}

Point PublicGroup::read_point(ByteReader &in) const
{
  if (in.remaining() < point_bytes())
  {
    throw Error(Errc::invalid_point, "truncated point encoding");
  }
  std::uint8_t prefix = in.u8();
  mpz_class    x      = read_unsigned(in.raw(field_bytes_));
  if (prefix == kIdentityFlag)
  {
    if (x != 0)
    {
      throw Error(Errc::invalid_point, "identity encoding must be all zero");
    }
    return Point::identity();
  }
  if (prefix != kEvenY && prefix != kOddY)
  {
    throw Error(Errc::invalid_point, "bad point prefix");
  }
  if (x >= curve_.modulus())
  {
    throw Error(Errc::invalid_point, "x coordinate out of range");
  }
  auto y = curve_.solve_y(x);
  if (!y)
  {
    throw Error(Errc::invalid_point, "x coordinate has no curve point");
  }
  bool want_odd = prefix == kOddY;
  if (static_cast<bool>(mpz_odd_p(y->get_mpz_t())) != want_odd)
  {
    *y = mod(-*y, curve_.modulus());
  }
  // y = 0 has a single encoding, the even one.
  if (*y == 0 && want_odd)
  {
    throw Error(Errc::invalid_point, "non-canonical point encoding");
  }
  return Point::affine(std::move(x), std::move(*y));
}

void PublicGroup::encode_scalar_to(ByteWriter &out, mpz_class const &v) const
{
  write_fixed(out, mod(v, n_), scalar_bytes_);
}

mpz_class PublicGroup::read_scalar(ByteReader &in) const
{
  mpz_class v = read_unsigned(in.raw(scalar_bytes_));
  if (v >= n_)
  {
    throw Error(Errc::malformed, "scalar out of range");
  }
  return v;
}

mpz_class PublicGroup::hash_to_zn(ByteSpan data) const
{
  return group::hash_to_zn(data, n_);
}

void PublicGroup::serialize_to(ByteWriter &out) const
{
  write_blob(out, n_);
  write_blob(out, curve_.modulus());
  encode_to(out, g_);
  encode_to(out, h_);
}

PublicGroup PublicGroup::deserialize(ByteReader &in)
{
  mpz_class n   = read_unsigned(in.blob());
  mpz_class ell = read_unsigned(in.blob());
  // Decoding the generators needs the curve, so go through a placeholder
  // group with identity generators first.
  PublicGroup shell(n, ell, Point::identity(), Point::identity());
  Point       g = shell.read_point(in);
  Point       h = shell.read_point(in);
  return PublicGroup(std::move(n), std::move(ell), std::move(g), std::move(h));
}

}  // namespace anonauction::group
