#include "fplab/prime_field.hpp"

#include <string>

#include "fplab/residue_set.hpp"

namespace fplab {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n % q == 0) return n == q;
  }
  uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases {2,3,5,7} are a deterministic witness set below 3,215,031,751,
  // which covers the whole 32-bit range we accept.
  for (uint32_t a : {2u, 3u, 5u, 7u}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t q = 2; static_cast<uint64_t>(q) * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldModulus::FieldModulus(uint32_t p) : p_(p) {
  if (p < 3) throw DomainError("modulus must be an odd prime >= 3, got " + std::to_string(p));
  if (p > 0x7fffffffu)
    throw DomainError("modulus must fit 31 bits, got " + std::to_string(p));
  if (!is_prime_u32(p)) throw DomainError(std::to_string(p) + " is not prime");
}

uint32_t FieldModulus::pow(uint32_t a, uint64_t e) const {
  uint64_t r = 1;
  uint64_t x = a % p_;
  while (e) {
    if (e & 1) r = r * x % p_;
    x = x * x % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t FieldModulus::inv(uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p); p prime so gcd = 1.
  int64_t t = 0, new_t = 1;
  int64_t r = p_, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

namespace {

void require_same_field(FieldModulus a, FieldModulus b) {
  if (a != b)
    throw ModulusMismatch("operands live over F_" + std::to_string(a.p()) +
                          " and F_" + std::to_string(b.p()));
}

}  // namespace

Residue::Residue(uint32_t value, FieldModulus field) : value_(value), field_(field) {
  if (value >= field.p())
    throw DomainError("residue " + std::to_string(value) + " not canonical mod " +
                      std::to_string(field.p()));
}

Residue operator+(Residue a, Residue b) {
  require_same_field(a.field_, b.field_);
  return Residue(a.field_.add(a.value_, b.value_), a.field_);
}

Residue operator-(Residue a, Residue b) {
  require_same_field(a.field_, b.field_);
  return Residue(a.field_.sub(a.value_, b.value_), a.field_);
}

Residue operator*(Residue a, Residue b) {
  require_same_field(a.field_, b.field_);
  return Residue(a.field_.mul(a.value_, b.value_), a.field_);
}

Residue inv(Residue a) { return Residue(a.field().inv(a.value()), a.field()); }

Residue pow(Residue a, uint64_t e) {
  return Residue(a.field().pow(a.value(), e), a.field());
}

uint32_t multiplicative_order(FieldModulus f, uint32_t a) {
  if (a == 0) throw DomainError("order of zero is undefined");
  uint32_t order = f.p() - 1;
  for (uint32_t q : prime_factors(f.p() - 1)) {
    while (order % q == 0 && f.pow(a, order / q) == 1) order /= q;
  }
  return order;
}

Residue find_primitive_root(FieldModulus f) {
  const uint32_t phi = f.p() - 1;
  const auto factors = prime_factors(phi);
  for (uint32_t g = 2; g < f.p(); ++g) {
    bool primitive = true;
    for (uint32_t q : factors) {
      if (f.pow(g, phi / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return Residue(g, f);
  }
  throw Error("no primitive root found (unreachable for prime p)");
}

ResidueSet subgroup(FieldModulus f, uint32_t d) {
  if (d == 0 || (f.p() - 1) % d != 0)
    throw DomainError("subgroup order " + std::to_string(d) + " does not divide " +
                      std::to_string(f.p() - 1));
  const uint32_t g = find_primitive_root(f).value();
  const uint32_t step = (f.p() - 1) / d;
  std::vector<uint32_t> elems;
  elems.reserve(d);
  for (uint32_t j = 0; j < d; ++j) elems.push_back(f.pow(g, static_cast<uint64_t>(j) * step));
  return ResidueSet::from_values(f, std::move(elems));
}

}  // namespace fplab
