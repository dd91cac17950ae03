#pragma once

#include <cstdint>
#include <vector>

#include "fplab/errors.hpp"

namespace fplab {

class ResidueSet;

bool is_prime_u32(uint32_t n);

// Distinct prime factors of n, ascending. Trial division; n <= 2^31 keeps
// this instant.
std::vector<uint32_t> prime_factors(uint32_t n);

// An odd prime modulus p with 3 <= p <= 2^31 - 1. Construction validates
// primality (deterministic Miller-Rabin), so a FieldModulus always denotes a
// genuine prime field and all products below fit 64-bit intermediates.
class FieldModulus {
public:
  explicit FieldModulus(uint32_t p);

  uint32_t p() const { return p_; }

  // Word-level arithmetic on canonical representatives in [0, p).
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;  // a, b < p <= 2^31 - 1, no overflow
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t reduce(uint64_t v) const { return static_cast<uint32_t>(v % p_); }

  // Square-and-multiply; pow(0, 0) = 1.
  uint32_t pow(uint32_t a, uint64_t e) const;

  // Extended Euclid. Throws DomainError on a = 0.
  uint32_t inv(uint32_t a) const;

  friend bool operator==(FieldModulus a, FieldModulus b) { return a.p_ == b.p_; }
  friend bool operator!=(FieldModulus a, FieldModulus b) { return a.p_ != b.p_; }

private:
  uint32_t p_;
};

// A canonical residue: value in [0, p) tagged with its modulus. Operations
// between residues over different moduli throw ModulusMismatch.
class Residue {
public:
  Residue(uint32_t value, FieldModulus field);

  uint32_t value() const { return value_; }
  FieldModulus field() const { return field_; }

  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  Residue operator-() const { return Residue(field_.neg(value_), field_); }

  friend bool operator==(Residue a, Residue b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator!=(Residue a, Residue b) { return !(a == b); }

private:
  uint32_t value_;
  FieldModulus field_;
};

Residue inv(Residue a);
Residue pow(Residue a, uint64_t e);

// Multiplicative order of a in F_p^*; requires a != 0.
uint32_t multiplicative_order(FieldModulus f, uint32_t a);

// Smallest g >= 2 generating F_p^*, certified via the prime factorization of
// p - 1: g^((p-1)/l) != 1 for every prime l | p - 1.
Residue find_primitive_root(FieldModulus f);

// The unique multiplicative subgroup of order d, as {g^(j(p-1)/d)}. Requires
// d | p - 1.
ResidueSet subgroup(FieldModulus f, uint32_t d);

}  // namespace fplab
