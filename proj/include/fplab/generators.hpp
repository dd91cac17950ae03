#pragma once

#include <optional>
#include <string>

#include "fplab/residue_set.hpp"
#include "fplab/rng.hpp"

namespace fplab {

enum class GeneratorKind {
  random_set,
  arithmetic_progression,
  geometric_progression,
  subgroup_gen,
  subgroup_union_cosets,
};

const char* generator_name(GeneratorKind kind);
GeneratorKind parse_generator(const std::string& name);
// True for kinds whose output depends on the RNG.
bool generator_randomized(GeneratorKind kind);

struct GenOptions {
  bool no_zero = false;  // multiplicative checkers exclude 0
  // Fixed AP parameters; when absent the start and step are drawn from rng.
  std::optional<uint32_t> start;
  std::optional<uint32_t> step;
};

// Draws a set of the requested size (subgroup kinds may round: the subgroup
// order is the largest divisor of p-1 at most `size`, and a coset union is a
// multiple of the subgroup order, so those kinds record their actual size in
// the returned set).
ResidueSet generate_set(FieldModulus f, GeneratorKind kind, uint32_t size, Rng& rng,
                        const GenOptions& opts = {});

// Largest divisor of p-1 that is <= size (>= 1).
uint32_t subgroup_order_at_most(FieldModulus f, uint32_t size);

}  // namespace fplab
