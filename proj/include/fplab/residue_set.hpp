#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fplab/prime_field.hpp"

namespace fplab {

// A finite subset of F_p: sorted, duplicate-free values in [0, p). The
// universal input to all set operations and energies.
class ResidueSet {
public:
  explicit ResidueSet(FieldModulus field) : field_(field) {}

  // Sorts, deduplicates, and validates values < p.
  static ResidueSet from_values(FieldModulus field, std::vector<uint32_t> values);

  FieldModulus field() const { return field_; }
  const std::vector<uint32_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(uint32_t v) const;
  bool contains_zero() const { return !elements_.empty() && elements_[0] == 0; }

  friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
    return a.field_ == b.field_ && a.elements_ == b.elements_;
  }

  // True when every pairwise product stays inside the set (with 1 present);
  // the verified-subgroup precondition of the subgroup checkers.
  bool is_multiplicative_subgroup() const;

private:
  FieldModulus field_;
  std::vector<uint32_t> elements_;
};

// Set file format: first line `# p=<modulus>`, then one decimal residue per
// line in strictly ascending order, newline-terminated. Out-of-range values,
// duplicates, or misordered lines are load errors.
ResidueSet read_set(std::istream& in, const std::string& name = "<stream>");
ResidueSet load_set_file(const std::string& path);
void write_set(const ResidueSet& set, std::ostream& out);
void save_set_file(const ResidueSet& set, const std::string& path);

// Representation function r(s) = #{(a,b) : a o b = s} for one of the four
// pair laws, stored sparsely. `total` is the number of contributing pairs;
// `skipped` counts pairs dropped by the zero-divisor rule of the ratio law.
struct RepFunction {
  FieldModulus field;
  std::unordered_map<uint32_t, uint64_t> counts;
  uint64_t total = 0;
  uint64_t skipped = 0;

  uint64_t at(uint32_t s) const {
    auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
  }
  // Key-sorted view for deterministic iteration.
  std::vector<std::pair<uint32_t, uint64_t>> sorted() const;
};

}  // namespace fplab
