#include "fplab/residue_set.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fplab {

ResidueSet ResidueSet::from_values(FieldModulus field, std::vector<uint32_t> values) {
  for (uint32_t v : values) {
    if (v >= field.p())
      throw DomainError("set element " + std::to_string(v) + " out of range mod " +
                        std::to_string(field.p()));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ResidueSet s(field);
  s.elements_ = std::move(values);
  return s;
}

bool ResidueSet::contains(uint32_t v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

bool ResidueSet::is_multiplicative_subgroup() const {
  if (empty() || contains_zero() || !contains(1)) return false;
  for (uint32_t a : elements_) {
    for (uint32_t b : elements_) {
      if (!contains(field_.mul(a, b))) return false;
    }
  }
  return true;
}

ResidueSet read_set(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(name + ": empty set file");
  if (line.rfind("# p=", 0) != 0)
    throw ParseError(name + ": first line must be `# p=<modulus>`, got `" + line + "`");
  uint32_t p = 0;
  {
    const char* b = line.data() + 4;
    const char* e = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(b, e, p);
    if (ec != std::errc{} || ptr != e)
      throw ParseError(name + ": bad modulus in header `" + line + "`");
  }
  FieldModulus field(p);
  std::vector<uint32_t> values;
  bool have_prev = false;
  uint32_t prev = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw ParseError(name + ": blank line " + std::to_string(lineno));
    uint32_t v = 0;
    const char* b = line.data();
    const char* e = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e)
      throw ParseError(name + ": line " + std::to_string(lineno) + " is not a residue: `" +
                       line + "`");
    if (v >= p)
      throw ParseError(name + ": line " + std::to_string(lineno) + ": value " +
                       std::to_string(v) + " >= p");
    if (have_prev && v <= prev)
      throw ParseError(name + ": line " + std::to_string(lineno) +
                       ": values must be strictly ascending");
    values.push_back(v);
    prev = v;
    have_prev = true;
  }
  return ResidueSet::from_values(field, std::move(values));
}

ResidueSet load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file " + path);
  return read_set(in, path);
}

void write_set(const ResidueSet& set, std::ostream& out) {
  out << "# p=" << set.field().p() << "\n";
  for (uint32_t v : set.elements()) out << v << "\n";
}

void save_set_file(const ResidueSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_set(set, out);
  if (!out) throw ParseError("write to " + path + " failed");
}

std::vector<std::pair<uint32_t, uint64_t>> RepFunction::sorted() const {
  std::vector<std::pair<uint32_t, uint64_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fplab
