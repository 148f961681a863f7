#ifndef BRAIDKIT_COSET_HPP
#define BRAIDKIT_COSET_HPP

#include <cstdint>
#include <variant>

#include "braidkit/presentation.hpp"
#include "braidkit/word.hpp"

namespace braidkit {

/// Closed coset table: one column per generator and per inverse, rows are
/// live cosets (1-based, row 1 is the subgroup coset).
struct CosetTable {
  int generators = 0;                 // columns = 2 * generators
  std::vector<std::int32_t> entries;  // row-major over live cosets

  int rows() const {
    return generators == 0 ? 0
                           : static_cast<int>(entries.size()) / (2 * generators);
  }
  std::int32_t at(int coset, int column) const {
    return entries[static_cast<size_t>(coset - 1) * (2 * generators) + column];
  }
};

struct Completed {
  std::int64_t index = 0;
  CosetTable table;
};

struct Overflow {
  std::int64_t cosets_used = 0;
};

using EnumerationResult = std::variant<Completed, Overflow>;

inline const Completed* completed(const EnumerationResult& r) {
  return std::get_if<Completed>(&r);
}

/// Deterministic HLT-style Todd-Coxeter enumeration of the cosets of the
/// subgroup generated by `subgroup` in the group presented by `p`.
EnumerationResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            std::int64_t max_cosets = 1000000);

EnumerationResult index_of_parabolic(const Presentation& p,
                                     const std::vector<Word>& generator_subset_words,
                                     std::int64_t max_cosets = 1000000);

}  // namespace braidkit

#endif
