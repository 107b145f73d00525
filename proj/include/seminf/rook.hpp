#ifndef SEMINF_ROOK_HPP
#define SEMINF_ROOK_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "seminf/algebra.hpp"

namespace seminf {

/// A zero-one m x m matrix with at most one 1 per row and per column,
/// stored as a partial injective map from columns to rows. An entry 1 at
/// (i, j) means column j maps to row i, so composition in map order matches
/// the matrix product order. Internally 0-based; the textual interfaces are
/// 1-based like the matrix convention.
class PartialInjection {
public:
  static constexpr int kUndefined = -1;

  /// The empty map (all-zero matrix) of dimension m >= 1.
  explicit PartialInjection(int m);

  /// image[col] = row, or kUndefined. Throws OverlapError when two columns
  /// hit one row, BadIndexError on out-of-range entries.
  static PartialInjection from_map(std::vector<int> image);

  static PartialInjection identity(int m);

  int dimension() const { return static_cast<int>(image_.size()); }
  int apply(int col) const { return image_[col]; }
  bool defined(int col) const { return image_[col] != kUndefined; }
  bool is_empty_map() const;
  bool is_identity() const;

  /// Canonical encoding: the image sequence itself.
  std::span<const int> image() const { return image_; }

  /// Defined (column, row) pairs, 1-based, in increasing column order.
  std::vector<std::pair<int, int>> pairs() const;

  std::vector<std::vector<int>> to_matrix() const;
  static PartialInjection from_matrix(const std::vector<std::vector<int>>& m);

  friend bool operator==(const PartialInjection&,
                         const PartialInjection&) = default;
  friend auto operator<=>(const PartialInjection&,
                          const PartialInjection&) = default;

  std::size_t hash() const;

private:
  std::vector<int> image_;
};

/// Matrix product p.q: column j is defined iff q maps j and p maps q(j).
/// Throws DimensionMismatchError.
PartialInjection compose(const PartialInjection& p, const PartialInjection& q);

/// Matrix transposition; the inverse partial map.
PartialInjection transpose(const PartialInjection& p);

/// Union of two maps with disjoint domains and disjoint ranges (entrywise
/// matrix sum of non-overlapping rook matrices). Throws OverlapError.
PartialInjection unite(const PartialInjection& p, const PartialInjection& q);

/// The m x m matrix unit E_ij (1-based): column j maps to row i.
PartialInjection matrix_unit(int m, int i, int j);

/// The generator c_k = E_{k+1,k} + E_{n+k,n+k+1} of dimension m = 2n+1,
/// for 1 <= k <= n.
PartialInjection ck_generator(int n, int k);

/// A finite algebra whose elements carry rook-matrix representatives.
struct GeneratedAlgebra {
  FiniteAlgebra base;
  std::vector<PartialInjection> reps;  // reps[i] realizes element i
  std::vector<int> generators;         // element indices of the generators
};

struct ClosureOptions {
  bool with_inverses = true;
  bool adjoin_identity = false;
  std::size_t budget = 1'000'000;
  std::vector<std::string> generator_names;  // default g1, g2, ...
  std::string name = "closure";
};

/// Closure of the generators under composition (and transposition when
/// flagged), elements numbered in breadth-first discovery order, tables
/// filled by lookup of canonical encodings. The inverse table is attached
/// whenever the resulting set is closed under transposition. Throws
/// ClosureBudgetError past `budget` elements.
GeneratedAlgebra generate_closure(const std::vector<PartialInjection>& gens,
                                  const ClosureOptions& options = {});

/// The 6-element Brandt monoid over 2x2 rook matrices, elements ordered
/// 0, E, E12, E21, E11, E22.
GeneratedAlgebra brandt_b21();

/// The inverse semigroup C_n generated by c_1..c_n and their transposes
/// inside the rook monoid of dimension 2n+1. Requires n >= 2.
GeneratedAlgebra cn(int n, std::size_t budget = 1'000'000);

/// Element indices of M_k(n) = C_n minus {c_k, c_k^-1}, ascending.
std::vector<int> mk_indices(const GeneratedAlgebra& c, int k);

/// M_k(n) as a standalone algebra by table restriction.
FiniteAlgebra mk_algebra(const GeneratedAlgebra& c, int k);

}  // namespace seminf

template <>
struct std::hash<seminf::PartialInjection> {
  std::size_t operator()(const seminf::PartialInjection& p) const {
    return p.hash();
  }
};

#endif  // SEMINF_ROOK_HPP
