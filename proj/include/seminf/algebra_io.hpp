#ifndef SEMINF_ALGEBRA_IO_HPP
#define SEMINF_ALGEBRA_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "seminf/algebra.hpp"
#include "seminf/rook.hpp"

namespace seminf {

/// Contents of one algebra file: the tables plus the optional rook-matrix
/// section.
struct AlgebraFile {
  FiniteAlgebra algebra;
  std::vector<PartialInjection> matrices;  // empty when absent
  std::vector<int> generators;             // indices of elements named like
                                           // c1..cn, when such names exist

  bool has_matrices() const { return !matrices.empty(); }
};

/// Line-oriented text format, '#' starts a comment line:
///   %algebra NAME
///   %elements e1 e2 ... en
///   %mul
///   <n lines of n element names>
///   %inv e1' e2' ... en'      (optional)
///   %add                      (optional, n lines like %mul)
///   %matrices                 (optional, one "NAME: c1->r1 c2->r2 ..." line
///                              per element, columns ascending, 1-based)
/// Unknown directives are errors. The matrix dimension is the largest index
/// mentioned in the %matrices section.
AlgebraFile read_algebra_file(std::istream& in);
AlgebraFile load_algebra_file(const std::filesystem::path& path);

void write_algebra_file(std::ostream& out, const FiniteAlgebra& algebra);
void write_algebra_file(std::ostream& out, const GeneratedAlgebra& algebra);

std::string to_algebra_text(const FiniteAlgebra& algebra);
std::string to_algebra_text(const GeneratedAlgebra& algebra);

void save_algebra_file(const std::filesystem::path& path,
                       const FiniteAlgebra& algebra);
void save_algebra_file(const std::filesystem::path& path,
                       const GeneratedAlgebra& algebra);

/// Rebuilds the generated-algebra view of a loaded file. Throws Error when
/// the file has no %matrices section.
GeneratedAlgebra to_generated(const AlgebraFile& file);

}  // namespace seminf

#endif  // SEMINF_ALGEBRA_IO_HPP
