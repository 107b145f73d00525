#include "seminf/rook.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "strings.hpp"

namespace seminf {

PartialInjection::PartialInjection(int m) {
  if (m < 1) throw BadIndexError(concat("dimension ", m, " must be positive"));
  image_.assign(m, kUndefined);
}

PartialInjection PartialInjection::from_map(std::vector<int> image) {
  const int m = static_cast<int>(image.size());
  if (m < 1) throw BadIndexError("empty image sequence");
  std::vector<char> used(m, 0);
  for (int row : image) {
    if (row == kUndefined) continue;
    if (row < 0 || row >= m)
      throw BadIndexError(concat("row ", row + 1, " out of range 1..", m));
    if (used[row])
      throw OverlapError(concat("row ", row + 1, " hit by two columns"));
    used[row] = 1;
  }
  PartialInjection p(m);
  p.image_ = std::move(image);
  return p;
}

PartialInjection PartialInjection::identity(int m) {
  PartialInjection p(m);
  for (int j = 0; j < m; ++j) p.image_[j] = j;
  return p;
}

bool PartialInjection::is_empty_map() const {
  return std::all_of(image_.begin(), image_.end(),
                     [](int r) { return r == kUndefined; });
}

bool PartialInjection::is_identity() const {
  for (int j = 0; j < dimension(); ++j)
    if (image_[j] != j) return false;
  return true;
}

std::vector<std::pair<int, int>> PartialInjection::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < dimension(); ++j)
    if (defined(j)) out.emplace_back(j + 1, image_[j] + 1);
  return out;
}

std::vector<std::vector<int>> PartialInjection::to_matrix() const {
  const int m = dimension();
  std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
  for (int j = 0; j < m; ++j)
    if (defined(j)) mat[image_[j]][j] = 1;
  return mat;
}

PartialInjection PartialInjection::from_matrix(
    const std::vector<std::vector<int>>& mat) {
  const int m = static_cast<int>(mat.size());
  if (m < 1) throw BadIndexError("empty matrix");
  std::vector<int> image(m, kUndefined);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(mat[i].size()) != m)
      throw DimensionMismatchError("matrix is not square");
    int ones = 0;
    for (int j = 0; j < m; ++j) {
      if (mat[i][j] == 0) continue;
      if (mat[i][j] != 1)
        throw BadIndexError(concat("entry (", i + 1, ",", j + 1,
                                   ") is not zero or one"));
      ++ones;
      if (image[j] != kUndefined)
        throw OverlapError(concat("column ", j + 1, " has two ones"));
      image[j] = i;
    }
    if (ones > 1) throw OverlapError(concat("row ", i + 1, " has two ones"));
  }
  PartialInjection p(m);
  p.image_ = std::move(image);
  return p;
}

std::size_t PartialInjection::hash() const {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ULL;
  for (int r : image_) {
    h ^= static_cast<std::size_t>(r + 1);
    h *= 1099511628211ULL;
  }
  return h;
}

PartialInjection compose(const PartialInjection& p, const PartialInjection& q) {
  if (p.dimension() != q.dimension())
    throw DimensionMismatchError(concat("dimensions ", p.dimension(), " and ",
                                        q.dimension(), " differ"));
  std::vector<int> image(p.dimension(), PartialInjection::kUndefined);
  for (int j = 0; j < q.dimension(); ++j) {
    const int mid = q.apply(j);
    if (mid != PartialInjection::kUndefined &&
        p.apply(mid) != PartialInjection::kUndefined)
      image[j] = p.apply(mid);
  }
  return PartialInjection::from_map(std::move(image));
}

PartialInjection transpose(const PartialInjection& p) {
  std::vector<int> image(p.dimension(), PartialInjection::kUndefined);
  for (int j = 0; j < p.dimension(); ++j)
    if (p.defined(j)) image[p.apply(j)] = j;
  return PartialInjection::from_map(std::move(image));
}

PartialInjection unite(const PartialInjection& p, const PartialInjection& q) {
  if (p.dimension() != q.dimension())
    throw DimensionMismatchError(concat("dimensions ", p.dimension(), " and ",
                                        q.dimension(), " differ"));
  std::vector<int> image(p.image().begin(), p.image().end());
  for (int j = 0; j < q.dimension(); ++j) {
    if (!q.defined(j)) continue;
    if (image[j] != PartialInjection::kUndefined)
      throw OverlapError(concat("column ", j + 1, " defined in both maps"));
    image[j] = q.apply(j);
  }
  return PartialInjection::from_map(std::move(image));  // checks row overlap
}

PartialInjection matrix_unit(int m, int i, int j) {
  if (i < 1 || i > m || j < 1 || j > m)
    throw BadIndexError(concat("matrix unit (", i, ",", j,
                               ") out of range for dimension ", m));
  std::vector<int> image(m, PartialInjection::kUndefined);
  image[j - 1] = i - 1;
  return PartialInjection::from_map(std::move(image));
}

PartialInjection ck_generator(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw BadIndexError(concat("c_", k, " undefined for n = ", n));
  const int m = 2 * n + 1;
  return unite(matrix_unit(m, k + 1, k), matrix_unit(m, n + k, n + k + 1));
}

namespace {

/// Deterministic name for a closure element discovered at `index`: the empty
/// map is "0", the identity map is "1", transposes of named elements get a
/// trailing apostrophe, everything else is a<index>.
std::string closure_name(const PartialInjection& p, int index,
                         const std::string& transposed_from) {
  if (p.is_empty_map()) return "0";
  if (p.is_identity()) return "1";
  if (!transposed_from.empty() && transposed_from.back() != '\'')
    return transposed_from + "'";
  return concat("a", index);
}

}  // namespace

GeneratedAlgebra generate_closure(const std::vector<PartialInjection>& gens,
                                  const ClosureOptions& options) {
  if (gens.empty()) throw Error("generate_closure: no generators");
  const int m = gens.front().dimension();
  for (const auto& g : gens)
    if (g.dimension() != m)
      throw DimensionMismatchError("generators have mixed dimensions");

  std::vector<PartialInjection> elems;
  std::vector<std::string> names;
  std::unordered_map<PartialInjection, int> index;
  std::vector<int> generator_indices;

  auto try_add = [&](const PartialInjection& p,
                     const std::string& name_hint) -> int {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    if (elems.size() >= options.budget)
      throw ClosureBudgetError(options.budget,
                               concat("closure exceeds ", options.budget,
                                      " elements"));
    const int id = static_cast<int>(elems.size());
    elems.push_back(p);
    std::string name = closure_name(p, id, name_hint);
    // Name collisions can only come from caller-provided generator names.
    while (std::find(names.begin(), names.end(), name) != names.end())
      name += "_";
    names.push_back(std::move(name));
    index.emplace(p, id);
    return id;
  };

  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::string provided = g < options.generator_names.size()
                               ? options.generator_names[g]
                               : concat("g", g + 1);
    auto it = index.find(gens[g]);
    if (it != index.end()) {
      generator_indices.push_back(it->second);
      continue;
    }
    const int id = static_cast<int>(elems.size());
    if (elems.size() >= options.budget)
      throw ClosureBudgetError(options.budget, "closure budget exhausted");
    elems.push_back(gens[g]);
    while (std::find(names.begin(), names.end(), provided) != names.end())
      provided += "_";
    names.push_back(std::move(provided));
    index.emplace(gens[g], id);
    generator_indices.push_back(id);
  }

  // Breadth-first: processing element k covers transpose(k) and every
  // product with the elements discovered before it; the pair (a,b) is
  // handled when the later of the two is processed.
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (options.with_inverses) {
      const PartialInjection t = transpose(elems[k]);
      try_add(t, names[k]);
    }
    for (std::size_t j = 0; j <= k; ++j) {
      try_add(compose(elems[k], elems[j]), "");
      if (j != k) try_add(compose(elems[j], elems[k]), "");
    }
  }

  if (options.adjoin_identity) try_add(PartialInjection::identity(m), "");

  const int n = static_cast<int>(elems.size());
  GeneratedAlgebra out;
  out.generators = std::move(generator_indices);
  out.reps = elems;
  out.base.name = options.name;
  out.base.elements = std::move(names);
  out.base.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[a], elems[b]));
      if (it == index.end())
        throw ClosureBudgetError(options.budget,
                                 "closure truncated by adjoined element");
      out.base.mul[a * n + b] = it->second;
    }

  bool transpose_closed = true;
  std::vector<int> inv(n);
  for (int a = 0; a < n && transpose_closed; ++a) {
    auto it = index.find(transpose(elems[a]));
    if (it == index.end())
      transpose_closed = false;
    else
      inv[a] = it->second;
  }
  if (transpose_closed) out.base.inv = std::move(inv);
  return out;
}

GeneratedAlgebra brandt_b21() {
  GeneratedAlgebra out;
  out.reps = {PartialInjection(2),           PartialInjection::identity(2),
              matrix_unit(2, 1, 2),          matrix_unit(2, 2, 1),
              matrix_unit(2, 1, 1),          matrix_unit(2, 2, 2)};
  out.base.name = "b21";
  out.base.elements = {"0", "E", "E12", "E21", "E11", "E22"};
  out.generators = {2, 3};

  std::unordered_map<PartialInjection, int> index;
  for (int i = 0; i < 6; ++i) index.emplace(out.reps[i], i);
  out.base.mul.resize(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      out.base.mul[a * 6 + b] = index.at(compose(out.reps[a], out.reps[b]));
  out.base.inv.resize(6);
  for (int a = 0; a < 6; ++a)
    out.base.inv[a] = index.at(transpose(out.reps[a]));
  return out;
}

GeneratedAlgebra cn(int n, std::size_t budget) {
  if (n < 2) throw Error(concat("C_n requires n >= 2, got ", n));
  std::vector<PartialInjection> gens;
  ClosureOptions options;
  options.with_inverses = true;
  options.adjoin_identity = false;
  options.budget = budget;
  options.name = concat("c", n);
  for (int k = 1; k <= n; ++k) {
    gens.push_back(ck_generator(n, k));
    options.generator_names.push_back(concat("c", k));
  }
  return generate_closure(gens, options);
}

std::vector<int> mk_indices(const GeneratedAlgebra& c, int k) {
  if (k < 1 || k > static_cast<int>(c.generators.size()))
    throw BadIndexError(concat("k = ", k, " out of range 1..",
                               c.generators.size()));
  if (!c.base.has_inv()) throw Error("mk_indices: algebra has no inverses");
  const int ck = c.generators[k - 1];
  const int ck_inv = c.base.inverse(ck);
  std::vector<int> out;
  out.reserve(c.base.size() - 2);
  for (int a = 0; a < c.base.size(); ++a)
    if (a != ck && a != ck_inv) out.push_back(a);
  return out;
}

FiniteAlgebra mk_algebra(const GeneratedAlgebra& c, int k) {
  const std::vector<int> subset = mk_indices(c, k);
  return restrict_algebra(c.base, subset,
                          concat("m", k, "_", c.generators.size()));
}

}  // namespace seminf
