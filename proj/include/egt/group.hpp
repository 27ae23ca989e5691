#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "egt/config.hpp"
#include "egt/graph.hpp"

namespace egt {

// Square matrix over Z/m with dim 2 or 3, entries reduced to [0, m).
struct ModMatrix {
  int dim = 2;
  int modulus = 2;
  std::array<std::int32_t, 9> e{};  // row-major, unused tail stays zero

  static ModMatrix identity(int dim, int modulus);
  static ModMatrix from_entries(int dim, int modulus,
                                const std::vector<std::int64_t>& entries);

  std::int32_t at(int i, int j) const { return e[i * dim + j]; }
  ModMatrix mul(const ModMatrix& rhs) const;
  ModMatrix inverse() const;  // adjugate; requires det = 1 (mod m)
  std::int32_t det() const;
  bool is_identity() const;
  std::string str() const;  // row-major entries, space separated

  bool operator==(const ModMatrix&) const = default;
};

struct ModMatrixHash {
  std::size_t operator()(const ModMatrix& m) const;
};

// Standard unitriangular / transvection generators, symmetrized and
// deduplicated after reduction mod m (mod 2 collapses each pair).
std::vector<ModMatrix> sl_generators(int dim, int modulus);

ModMatrix reduce_entries(const ModMatrix& m, int modulus);

// Finite group enumerated by breadth-first closure from the identity, in
// generator-index order.  Element 0 is the identity; the element order is
// the canonical order used by every downstream artifact.
class FiniteGroup {
 public:
  static FiniteGroup enumerate(std::vector<ModMatrix> gens,
                               std::int64_t order_cap = 2'000'000);

  int size() const { return static_cast<int>(elems_.size()); }
  const ModMatrix& element(int i) const { return elems_[i]; }
  int index_of(const ModMatrix& m) const;  // -1 when absent
  int mul(int i, int j) const;
  int inverse(int i) const { return inv_[i]; }
  const std::vector<int>& generators() const { return gens_; }
  int degree() const { return static_cast<int>(gens_.size()); }
  const std::vector<std::string>& generator_notes() const { return notes_; }
  std::string label(int i) const { return elems_[i].str(); }

  // The elements must form a subgroup (checked); result has its own
  // canonical order with the same matrices.
  FiniteGroup subgroup(const std::vector<int>& element_indices) const;

 private:
  std::vector<ModMatrix> elems_;
  std::unordered_map<ModMatrix, int, ModMatrixHash> index_;
  std::vector<int> gens_;
  std::vector<int> inv_;
  std::vector<std::string> notes_;
};

// Z/n as upper unitriangular 2x2 matrices over Z/n; steps are symmetrized
// (each k paired with n-k) and deduplicated, 0 excluded.
FiniteGroup cyclic_group(int n, std::vector<int> steps = {1});

struct CayleyGraph {
  Graph graph;                      // vertex i <-> group element i
  std::vector<std::string> labels;  // element strings, by vertex
};
CayleyGraph cayley_graph(const FiniteGroup& g);

struct ReductionHom {
  int dim = 0, source_mod = 0, target_mod = 0;
  std::vector<int> map;     // source element index -> target element index
  std::vector<int> kernel;  // source elements mapping to the identity
  bool surjective = false;
};
ReductionHom reduction_hom(const FiniteGroup& source, const FiniteGroup& target);

struct ReductionData {
  FiniteGroup source, target;
  ReductionHom hom;
};
// Builds SL_dim(Z/n) -> SL_dim(Z/m) for m | n, m < n.
ReductionData make_reduction(int dim, int n, int m, const Caps& caps = {});

// Parses "sl:<dim>:<modulus>" or "cyclic:<n>" (optionally "cyclic:<n>:k1,k2").
FiniteGroup group_from_spec(const std::string& spec, const Caps& caps = {});

}  // namespace egt
