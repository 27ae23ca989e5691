#include "egt/group.hpp"

#include <algorithm>
#include <sstream>

#include "egt/errors.hpp"

namespace egt {

namespace {

std::int64_t mod_reduce(std::int64_t x, int m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

ModMatrix ModMatrix::identity(int dim, int modulus) {
  ModMatrix m;
  m.dim = dim;
  m.modulus = modulus;
  for (int i = 0; i < dim; ++i) m.e[i * dim + i] = 1 % modulus;
  return m;
}

ModMatrix ModMatrix::from_entries(int dim, int modulus,
                                  const std::vector<std::int64_t>& entries) {
  if (dim != 2 && dim != 3) throw ValidationError("matrix dim must be 2 or 3");
  if (modulus < 2) throw ValidationError("modulus must be >= 2");
  if (entries.size() != static_cast<std::size_t>(dim) * dim)
    throw ValidationError("matrix entry count mismatch");
  ModMatrix m;
  m.dim = dim;
  m.modulus = modulus;
  for (int i = 0; i < dim * dim; ++i)
    m.e[i] = static_cast<std::int32_t>(mod_reduce(entries[i], modulus));
  return m;
}

ModMatrix ModMatrix::mul(const ModMatrix& rhs) const {
  ModMatrix out;
  out.dim = dim;
  out.modulus = modulus;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < dim; ++k)
        s += static_cast<std::int64_t>(at(i, k)) * rhs.at(k, j);
      out.e[i * dim + j] = static_cast<std::int32_t>(s % modulus);
    }
  return out;
}

std::int32_t ModMatrix::det() const {
  std::int64_t d;
  if (dim == 2) {
    d = static_cast<std::int64_t>(e[0]) * e[3] -
        static_cast<std::int64_t>(e[1]) * e[2];
  } else {
    d = static_cast<std::int64_t>(e[0]) * (static_cast<std::int64_t>(e[4]) * e[8] - static_cast<std::int64_t>(e[5]) * e[7]) -
        static_cast<std::int64_t>(e[1]) * (static_cast<std::int64_t>(e[3]) * e[8] - static_cast<std::int64_t>(e[5]) * e[6]) +
        static_cast<std::int64_t>(e[2]) * (static_cast<std::int64_t>(e[3]) * e[7] - static_cast<std::int64_t>(e[4]) * e[6]);
  }
  return static_cast<std::int32_t>(mod_reduce(d, modulus));
}

ModMatrix ModMatrix::inverse() const {
  if (det() != 1 % modulus)
    throw ValidationError("inverse: determinant is not 1 (mod " +
                          std::to_string(modulus) + ")");
  ModMatrix out;
  out.dim = dim;
  out.modulus = modulus;
  if (dim == 2) {
    out.e[0] = static_cast<std::int32_t>(mod_reduce(e[3], modulus));
    out.e[1] = static_cast<std::int32_t>(mod_reduce(-e[1], modulus));
    out.e[2] = static_cast<std::int32_t>(mod_reduce(-e[2], modulus));
    out.e[3] = static_cast<std::int32_t>(mod_reduce(e[0], modulus));
  } else {
    auto cof = [&](int r0, int c0, int r1, int c1) {
      return static_cast<std::int64_t>(at(r0, c0)) * at(r1, c1) -
             static_cast<std::int64_t>(at(r0, c1)) * at(r1, c0);
    };
    // adjugate = transposed cofactor matrix; det = 1 so this is the inverse
    const std::int64_t adj[9] = {
        cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2),
        -cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2),
        cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)};
    for (int i = 0; i < 9; ++i)
      out.e[i] = static_cast<std::int32_t>(mod_reduce(adj[i], modulus));
  }
  return out;
}

bool ModMatrix::is_identity() const {
  return *this == identity(dim, modulus);
}

std::string ModMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < dim * dim; ++i) {
    if (i) out << ' ';
    out << e[i];
  }
  return out.str();
}

std::size_t ModMatrixHash::operator()(const ModMatrix& m) const {
  std::size_t h = static_cast<std::size_t>(m.dim) * 1315423911u + m.modulus;
  for (int i = 0; i < m.dim * m.dim; ++i)
    h = h * 1000003u + static_cast<std::size_t>(m.e[i]);
  return h;
}

std::vector<ModMatrix> sl_generators(int dim, int modulus) {
  if (dim != 2 && dim != 3)
    throw ValidationError("sl_generators: dim must be 2 or 3");
  if (modulus < 2) throw ValidationError("sl_generators: modulus must be >= 2");
  std::vector<ModMatrix> out;
  auto push = [&out](const ModMatrix& m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  if (dim == 2) {
    ModMatrix a = ModMatrix::from_entries(2, modulus, {1, 1, 0, 1});
    ModMatrix b = ModMatrix::from_entries(2, modulus, {1, 0, 1, 1});
    push(a);
    push(a.inverse());
    push(b);
    push(b.inverse());
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        for (int s : {1, -1}) {
          std::vector<std::int64_t> ent(9, 0);
          ent[0] = ent[4] = ent[8] = 1;
          ent[i * 3 + j] = s;
          push(ModMatrix::from_entries(3, modulus, ent));
        }
      }
  }
  return out;
}

ModMatrix reduce_entries(const ModMatrix& m, int modulus) {
  ModMatrix out;
  out.dim = m.dim;
  out.modulus = modulus;
  for (int i = 0; i < m.dim * m.dim; ++i)
    out.e[i] = static_cast<std::int32_t>(mod_reduce(m.e[i], modulus));
  return out;
}

FiniteGroup FiniteGroup::enumerate(std::vector<ModMatrix> gens,
                                   std::int64_t order_cap) {
  if (gens.empty()) throw ValidationError("enumerate: no generators");
  const int dim = gens[0].dim;
  const int mod = gens[0].modulus;
  FiniteGroup g;

  // Dedup and drop identity, with a note rather than a rejection; mod-2
  // reductions naturally collapse a generator with its inverse.
  std::vector<ModMatrix> kept;
  for (const auto& s : gens) {
    if (s.dim != dim || s.modulus != mod)
      throw ValidationError("enumerate: mixed generator shapes");
    if (s.det() != 1 % mod)
      throw ValidationError("enumerate: generator determinant is not 1: " +
                            s.str());
    if (s.is_identity()) {
      g.notes_.push_back("dropped identity generator");
      continue;
    }
    if (std::find(kept.begin(), kept.end(), s) != kept.end()) {
      g.notes_.push_back("dropped duplicate generator " + s.str());
      continue;
    }
    kept.push_back(s);
  }
  if (kept.empty()) throw ValidationError("enumerate: no usable generators");
  for (const auto& s : kept) {
    auto inv = s.inverse();
    if (std::find(kept.begin(), kept.end(), inv) == kept.end())
      throw ValidationError("enumerate: generator set is not symmetric (missing inverse of " +
                            s.str() + ")");
  }

  ModMatrix id = ModMatrix::identity(dim, mod);
  g.elems_.push_back(id);
  g.index_.emplace(id, 0);
  std::size_t head = 0;
  while (head < g.elems_.size()) {
    ModMatrix cur = g.elems_[head++];
    for (const auto& s : kept) {
      ModMatrix nxt = cur.mul(s);
      if (g.index_.emplace(nxt, static_cast<int>(g.elems_.size())).second) {
        g.elems_.push_back(nxt);
        if (static_cast<std::int64_t>(g.elems_.size()) > order_cap)
          throw ResourceError("group enumeration exceeded order cap " +
                              std::to_string(order_cap));
      }
    }
  }

  g.gens_.reserve(kept.size());
  for (const auto& s : kept) g.gens_.push_back(g.index_.at(s));
  g.inv_.resize(g.size());
  for (int i = 0; i < g.size(); ++i) g.inv_[i] = g.index_.at(g.elems_[i].inverse());
  return g;
}

int FiniteGroup::index_of(const ModMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int i, int j) const {
  return index_.at(elems_[i].mul(elems_[j]));
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& element_indices) const {
  std::vector<char> in(size(), 0);
  for (int i : element_indices) {
    if (i < 0 || i >= size())
      throw ValidationError("subgroup: element index out of range");
    in[i] = 1;
  }
  if (!in[0]) throw ValidationError("subgroup: identity missing");
  for (int i : element_indices) {
    if (!in[inverse(i)])
      throw ValidationError("subgroup: not closed under inverse");
    for (int j : element_indices)
      if (!in[mul(i, j)]) throw ValidationError("subgroup: not closed under multiplication");
  }
  // Use the member matrices themselves as generators; BFS closure re-derives
  // a canonical order with identity first.
  std::vector<ModMatrix> gens;
  for (int i : element_indices)
    if (i != 0) gens.push_back(elems_[i]);
  if (gens.empty()) {
    FiniteGroup t;
    t.elems_.push_back(elems_[0]);
    t.index_.emplace(elems_[0], 0);
    t.inv_.push_back(0);
    return t;
  }
  return enumerate(std::move(gens), size());
}

FiniteGroup cyclic_group(int n, std::vector<int> steps) {
  if (n < 2) throw ValidationError("cyclic group needs n >= 2");
  std::vector<ModMatrix> gens;
  for (int k : steps) {
    for (int s : {k, n - k}) {
      ModMatrix m = ModMatrix::from_entries(2, n, {1, s, 0, 1});
      gens.push_back(m);
    }
  }
  return FiniteGroup::enumerate(std::move(gens), n + 1);
}

CayleyGraph cayley_graph(const FiniteGroup& g) {
  if (g.degree() == 0)
    throw ValidationError("cayley_graph: group has no generator set");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.size()) * g.degree() / 2);
  for (int i = 0; i < g.size(); ++i)
    for (int s : g.generators()) {
      int j = g.mul(i, s);
      if (i < j)
        edges.emplace_back(i, j);
      else
        edges.emplace_back(j, i);
    }
  CayleyGraph out;
  out.graph = build_graph(g.size(), std::move(edges), "Cay");
  out.labels.reserve(g.size());
  for (int i = 0; i < g.size(); ++i) out.labels.push_back(g.label(i));
  return out;
}

ReductionHom reduction_hom(const FiniteGroup& source, const FiniteGroup& target) {
  const ModMatrix& s0 = source.element(0);
  const ModMatrix& t0 = target.element(0);
  if (s0.dim != t0.dim) throw ValidationError("reduction: dimension mismatch");
  if (t0.modulus >= s0.modulus || s0.modulus % t0.modulus != 0)
    throw ValidationError("reduction: target modulus must properly divide source modulus");
  ReductionHom hom;
  hom.dim = s0.dim;
  hom.source_mod = s0.modulus;
  hom.target_mod = t0.modulus;
  hom.map.resize(source.size());
  std::vector<char> hit(target.size(), 0);
  for (int i = 0; i < source.size(); ++i) {
    int j = target.index_of(reduce_entries(source.element(i), t0.modulus));
    if (j < 0)
      throw ValidationError("reduction: image not found in target group for " +
                            source.element(i).str());
    hom.map[i] = j;
    hit[j] = 1;
    if (j == 0) hom.kernel.push_back(i);
  }
  hom.surjective = std::find(hit.begin(), hit.end(), 0) == hit.end();
  return hom;
}

ReductionData make_reduction(int dim, int n, int m, const Caps& caps) {
  if (m < 2) throw ValidationError("reduction: target modulus must be >= 2");
  if (m >= n || n % m != 0)
    throw ValidationError("reduction: need m | n with m < n (got n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) + ")");
  ReductionData data{
      FiniteGroup::enumerate(sl_generators(dim, n), caps.group_order),
      FiniteGroup::enumerate(sl_generators(dim, m), caps.group_order),
      {}};
  data.hom = reduction_hom(data.source, data.target);
  return data;
}

FiniteGroup group_from_spec(const std::string& spec, const Caps& caps) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() >= 2 && parts[0] == "sl") {
      if (parts.size() != 3) throw ValidationError("group spec: want sl:<dim>:<modulus>");
      return FiniteGroup::enumerate(
          sl_generators(std::stoi(parts[1]), std::stoi(parts[2])),
          caps.group_order);
    }
    if (parts.size() >= 2 && parts[0] == "cyclic") {
      int n = std::stoi(parts[1]);
      std::vector<int> steps{1};
      if (parts.size() == 3) {
        steps.clear();
        std::stringstream gs(parts[2]);
        std::string tok;
        while (std::getline(gs, tok, ',')) steps.push_back(std::stoi(tok));
      }
      return cyclic_group(n, steps);
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError("bad group spec '" + spec + "': " + e.what());
  }
  throw ValidationError("unknown group spec '" + spec +
                        "' (want sl:<dim>:<mod> or cyclic:<n>)");
}

}  // namespace egt
