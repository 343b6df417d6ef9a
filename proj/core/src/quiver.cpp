#include "grmlab/quiver.hpp"

#include <algorithm>
#include <set>

#include "grmlab/errors.hpp"

namespace grmlab {

std::size_t Quiver::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

namespace {

void validate_quiver(const Quiver& q) {
  if (q.vertices.empty()) throw MalformedInput("quiver has no vertices");
  std::set<std::string> names(q.vertices.begin(), q.vertices.end());
  if (names.size() != q.vertices.size()) throw MalformedInput("duplicate vertex names");
  std::set<std::string> arrow_names;
  for (const auto& a : q.arrows) {
    if (!arrow_names.insert(a.name).second) throw MalformedInput("duplicate arrow name '" + a.name + "'");
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw UnknownVertex("arrow '" + a.name + "' references an undeclared vertex");
  }
}

struct ResolvedTerm {
  Scalar coeff;
  Path path;
};

std::vector<ResolvedTerm> resolve_relation(const Quiver& q, const PrimeField& f, const Relation& rel) {
  if (rel.empty()) throw MalformedRelation("empty relation");
  std::vector<ResolvedTerm> out;
  for (const auto& term : rel) {
    if (term.path.size() < 2) throw MalformedRelation("relation paths must have length >= 2");
    Path p;
    for (std::size_t k = 0; k < term.path.size(); ++k) {
      auto idx = q.arrow_index(term.path[k]);
      if (!idx) throw MalformedRelation("relation uses unknown arrow '" + term.path[k] + "'");
      const auto& a = q.arrows[*idx];
      if (k == 0) {
        p.source = a.source;
      } else if (q.arrows[p.arrows.back()].target != a.source) {
        throw MalformedRelation("relation path is not composable at arrow '" + a.name + "'");
      }
      p.arrows.push_back(*idx);
      p.target = a.target;
    }
    if (!out.empty() && (out.front().path.source != p.source || out.front().path.target != p.target))
      throw MalformedRelation("relation terms are not parallel paths");
    out.push_back({f.reduce(term.coeff), std::move(p)});
  }
  return out;
}

}  // namespace

BoundQuiverAlgebra::BoundQuiverAlgebra(AlgebraSpec spec) : spec_(std::move(spec)), field_(spec_.prime) {
  const auto& q = spec_.quiver;
  validate_quiver(q);
  if (spec_.nilpotency_bound < 1) throw MalformedInput("nilpotency_bound must be positive");
  const std::size_t n_bound = spec_.nilpotency_bound;
  const std::size_t nv = q.vertices.size();

  std::vector<std::vector<ResolvedTerm>> relations;
  for (const auto& r : spec_.relations) relations.push_back(resolve_relation(q, field_, r));

  // All paths of length <= N, grouped by length.
  std::vector<Path> paths;
  for (std::size_t v = 0; v < nv; ++v) paths.push_back(Path{v, v, {}});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= n_bound; ++len) {
    std::size_t layer_end = paths.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != paths[i].target) continue;
        Path ext = paths[i];
        ext.arrows.push_back(a);
        ext.target = q.arrows[a].target;
        paths.push_back(std::move(ext));
      }
    }
    layer_begin = layer_end;
  }

  // Columns ordered longest first, so leading terms of ideal elements are long paths.
  std::vector<std::size_t> order(paths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (paths[a].length() != paths[b].length()) return paths[a].length() > paths[b].length();
    return paths[a] < paths[b];
  });
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> column_of;
  for (std::size_t c = 0; c < order.size(); ++c) {
    const auto& p = paths[order[c]];
    column_of[{p.source, p.arrows}] = c;
  }
  const std::size_t ncols = order.size();

  std::vector<Vector> generators;
  for (const auto& rel : relations) {
    const auto s = rel.front().path.source;
    const auto t = rel.front().path.target;
    for (const auto& u : paths) {
      if (u.target != s) continue;
      for (const auto& w : paths) {
        if (w.source != t) continue;
        Vector g(ncols, 0);
        bool nonzero = false;
        for (const auto& term : rel) {
          std::size_t len = u.length() + term.path.length() + w.length();
          if (len > n_bound || term.coeff == 0) continue;
          std::vector<std::size_t> arrows = u.arrows;
          arrows.insert(arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
          arrows.insert(arrows.end(), w.arrows.begin(), w.arrows.end());
          auto c = column_of.at({u.source, arrows});
          g[c] = field_.add(g[c], term.coeff);
          nonzero = true;
        }
        if (nonzero) generators.push_back(std::move(g));
      }
    }
  }
  Subspace ideal = Subspace::span(field_, ncols, generators);

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : ideal.pivots()) is_pivot[c] = true;

  // Residue basis: non-pivot columns, listed by (length, source, arrows).
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::sort(free_cols.begin(), free_cols.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = paths[order[a]];
    const auto& pb = paths[order[b]];
    if (pa.length() != pb.length()) return pa.length() < pb.length();
    return pa < pb;
  });
  std::vector<std::size_t> basis_of_col(ncols, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    basis_.push_back(paths[order[free_cols[i]]]);
    basis_of_col[free_cols[i]] = i;
  }

  // Residue of every path of length <= N, reduced against the ideal.
  // Reduction may be nonzero only for residues parallel to the path, since the
  // ideal is spanned by parallel combinations.
  for (std::size_t c = 0; c < ncols; ++c) {
    Vector e(ncols, 0);
    e[c] = 1;
    auto r = ideal.reduce_vector(e);
    Vector coords(basis_.size(), 0);
    for (std::size_t k = 0; k < ncols; ++k)
      if (r[k] != 0) coords[basis_of_col[k]] = r[k];
    const auto& p = paths[order[c]];
    if (p.length() == n_bound && std::any_of(coords.begin(), coords.end(), [](Scalar x) { return x != 0; })) {
      throw AdmissibilityViolation("path " + path_name(p) + " of length " + std::to_string(n_bound) +
                                   " does not lie in the ideal; increase nilpotency_bound");
    }
    reduced_[{p.source, p.arrows}] = std::move(coords);
  }

  by_endpoints_.assign(nv * nv, {});
  local_index_.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto& bucket = by_endpoints_[basis_[i].source * nv + basis_[i].target];
    local_index_[i] = bucket.size();
    bucket.push_back(i);
  }
  trivial_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].length() == 0 && basis_[i].source == v) trivial_[v] = i;
  }

  mult_.assign(basis_.size() * basis_.size(), Vector(basis_.size(), 0));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (basis_[i].target != basis_[j].source) continue;
      std::vector<std::size_t> arrows = basis_[i].arrows;
      arrows.insert(arrows.end(), basis_[j].arrows.begin(), basis_[j].arrows.end());
      mult_[i * basis_.size() + j] = reduce_arrows(basis_[i].source, arrows);
    }
  }
}

Vector BoundQuiverAlgebra::reduce_arrows(std::size_t source, std::span<const std::size_t> arrows) const {
  if (arrows.size() > spec_.nilpotency_bound) return Vector(dim(), 0);
  auto it = reduced_.find({source, std::vector<std::size_t>(arrows.begin(), arrows.end())});
  if (it == reduced_.end()) throw MalformedInput("reduce_arrows: not a path of the quiver");
  return it->second;
}

Vector BoundQuiverAlgebra::reduce_path(const Path& path) const {
  return reduce_arrows(path.source, path.arrows);
}

std::string BoundQuiverAlgebra::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e" + spec_.quiver.vertices[p.source];
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += ".";
    s += spec_.quiver.arrows[p.arrows[k]].name;
  }
  return s;
}

AlgebraPtr build_algebra(AlgebraSpec spec) {
  return AlgebraPtr(new BoundQuiverAlgebra(std::move(spec)));
}

AlgebraSpec opposite_spec(const AlgebraSpec& spec) {
  AlgebraSpec op = spec;
  for (auto& a : op.quiver.arrows) std::swap(a.source, a.target);
  for (auto& rel : op.relations)
    for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
  return op;
}

AlgebraPtr opposite(const BoundQuiverAlgebra& alg) { return build_algebra(opposite_spec(alg.spec())); }

namespace {

bool same_spec(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.prime != b.prime || a.nilpotency_bound != b.nilpotency_bound) return false;
  if (a.quiver.vertices != b.quiver.vertices || a.quiver.arrows.size() != b.quiver.arrows.size())
    return false;
  for (std::size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    const auto& x = a.quiver.arrows[i];
    const auto& y = b.quiver.arrows[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t r = 0; r < a.relations.size(); ++r) {
    if (a.relations[r].size() != b.relations[r].size()) return false;
    for (std::size_t t = 0; t < a.relations[r].size(); ++t) {
      const auto& x = a.relations[r][t];
      const auto& y = b.relations[r][t];
      auto p = static_cast<std::int64_t>(a.prime);
      if (((x.coeff % p) + p) % p != ((y.coeff % p) + p) % p || x.path != y.path) return false;
    }
  }
  return true;
}

}  // namespace

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  return &a == &b || same_spec(a.spec(), b.spec());
}

bool is_opposite(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  return same_spec(opposite_spec(a.spec()), b.spec());
}

}  // namespace grmlab
