#include "grmlab/sublattice.hpp"

#include <limits>

#include "grmlab/decomp.hpp"
#include "grmlab/errors.hpp"

namespace grmlab {

std::vector<Scalar> submodule_key(const Submodule& u) {
  std::vector<Scalar> key;
  for (const auto& p : u.parts) {
    key.push_back(static_cast<Scalar>(p.dim()));
    const auto& d = p.basis().data();
    key.insert(key.end(), d.begin(), d.end());
  }
  return key;
}

std::optional<std::size_t> SubmoduleLattice::index_of(const Submodule& u) const {
  auto it = index_.find(submodule_key(u));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SubmoduleLattice::is_indecomposable(std::size_t i, const Caps& caps) const {
  if (indecomposable_[i] < 0) {
    const auto& u = nodes_[i];
    if (u.is_zero()) {
      indecomposable_[i] = 0;
    } else {
      indecomposable_[i] = grmlab::is_indecomposable(restrict_to(parent_, u).module, caps) ? 1 : 0;
    }
  }
  return indecomposable_[i] == 1;
}

SubmoduleLattice all_submodules(const Representation& m, const Caps& caps) {
  SubmoduleLattice lat(m);
  const auto& f = m.field();
  auto add_node = [&](Submodule u) -> std::size_t {
    auto key = submodule_key(u);
    auto [it, inserted] = lat.index_.emplace(std::move(key), lat.nodes_.size());
    if (inserted) {
      if (lat.nodes_.size() >= caps.max_submodules)
        throw LatticeCapExceeded("submodule lattice exceeds max_submodules = " + std::to_string(caps.max_submodules),
                                 lat.nodes_.size());
      lat.nodes_.push_back(std::move(u));
      lat.lower_.emplace_back();
      lat.upper_.emplace_back();
    }
    return it->second;
  };
  add_node(Submodule::zero(m));

  for (std::size_t cur = 0; cur < lat.nodes_.size(); ++cur) {
    const Submodule u = lat.nodes_[cur];
    auto q = quotient(m, u);
    auto soc = socle(q.module);
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
      const auto& s = soc.parts[v];
      const std::size_t k = s.dim();
      if (k == 0) continue;
      // Coefficient vectors with leading coefficient 1.
      for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t rest = k - lead - 1;
        VectorEnumerator en(f, rest, std::numeric_limits<std::uint64_t>::max());
        do {
          Vector qv(q.module.dim(v), 0);
          auto add_row = [&](std::size_t r, Scalar c) {
            auto row = s.basis().row(r);
            for (std::size_t t = 0; t < qv.size(); ++t) qv[t] = f.add(qv[t], f.mul(c, row[t]));
          };
          add_row(lead, 1);
          for (std::size_t r = 0; r < rest; ++r) add_row(lead + 1 + r, en.current()[r]);
          Submodule w = u;
          w.parts[v] = w.parts[v].with(q.lift[v] * qv);
          std::size_t idx = add_node(std::move(w));
          lat.covers_.emplace_back(cur, idx);
          lat.lower_[idx].push_back(cur);
          lat.upper_[cur].push_back(idx);
        } while (en.next());
      }
    }
  }
  lat.indecomposable_.assign(lat.nodes_.size(), -1);
  return lat;
}

std::vector<std::size_t> indecomposable_submodules(const SubmoduleLattice& lattice, const Caps& caps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.is_indecomposable(i, caps)) out.push_back(i);
  return out;
}

}  // namespace grmlab
