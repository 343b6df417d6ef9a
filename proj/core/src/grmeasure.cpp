#include "grmlab/grmeasure.hpp"

#include <sstream>

#include "grmlab/decomp.hpp"
#include "grmlab/errors.hpp"

namespace grmlab {

bool MeasureValue::is_valid() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= Rational(0)) return false;
    if (i && !(values[i - 1] < values[i])) return false;
  }
  return true;
}

MeasureValue MeasureValue::appended(const Rational& t) const {
  if (!values.empty() && !(values.back() < t)) throw CheckFailure("appended value does not exceed the measure");
  MeasureValue r = *this;
  r.values.push_back(t);
  return r;
}

std::string MeasureValue::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i].to_string();
  os << '}';
  return os.str();
}

std::strong_ordering measure_order(const MeasureValue& i, const MeasureValue& j) {
  const auto& a = i.values;
  const auto& b = j.values;
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  if (k == a.size() && k == b.size()) return std::strong_ordering::equal;
  if (k == a.size()) return std::strong_ordering::less;
  if (k == b.size()) return std::strong_ordering::greater;
  // The smaller of a[k], b[k] is the minimum of the symmetric difference.
  return a[k] < b[k] ? std::strong_ordering::greater : std::strong_ordering::less;
}

LatticeMeasures lattice_measures(const SubmoduleLattice& lattice, const LengthFunction& lambda, const Caps& caps) {
  const std::size_t n = lattice.size();
  LatticeMeasures r;
  r.end.resize(n);
  r.down.resize(n);
  r.down_arg.assign(n, -1);
  r.end_prev.assign(n, -1);
  // Nodes are in nondecreasing dimension order, so covers come first.
  for (std::size_t y = 0; y < n; ++y) {
    std::ptrdiff_t best = -1;
    for (auto u : lattice.lower_covers(y)) {
      if (r.down_arg[u] < 0) continue;
      if (best < 0 || r.down[best] < r.down[u]) best = static_cast<std::ptrdiff_t>(u);
    }
    if (lattice.is_indecomposable(y, caps)) {
      MeasureValue below = best < 0 ? MeasureValue{} : r.down[best];
      r.end[y] = below.appended(lambda(lattice.node(y).dims()));
      r.end_prev[y] = best < 0 ? -1 : r.down_arg[best];
      // end[y] exceeds every measure of a chain inside a proper submodule.
      r.down[y] = r.end[y];
      r.down_arg[y] = static_cast<std::ptrdiff_t>(y);
    } else if (best >= 0) {
      r.down[y] = r.down[best];
      r.down_arg[y] = r.down_arg[best];
    }
  }
  return r;
}

GRMeasure gr_measure(const SubmoduleLattice& lattice, const LengthFunction& lambda, const Caps& caps) {
  auto lm = lattice_measures(lattice, lambda, caps);
  GRMeasure out;
  const std::size_t t = lattice.top();
  if (lm.down_arg[t] < 0) return out;
  out.value = lm.down[t];
  std::vector<Submodule> rev;
  for (std::ptrdiff_t y = lm.down_arg[t]; y >= 0; y = lm.end_prev[y]) rev.push_back(lattice.node(y));
  out.witness.assign(rev.rbegin(), rev.rend());
  return out;
}

GRMeasure gr_measure_full_lattice(const Representation& m, const LengthFunction& lambda, const Caps& caps) {
  return gr_measure(all_submodules(m, caps), lambda, caps);
}

GRMeasure gr_measure(const Representation& m, const LengthFunction& lambda, const Caps& caps) {
  GRMeasure out;
  if (m.is_zero()) return out;
  auto d = decompose(m, caps);
  bool first = true;
  for (const auto& part : d.parts) {
    auto g = gr_measure_full_lattice(part.module, lambda, caps);
    if (first || out.value < g.value) {
      out.value = g.value;
      out.witness.clear();
      for (const auto& w : g.witness) out.witness.push_back(image_of(m, part.embeddings.front(), w));
      first = false;
    }
  }
  return out;
}

}  // namespace grmlab
