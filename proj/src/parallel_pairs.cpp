#include "surfhh/parallel_pairs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace surfhh {

std::string format_dims(const std::vector<long>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims[i]);
  }
  return out + "]";
}

std::vector<Path> ap_paths(const GentlePresentation& p, int n) {
  if (n < 0) throw std::invalid_argument("AP_n needs n >= 0");
  const auto& q = p.quiver();
  std::vector<Path> out;
  if (n == 0) {
    for (VertexId v = 0; v < q.vertex_count(); ++v) out.push_back(trivial_path(v));
    return out;
  }
  std::vector<Path> layer;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) layer.push_back(arrow_path(q, a));
  for (int len = 1; len < n; ++len) {
    std::vector<Path> next;
    for (const auto& path : layer)
      for (ArrowId b : q.out_arrows(path.target)) {
        if (!p.is_relation(path.arrows.back(), b)) continue;
        Path longer = path;
        longer.arrows.push_back(b);
        longer.target = q.arrow(b).target;
        next.push_back(std::move(longer));
      }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

ParallelPairFamily rr_sets(const GentlePresentation& p, int n) {
  const auto& q = p.quiver();
  const auto& basis = p.basis();

  ParallelPairFamily fam;
  fam.degree = n;
  fam.ap = ap_paths(p, n);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t r = 0; r < fam.ap.size(); ++r)
    for (std::size_t g = 0; g < basis.size(); ++g)
      if (basis[g].source == fam.ap[r].source && basis[g].target == fam.ap[r].target) {
        pair_index[{r, g}] = fam.pairs.size();
        fam.pairs.push_back({r, g});
      }

  // Q1 gamma in I and gamma Q1 in I.
  auto unextendable_path = [&](std::size_t g) {
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      if (p.left_multiply(a, g) || p.right_multiply(g, a)) return false;
    return true;
  };

  for (std::size_t k = 0; k < fam.pairs.size(); ++k) {
    const auto& rho = fam.ap[fam.pairs[k].rho];
    const auto& gamma = basis[fam.pairs[k].gamma];
    if (n == 0) {
      if (!gamma.is_trivial() && unextendable_path(fam.pairs[k].gamma)) fam.loop_vertex_cycles.push_back(k);
      if (gamma.is_trivial()) fam.cycle_pairs.push_back(k);
      continue;
    }
    const bool starts_like_rho = !gamma.is_trivial() && gamma.arrows.front() == rho.arrows.front();
    const bool ends_like_rho = !gamma.is_trivial() && gamma.arrows.back() == rho.arrows.back();
    if (!starts_like_rho && !ends_like_rho && unextendable_path(fam.pairs[k].gamma)) fam.unextendable.push_back(k);

    if (!gamma.is_trivial()) continue;
    fam.cycle_pairs.push_back(k);
    if (n == 1) fam.loop_pairs.push_back(k);
    const ArrowId first = rho.arrows.front();
    const ArrowId last = rho.arrows.back();
    (p.is_relation(last, first) ? fam.complete : fam.incomplete).push_back(k);
  }
  if (n == 0) return fam;

  std::map<std::vector<ArrowId>, std::size_t> ap_index;
  for (std::size_t r = 0; r < fam.ap.size(); ++r) ap_index[fam.ap[r].arrows] = r;

  fam.rotation.assign(fam.pairs.size(), static_cast<std::size_t>(-1));
  std::vector<char> in_complete0(fam.pairs.size(), 0);
  for (std::size_t k : fam.complete) {
    const auto& rho = fam.ap[fam.pairs[k].rho];
    std::vector<ArrowId> rotated;
    rotated.push_back(rho.arrows.back());
    rotated.insert(rotated.end(), rho.arrows.begin(), rho.arrows.end() - 1);
    const std::size_t r = ap_index.at(rotated);
    const auto e = basis.find(trivial_path(q.arrow(rotated.front()).source));
    fam.rotation[k] = pair_index.at({r, *e});

    const ArrowId first = rho.arrows.front();
    const ArrowId last = rho.arrows.back();
    bool other_right = false, other_left = false;
    for (ArrowId b = 0; b < q.arrow_count(); ++b) {
      if (b != first && p.is_relation(last, b)) other_right = true;
      if (b != last && p.is_relation(b, first)) other_left = true;
    }
    if (!other_right && !other_left) {
      fam.complete0.push_back(k);
      in_complete0[k] = 1;
    }
  }

  for (std::size_t k : fam.complete) {
    bool all = true;
    std::size_t cur = k;
    for (int m = 0; m < n && all; ++m) {
      all = in_complete0[cur] != 0;
      cur = fam.rotation[cur];
    }
    if (all) fam.gentle_complete.push_back(k);
  }

  for (std::size_t k : fam.incomplete) {
    const VertexId r = fam.ap[fam.pairs[k].rho].source;
    bool relation_through_r = false;
    for (ArrowId b : q.in_arrows(r))
      for (ArrowId c : q.out_arrows(r))
        if (p.is_relation(b, c)) relation_through_r = true;
    if (!relation_through_r) fam.empty_incomplete.push_back(k);
  }
  return fam;
}

long coinvariant_dim(const ParallelPairFamily& fam, const FieldSpec& field) {
  const auto& g = fam.gentle_complete;
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < g.size(); ++i) position[g[i]] = i;

  IntMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto it = position.find(fam.rotation[g[i]]);
    if (it == position.end()) throw std::logic_error("rotation does not preserve the gentle complete pairs");
    m(i, i) += 1;
    m(it->second, i) -= 1;
  }
  return static_cast<long>(g.size()) - static_cast<long>(rank(m, field));
}

long coinvariant_dim(const GentlePresentation& p, int n, const FieldSpec& field) {
  return coinvariant_dim(rr_sets(p, n), field);
}

HHTable hh_dims_rr(const GentlePresentation& p, int characteristic, int nmax) {
  const FieldSpec field(characteristic);
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");

  std::vector<ParallelPairFamily> fams;
  for (int n = 0; n <= nmax; ++n) fams.push_back(rr_sets(p, n));
  std::vector<long> coinv(nmax + 1, 0);
  for (int n = 1; n <= nmax; ++n) coinv[n] = coinvariant_dim(fams[n], field);

  const long q0 = static_cast<long>(p.quiver().vertex_count());
  const long q1 = static_cast<long>(p.quiver().arrow_count());

  HHTable t;
  t.characteristic = characteristic;
  t.dims.assign(nmax + 1, 0);
  t.dims[0] = 1 + static_cast<long>(fams[0].loop_vertex_cycles.size());
  t.dims[1] = 1 + static_cast<long>(fams[1].unextendable.size()) + q1 - q0;
  if (field.is_char2()) t.dims[1] += static_cast<long>(fams[1].loop_pairs.size());
  for (int n = 2; n <= nmax; ++n) {
    long a = 1, b = 1;
    if (!field.is_char2()) {
      a = n % 2 == 0 ? 1 : 0;
      b = 1 - a;
    }
    t.dims[n] = static_cast<long>(fams[n].unextendable.size() + fams[n].empty_incomplete.size()) +
                a * coinv[n] + b * coinv[n - 1];
  }
  t.tail_note = "parallel-pair count, degrees 0.." + std::to_string(nmax);
  return t;
}

}  // namespace surfhh
