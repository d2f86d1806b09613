#include "surfhh/cochain.hpp"

#include <map>
#include <stdexcept>

namespace surfhh {

namespace {

using PathKey = std::pair<VertexId, std::vector<ArrowId>>;

PathKey key_of(const Path& path) { return {path.source, path.arrows}; }

// Relation chains of length n, enumerated by extension from the arrows.
std::vector<Path> relation_chains(const GentlePresentation& p, int n) {
  const auto& q = p.quiver();
  std::vector<Path> out;
  if (n == 0) {
    for (VertexId v = 0; v < q.vertex_count(); ++v) out.push_back(trivial_path(v));
    return out;
  }
  std::vector<Path> stack;
  for (ArrowId a = q.arrow_count(); a-- > 0;) stack.push_back(arrow_path(q, a));
  while (!stack.empty()) {
    Path cur = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(cur.length()) == n) {
      out.push_back(std::move(cur));
      continue;
    }
    const auto& next = q.out_arrows(cur.target);
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      if (!p.is_relation(cur.arrows.back(), *it)) continue;
      Path longer = cur;
      longer.arrows.push_back(*it);
      longer.target = q.arrow(*it).target;
      stack.push_back(std::move(longer));
    }
  }
  return out;
}

}  // namespace

CochainComplex build_complex(const GentlePresentation& p, const FieldSpec& field, int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  const auto& q = p.quiver();
  const auto& P = p.basis();
  const int top = nmax + 1;

  CochainComplex c{field, {}, {}};
  std::vector<std::map<PathKey, std::size_t>> ap_index(top + 1);
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> basis_index(top + 1);
  std::vector<std::vector<std::vector<std::size_t>>> cochains_on(top + 1);

  for (int n = 0; n <= top; ++n) {
    CochainDegree deg;
    deg.ap = relation_chains(p, n);
    cochains_on[n].resize(deg.ap.size());
    for (std::size_t r = 0; r < deg.ap.size(); ++r) {
      ap_index[n][key_of(deg.ap[r])] = r;
      for (std::size_t g = 0; g < P.size(); ++g) {
        if (P[g].source != deg.ap[r].source || P[g].target != deg.ap[r].target) continue;
        basis_index[n][{r, g}] = deg.basis.size();
        cochains_on[n][r].push_back(deg.basis.size());
        deg.basis.emplace_back(r, g);
      }
    }
    c.degrees.push_back(std::move(deg));
  }

  auto reduce = [&](std::int64_t x) -> std::int64_t {
    const int ch = field.characteristic();
    return ch == 0 ? x : ((x % ch) + ch) % ch;
  };

  for (int n = 1; n <= top; ++n) {
    const auto& src = c.degrees[n - 1];
    const auto& dst = c.degrees[n];
    IntMatrix d(dst.basis.size(), src.basis.size());
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;

    for (std::size_t r = 0; r < dst.ap.size(); ++r) {
      const auto& rho = dst.ap[r];
      const ArrowId first = rho.arrows.front();
      const ArrowId last = rho.arrows.back();

      Path tail{q.arrow(first).target, rho.target, {rho.arrows.begin() + 1, rho.arrows.end()}};
      Path head{rho.source, q.arrow(last).source, {rho.arrows.begin(), rho.arrows.end() - 1}};

      // a_1 f(a_2 ... a_n)
      for (std::size_t col : cochains_on[n - 1][ap_index[n - 1].at(key_of(tail))]) {
        if (auto prod = p.left_multiply(first, src.basis[col].second))
          d(basis_index[n].at({r, *prod}), col) += 1;
      }
      // (-1)^n f(a_1 ... a_{n-1}) a_n
      for (std::size_t col : cochains_on[n - 1][ap_index[n - 1].at(key_of(head))]) {
        if (auto prod = p.right_multiply(src.basis[col].second, last))
          d(basis_index[n].at({r, *prod}), col) += sign;
      }
    }
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) = reduce(d(i, j));
    c.differentials.push_back(std::move(d));
  }
  return c;
}

bool complex_property_holds(const CochainComplex& c) {
  for (int n = 1; n < c.top_degree(); ++n) {
    const auto prod = multiply(c.d(n + 1), c.d(n));
    const bool zero = c.field.characteristic() == 0 ? prod.is_zero() : prod.is_zero_mod(c.field.characteristic());
    if (!zero) return false;
  }
  return true;
}

HHTable hh_dims_oracle(const CochainComplex& c) {
  const int top = c.top_degree();
  if (top < 2) throw std::invalid_argument("complex must reach at least degree 2");
  std::vector<long> ranks(top + 1, 0);  // ranks[n] = rank D_n
  for (int n = 1; n <= top; ++n) ranks[n] = static_cast<long>(rank(c.d(n), c.field));

  HHTable t;
  t.characteristic = c.field.characteristic();
  t.dims.assign(top, 0);
  for (int n = 0; n < top; ++n) t.dims[n] = static_cast<long>(c.dim(n)) - ranks[n + 1] - (n >= 1 ? ranks[n] : 0);
  t.tail_note = "exact cochain ranks over " + c.field.name();
  return t;
}

}  // namespace surfhh
