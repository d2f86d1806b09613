#include "surfhh/ag_invariant.hpp"

#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "surfhh/linalg.hpp"

namespace surfhh {

void AGInvariant::add(Key key, long multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative AG multiplicity");
  if (multiplicity == 0) return;
  support_[key] += multiplicity;
}

long AGInvariant::operator()(int n, int m) const {
  auto it = support_.find({n, m});
  return it == support_.end() ? 0 : it->second;
}

long AGInvariant::psi(int n) const {
  long total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += (*this)(0, d);
  return total;
}

std::string AGInvariant::to_lines() const {
  std::ostringstream os;
  for (const auto& [key, mult] : support_) os << '(' << key.first << ',' << key.second << "): " << mult << '\n';
  return os.str();
}

AGInvariant ag_invariant(const TriangulatedSurface& s) {
  AGInvariant ag;
  ag.add({0, 3}, static_cast<long>(internal_triangles(s).size()));
  for (const auto& prof : classify_boundaries(s)) ag.add({prof.n_incident, prof.m_segments});
  return ag;
}

HHTable hh_dims_ladkani(const AGInvariant& ag, long q0, long q1, int characteristic, int nmax) {
  const FieldSpec field(characteristic);
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  HHTable t;
  t.characteristic = characteristic;
  t.dims.assign(nmax + 1, 0);
  t.dims[0] = 1 + ag(1, 0);
  t.dims[1] = 1 + q1 - q0 + ag(1, 1) + (field.is_char2() ? ag(0, 1) : 0);
  for (int n = 2; n <= nmax; ++n) {
    long a = 1, b = 1;
    if (!field.is_char2()) {
      a = n % 2 == 0 ? 1 : 0;
      b = 1 - a;
    }
    t.dims[n] = ag(1, n) + a * ag.psi(n) + b * ag.psi(n - 1);
  }
  t.tail_note = "from the AG invariant";
  return t;
}

AGComparison compare_ag(const AGInvariant& a, const AGInvariant& b) {
  AGComparison out;
  std::set<AGInvariant::Key> keys;
  for (const auto& [k, v] : a.support()) keys.insert(k);
  for (const auto& [k, v] : b.support()) keys.insert(k);
  for (const auto& k : keys) {
    const long l = a(k.first, k.second), r = b(k.first, k.second);
    if (l != r) out.differences.push_back({k, l, r});
  }
  out.equal = out.differences.empty();
  if (out.equal) {
    out.verdict = "no obstruction found";
    return out;
  }
  out.witness = out.differences.front();
  for (const auto& d : out.differences)
    if (std::labs(d.left - d.right) > std::labs(out.witness.left - out.witness.right)) out.witness = d;
  out.verdict = "not derived equivalent";
  return out;
}

}  // namespace surfhh
