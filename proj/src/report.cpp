#include "surfhh/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "surfhh/cochain.hpp"
#include "surfhh/geometric.hpp"
#include "surfhh/parallel_pairs.hpp"
#include "surfhh/quiver.hpp"

namespace surfhh {

const char* to_string(Method m) {
  switch (m) {
    case Method::Geometric: return "geometric";
    case Method::RR: return "rr";
    case Method::Oracle: return "oracle";
    case Method::Ladkani: return "ladkani";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  for (Method m : all_methods())
    if (name == to_string(m)) return m;
  return std::nullopt;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::Geometric, Method::RR, Method::Oracle, Method::Ladkani};
  return methods;
}

Report analyze(const TriangulatedSurface& s, int characteristic, int nmax, const std::vector<Method>& methods) {
  const FieldSpec field(characteristic);
  const auto presentation = build_quiver(s);
  const auto counts = surface_counts(s);

  Report r;
  r.name = s.name();
  r.characteristic = characteristic;
  r.nmax = nmax;
  r.summary = {s.genus(),
               s.boundary_count(),
               s.marked_point_count(),
               static_cast<long>(s.arcs().size()),
               static_cast<long>(s.triangles().size()),
               counts.internal,
               counts.sint,
               counts.type0,
               counts.type1,
               static_cast<long>(presentation.quiver().vertex_count()),
               static_cast<long>(presentation.quiver().arrow_count()),
               static_cast<long>(presentation.relations().size()),
               static_cast<long>(presentation.basis().size()),
               hh1_remark(s)};
  r.boundaries = classify_boundaries(s);
  r.ag = ag_invariant(s);

  const auto geometric = hh_dims_geometric(s, characteristic, nmax);
  r.tail_note = geometric.table.tail_note;
  r.cup_nontrivial = geometric.cup_nontrivial;
  r.bracket_nontrivial = geometric.bracket_nontrivial;

  for (Method m : methods) {
    HHTable t;
    switch (m) {
      case Method::Geometric: t = geometric.table; break;
      case Method::RR: t = hh_dims_rr(presentation, characteristic, nmax); break;
      case Method::Oracle: t = hh_dims_oracle(build_complex(presentation, field, nmax)); break;
      case Method::Ladkani:
        t = hh_dims_ladkani(r.ag, r.summary.q0, r.summary.q1, characteristic, nmax);
        break;
    }
    r.tables.push_back({m, std::move(t)});
  }
  for (const auto& mt : r.tables)
    if (!mt.table.same_dims(r.tables.front().table)) r.agree = false;
  return r;
}

std::string render_text(const Report& r) {
  const auto& s = r.summary;
  std::ostringstream os;
  os << "instance: " << r.name << '\n';
  os << "surface: g=" << s.genus << " b=" << s.boundaries << " c=" << s.marked_points << " arcs=" << s.arcs
     << " triangles=" << s.triangles << " Int=" << s.internal << " SInt=" << s.sint << " B0=" << s.type0
     << " B1=" << s.type1 << '\n';
  os << "quiver: Q0=" << s.q0 << " Q1=" << s.q1 << " relations=" << s.relations << " dimA=" << s.algebra_dim
     << '\n';
  os << "boundaries:";
  for (const auto& b : r.boundaries)
    os << " C" << b.component << "=(" << b.n_incident << ',' << b.m_segments << ")/" << to_string(b.type);
  os << '\n';
  os << "field: " << FieldSpec(r.characteristic).name() << "  nmax: " << r.nmax << '\n';
  for (const auto& mt : r.tables) {
    std::string label = to_string(mt.method);
    label.resize(10, ' ');
    os << "HH " << label << format_dims(mt.table.dims) << '\n';
  }
  os << "tail: " << r.tail_note << '\n';
  os << "HH1 from counts: " << s.hh1_remark << '\n';
  os << "AG invariant:\n";
  std::istringstream lines(r.ag.to_lines());
  for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
  os << "cup product nontrivial: " << (r.cup_nontrivial ? "yes" : "no")
     << "  bracket nontrivial: " << (r.bracket_nontrivial ? "yes" : "no") << '\n';
  os << "verdict: " << (r.agree ? "PASS" : "FAIL (methods disagree)") << '\n';
  return os.str();
}

nlohmann::json render_json(const Report& r) {
  const auto& s = r.summary;
  nlohmann::json tables = nlohmann::json::object();
  for (const auto& mt : r.tables) tables[to_string(mt.method)] = {{"dims", mt.table.dims}, {"note", mt.table.tail_note}};
  nlohmann::json bnd = nlohmann::json::array();
  for (const auto& b : r.boundaries)
    bnd.push_back({{"component", b.component},
                   {"n", b.n_incident},
                   {"m", b.m_segments},
                   {"type", to_string(b.type)}});
  nlohmann::json ag = nlohmann::json::array();
  for (const auto& [key, mult] : r.ag.support()) ag.push_back({key.first, key.second, mult});
  return {
      {"name", r.name},
      {"characteristic", r.characteristic},
      {"nmax", r.nmax},
      {"surface",
       {{"genus", s.genus},
        {"boundaries", s.boundaries},
        {"marked_points", s.marked_points},
        {"arcs", s.arcs},
        {"triangles", s.triangles},
        {"internal", s.internal},
        {"sint", s.sint},
        {"B0", s.type0},
        {"B1", s.type1}}},
      {"quiver", {{"Q0", s.q0}, {"Q1", s.q1}, {"relations", s.relations}, {"algebra_dim", s.algebra_dim}}},
      {"boundary_profiles", bnd},
      {"tables", tables},
      {"tail", r.tail_note},
      {"hh1_from_counts", s.hh1_remark},
      {"ag_invariant", ag},
      {"cup_nontrivial", r.cup_nontrivial},
      {"bracket_nontrivial", r.bracket_nontrivial},
      {"verdict", r.agree ? "pass" : "fail"},
  };
}

std::vector<CrosscheckRow> crosscheck(const std::vector<TriangulatedSurface>& surfaces, int nmax, unsigned threads) {
  std::vector<CrosscheckRow> rows(surfaces.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, surfaces.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < surfaces.size();) {
      auto& row = rows[i];
      row.name = surfaces[i].name();
      try {
        const auto r0 = analyze(surfaces[i], 0, nmax);
        const auto r2 = analyze(surfaces[i], 2, nmax);
        row.pass_char0 = r0.agree;
        row.pass_char2 = r2.agree;
        if (!r0.agree) row.detail += render_text(r0);
        if (!r2.agree) row.detail += render_text(r2);
      } catch (const std::exception& e) {
        row.pass_char0 = row.pass_char2 = false;
        row.detail = std::string("error: ") + e.what() + '\n';
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace surfhh
