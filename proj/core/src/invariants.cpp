#include "revwiener/invariants.hpp"

namespace revwiener {

Int wiener_edge_cut(const Tree& t) {
  Int total = 0;
  for (const EdgeCut& cut : edge_cut_profile(t)) {
    total = checked_add(total, checked_mul(Int(cut.side_u), Int(cut.side_v)));
  }
  return total;
}

Int wiener_bfs(const Tree& t) {
  Int twice = 0;
  for (Vertex s = 0; s < t.size(); ++s) {
    for (std::uint32_t d : bfs_distances(t, s)) twice = checked_add(twice, Int(d));
  }
  return exact_div(twice, 2);
}

Int reverse_wiener_from(std::size_t n, std::uint32_t diameter, Int wiener) {
  const Int pairs = exact_div(checked_mul(Int(n), Int(n) - 1), 2);
  return checked_sub(checked_mul(pairs, Int(diameter)), wiener);
}

Int reverse_wiener(const Tree& t) {
  return reverse_wiener_from(t.size(), diameter_and_centers(t).diameter, wiener_edge_cut(t));
}

TreeMetrics metrics(const Tree& t) {
  DiameterInfo info = diameter_and_centers(t);
  TreeMetrics m;
  m.n = t.size();
  m.wiener = wiener_edge_cut(t);
  m.diameter = info.diameter;
  m.reverse_wiener = reverse_wiener_from(m.n, m.diameter, m.wiener);
  m.centers = std::move(info.centers);
  return m;
}

}  // namespace revwiener
