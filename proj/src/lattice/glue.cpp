#include "heitmann/lattice/glue.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace heitmann::lattice {

namespace {

// Piece lattices re-expressed over a shared set of point names.
struct Atlas {
  std::vector<std::string> names;
  std::vector<std::vector<int>> local_to_global;  // per piece

  Mask to_global(int piece, Mask local) const {
    Mask g = 0;
    const auto& map = local_to_global[piece];
    for (std::size_t k = 0; k < map.size(); ++k)
      if ((local >> k) & 1u) g |= Mask{1} << map[k];
    return g;
  }
  Mask from_global(int piece, Mask g) const {
    Mask local = 0;
    const auto& map = local_to_global[piece];
    for (std::size_t k = 0; k < map.size(); ++k)
      if ((g >> map[k]) & 1u) local |= Mask{1} << k;
    return local;
  }
  Mask piece_points(int piece) const {
    return to_global(piece, static_cast<Mask>((std::uint64_t{1} << local_to_global[piece].size()) - 1));
  }
};

Atlas build_atlas(const Diagram& d) {
  Atlas a;
  std::map<std::string, int> index;
  for (const auto& piece : d.pieces) {
    std::vector<int> map;
    for (const auto& name : piece.base().names()) {
      auto [it, fresh] = index.emplace(name, static_cast<int>(a.names.size()));
      if (fresh) a.names.push_back(name);
      map.push_back(it->second);
    }
    a.local_to_global.push_back(std::move(map));
  }
  if (static_cast<int>(a.names.size()) > kMaxPoints)
    throw CapacityError("glued space would have " + std::to_string(a.names.size()) + " points");
  return a;
}

std::string pair_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

GlueResult glue(const Diagram& d) {
  const int n = static_cast<int>(d.pieces.size());
  const bool ideal = d.kind == GlueKind::Ideal;
  const Atlas atlas = build_atlas(d);

  // s[i][j] in T_i; the default makes T_ij trivial.
  std::vector<std::vector<Mask>> s(n, std::vector<Mask>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = (i == j) == ideal ? 0 : d.pieces[i].top();
  for (const auto& o : d.overlaps) {
    if (o.i < 0 || o.j < 0 || o.i >= n || o.j >= n || o.i == o.j)
      throw ValidationError("overlap " + pair_label(o.i, o.j) + " refers to invalid pieces");
    if (!d.pieces[o.i].contains(o.s_ij) || !d.pieces[o.j].contains(o.s_ji))
      throw ValidationError("overlap " + pair_label(o.i, o.j) + " has an element that is not a downset");
    s[o.i][o.j] = o.s_ij;
    s[o.j][o.i] = o.s_ji;
  }

  // P[i][j]: global points of T_ij seen inside piece i.
  std::vector<std::vector<Mask>> P(n, std::vector<Mask>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mask local = ideal ? d.pieces[i].top() & ~s[i][j] : s[i][j];
      P[i][j] = atlas.to_global(i, local);
    }

  auto induced_order_agrees = [&](int i, int j, Mask common) {
    const auto& bi = d.pieces[i].base();
    const auto& bj = d.pieces[j].base();
    for (int a = 0; a < bi.size(); ++a)
      for (int b = 0; b < bi.size(); ++b) {
        const int ga = atlas.local_to_global[i][a], gb = atlas.local_to_global[i][b];
        if (!((common >> ga) & 1u) || !((common >> gb) & 1u)) continue;
        const int ja = bj.index_of(atlas.names[ga]), jb = bj.index_of(atlas.names[gb]);
        if (bi.leq(a, b) != bj.leq(ja, jb)) return false;
      }
    return true;
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (P[i][j] != P[j][i])
        throw ValidationError("overlap " + pair_label(i, j) + ": the two sides name different points");
      if ((atlas.piece_points(i) & atlas.piece_points(j)) != P[i][j])
        throw ValidationError("pieces " + pair_label(i, j) + " share points outside their overlap");
      if (!induced_order_agrees(i, j, P[i][j]))
        throw ValidationError("overlap " + pair_label(i, j) + ": the two sides order the points differently");
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if ((P[i][j] & P[i][k]) != (P[j][i] & P[j][k]))
          throw ValidationError("triple overlap (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ") does not commute");
      }
    }

  // Enumerate compatible families; a family is recorded by the union of its
  // components, which determines it once the overlap checks above pass.
  std::vector<std::vector<Mask>> piece_elems(n);
  for (int i = 0; i < n; ++i)
    for (Mask x : d.pieces[i].elements()) piece_elems[i].push_back(atlas.to_global(i, x));
  std::vector<Mask> limit;
  std::vector<Mask> chosen(n, 0);
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      Mask u = 0;
      for (Mask x : chosen) u |= x;
      limit.push_back(u);
      return;
    }
    for (Mask x : piece_elems[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = (x & P[i][j]) == (chosen[j] & P[j][i]);
      if (!ok) continue;
      chosen[i] = x;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  std::sort(limit.begin(), limit.end());

  // Join-irreducibles of the limit become the points of the glued poset.
  std::vector<int> ji_point;
  std::vector<Mask> ji_elem;
  for (Mask u : limit) {
    if (u == 0) continue;
    Mask below = 0;
    for (Mask v : limit)
      if (v != u && (v & ~u) == 0) below |= v;
    if (below == u) continue;
    const Mask fresh = u & ~below;
    if (popcount(fresh) != 1) throw ValidationError("glued lattice has a join-irreducible without a unique point");
    ji_point.push_back(__builtin_ctz(fresh));
    ji_elem.push_back(u);
  }
  const Mask all_points = limit.empty() ? 0 : limit.back();
  std::vector<std::string> names;
  std::vector<int> global_to_new(atlas.names.size(), -1);
  {
    std::vector<int> order(ji_point.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ji_point[a] < ji_point[b]; });
    std::vector<int> rank(ji_point.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      rank[order[r]] = static_cast<int>(r);
      names.push_back(atlas.names[ji_point[order[r]]]);
      global_to_new[ji_point[order[r]]] = static_cast<int>(r);
    }
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < ji_elem.size(); ++a)
      for (std::size_t b = 0; b < ji_elem.size(); ++b)
        if (a != b && (ji_elem[a] & ~ji_elem[b]) == 0) rel.emplace_back(rank[a], rank[b]);
    GlueResult out{Lattice(FinPoset::from_relations(std::move(names), rel)), {}, {}};

    auto to_new = [&](Mask g) {
      Mask m = 0;
      for (std::size_t k = 0; k < global_to_new.size(); ++k)
        if (((g >> k) & 1u) && global_to_new[k] >= 0) m |= Mask{1} << global_to_new[k];
      return m;
    };
    if (all_points != ((atlas.names.size() == 32) ? ~0u : ((Mask{1} << atlas.names.size()) - 1)))
      throw ValidationError("some points are missing from the projective limit");
    // Birkhoff check: the limit must be exactly the downsets of its points.
    const auto elems = out.lattice.elements();
    std::vector<Mask> mapped;
    for (Mask u : limit) mapped.push_back(to_new(u));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != elems) throw ValidationError("projective limit is not the downset lattice of its points");

    for (int i = 0; i < n; ++i) {
      const Mask piece = to_new(atlas.piece_points(i));
      const Mask kernel = ideal ? out.lattice.top() & ~piece : piece;
      if (!out.lattice.contains(kernel))
        throw ValidationError("projection to piece " + std::to_string(i) + " is not a principal quotient");
      QuotientMap proj = restrict_to(out.lattice, piece);
      const auto& tb = proj.target.base();
      const auto& pb = d.pieces[i].base();
      for (int a = 0; a < tb.size(); ++a)
        for (int b = 0; b < tb.size(); ++b)
          if (tb.leq(a, b) != pb.leq(pb.index_of(tb.name(a)), pb.index_of(tb.name(b))))
            throw ValidationError("piece " + std::to_string(i) + " does not embed in the glued lattice");
      out.projections.push_back(std::move(proj));
      out.kernels.push_back(kernel);
    }
    // π_i(s_j) = s_ij.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Mask image = out.kernels[j] & to_new(atlas.piece_points(i));
        if (image != to_new(atlas.to_global(i, s[i][j])))
          throw ValidationError("projection " + pair_label(i, j) + " does not send s_j to s_ij");
      }
    // Sections φ_i(x) = (φ_ji(π_ij(x)))_j must land in the limit with i-th
    // component x.
    for (int i = 0; i < n; ++i)
      for (Mask x : piece_elems[i]) {
        std::vector<Mask> y(n);
        for (int j = 0; j < n; ++j) {
          if (j == i) {
            y[j] = x;
            continue;
          }
          const Mask shared = x & P[i][j];
          const Mask sji = atlas.to_global(j, s[j][i]);
          if (ideal) {
            const Mask lifted = d.pieces[j].base().down_closure(atlas.from_global(j, shared));
            y[j] = atlas.to_global(j, lifted) | sji;
          } else {
            y[j] = shared & sji;
          }
        }
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            if ((y[j] & P[j][k]) != (y[k] & P[k][j]))
              throw ValidationError("section of piece " + std::to_string(i) + " is not compatible on " +
                                    pair_label(j, k));
        if (y[i] != x) throw ValidationError("section of piece " + std::to_string(i) + " is not split");
      }
    return out;
  }
}

Diagram decompose(const Lattice& t, const std::vector<Mask>& s, GlueKind kind) {
  const bool ideal = kind == GlueKind::Ideal;
  Mask cover = ideal ? t.top() : 0;
  for (Mask x : s) {
    if (!t.contains(x)) throw ValidationError("covering element is not a downset");
    cover = ideal ? (cover & x) : (cover | x);
  }
  if (cover != (ideal ? t.bottom() : t.top()))
    throw ValidationError(ideal ? "principal ideals do not cover: the meet is not 0"
                                : "principal filters do not cover: the join is not 1");
  Diagram d;
  d.kind = kind;
  std::vector<QuotientMap> maps;
  for (Mask x : s) {
    maps.push_back(ideal ? kill(t, x) : force(t, x));
    d.pieces.push_back(maps.back().target);
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      d.overlaps.push_back(Overlap{static_cast<int>(i), static_cast<int>(j), maps[i].apply(s[j]), maps[j].apply(s[i])});
  return d;
}

}  // namespace heitmann::lattice
