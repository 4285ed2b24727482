#include "heitmann/lattice/spectra.hpp"

#include <map>
#include <string>

namespace heitmann::lattice {

ElemSet prime_ideal(const Lattice& t, int p) {
  ElemSet out;
  for (Mask a : t.elements())
    if (!((a >> p) & 1u)) out.push_back(a);
  return out;
}

SpecSubsets spec_subsets(const Lattice& t) {
  SpecSubsets s;
  s.max = t.base().maximal_points();
  s.min = t.base().minimal_points();
  for (int p = 0; p < t.points(); ++p) {
    const ElemSet ideal = prime_ideal(t, p);
    if (jacobson_radical(t, ideal) == ideal) s.jspec |= Mask{1} << p;
  }
  s.Jspec = heitmann_lattice(t).image;
  return s;
}

QuotientMap subspace_lattice(const Lattice& t, Mask z) { return restrict_to(t, z); }

Mask topological_boundary(const Lattice& t, Mask x) {
  return closure(t, x) & closure(t, t.top() & ~x);
}

FinPoset glue_spectra(const std::vector<FinPoset>& spaces, SubspaceKind kind) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& x : spaces)
    for (const auto& n : x.names())
      if (index.emplace(n, static_cast<int>(names.size())).second) names.push_back(n);
  if (static_cast<int>(names.size()) > kMaxPoints)
    throw CapacityError("glued space would have " + std::to_string(names.size()) + " points");

  std::vector<std::pair<int, int>> rel;
  std::vector<Mask> member(spaces.size(), 0);
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto& x = spaces[s];
    for (int a = 0; a < x.size(); ++a) {
      member[s] |= Mask{1} << index[x.name(a)];
      for (int b = 0; b < x.size(); ++b)
        if (x.less(a, b)) rel.emplace_back(index[x.name(a)], index[x.name(b)]);
    }
  }
  FinPoset glued = FinPoset::from_relations(names, rel);

  const bool open = kind == SubspaceKind::Open;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const std::string label = "space " + std::to_string(s);
    if (open ? !glued.is_downset(member[s]) : !glued.is_upset(member[s]))
      throw ValidationError(label + (open ? " is not open in the glued space" : " is not closed in the glued space"));
    const auto& x = spaces[s];
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < x.size(); ++b)
        if (x.leq(a, b) != glued.leq(index[x.name(a)], index[x.name(b)]))
          throw ValidationError(label + " does not keep its order after gluing");
    for (std::size_t r = s + 1; r < spaces.size(); ++r) {
      const Mask shared = member[s] & member[r];
      const FinPoset& y = spaces[r];
      auto local = [&](const FinPoset& p, Mask global) {
        Mask m = 0;
        for (int i = 0; i < p.size(); ++i)
          if ((global >> index[p.name(i)]) & 1u) m |= Mask{1} << i;
        return m;
      };
      const Mask in_x = local(x, shared), in_y = local(y, shared);
      const bool ok = open ? (x.is_downset(in_x) && y.is_downset(in_y)) : (x.is_upset(in_x) && y.is_upset(in_y));
      if (!ok)
        throw ValidationError("overlap of spaces " + std::to_string(s) + " and " + std::to_string(r) +
                              (open ? " is not open in both" : " is not closed in both"));
    }
  }
  return glued;
}

}  // namespace heitmann::lattice

namespace heitmann::lattice {

FinPoset heitmann_example(int maxima, int length) {
  std::vector<std::string> fan_names{"m"};
  std::vector<std::pair<int, int>> fan_rel;
  for (int i = 1; i <= maxima; ++i) {
    fan_names.push_back("f" + std::to_string(i));
    fan_rel.emplace_back(0, i);
  }
  std::vector<std::string> chain_names{"m"};
  std::vector<std::pair<int, int>> chain_rel;
  for (int i = 1; i <= length; ++i) {
    chain_names.push_back("c" + std::to_string(i));
    chain_rel.emplace_back(i - 1, i);
  }
  return glue_spectra({FinPoset::from_relations(fan_names, fan_rel), FinPoset::from_relations(chain_names, chain_rel)},
                      SubspaceKind::Open);
}

}  // namespace heitmann::lattice
