#include "heitmann/lattice/io.hpp"

#include <string>

namespace heitmann::lattice {

using nlohmann::json;

FinPoset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points")) throw ValidationError("poset JSON needs a \"points\" array");
  std::vector<std::string> names = j.at("points").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> rel;
  auto find = [&](const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw ValidationError("unknown point \"" + name + "\"");
  };
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = i + 1; k < names.size(); ++k)
      if (names[i] == names[k]) throw ValidationError("duplicate point \"" + names[i] + "\"");
  if (j.contains("covers"))
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw ValidationError("each cover must be a pair of point names");
      rel.emplace_back(find(c[0].get<std::string>()), find(c[1].get<std::string>()));
    }
  return FinPoset::from_relations(std::move(names), rel);
}

json poset_to_json(const FinPoset& p) {
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.name(a), p.name(b)});
  return json{{"points", p.names()}, {"covers", covers}};
}

Mask element_from_json(const Lattice& t, const json& j) {
  Mask m = 0;
  for (const auto& name : j) {
    const int i = t.base().index_of(name.get<std::string>());
    if (i < 0) throw ValidationError("unknown point \"" + name.get<std::string>() + "\"");
    m |= Mask{1} << i;
  }
  if (!t.contains(m)) throw ValidationError("point list is not a downset");
  return m;
}

json element_to_json(const Lattice& t, Mask a) {
  json out = json::array();
  for (int i = 0; i < t.points(); ++i)
    if ((a >> i) & 1u) out.push_back(t.base().name(i));
  return out;
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  const std::string kind = j.value("kind", "ideal");
  if (kind == "ideal") {
    d.kind = GlueKind::Ideal;
  } else if (kind == "filter") {
    d.kind = GlueKind::Filter;
  } else {
    throw ValidationError("diagram kind must be \"ideal\" or \"filter\"");
  }
  for (const auto& p : j.at("lattices")) d.pieces.emplace_back(poset_from_json(p));
  if (j.contains("overlaps"))
    for (const auto& o : j.at("overlaps")) {
      Overlap ov;
      ov.i = o.at("i").get<int>();
      ov.j = o.at("j").get<int>();
      const int n = static_cast<int>(d.pieces.size());
      if (ov.i < 0 || ov.j < 0 || ov.i >= n || ov.j >= n) throw ValidationError("overlap index out of range");
      ov.s_ij = element_from_json(d.pieces[ov.i], o.at("s_ij"));
      ov.s_ji = element_from_json(d.pieces[ov.j], o.at("s_ji"));
      d.overlaps.push_back(ov);
    }
  return d;
}

json diagram_to_json(const Diagram& d) {
  json lattices = json::array();
  for (const auto& t : d.pieces) lattices.push_back(poset_to_json(t.base()));
  json overlaps = json::array();
  for (const auto& o : d.overlaps)
    overlaps.push_back({{"i", o.i},
                        {"j", o.j},
                        {"s_ij", element_to_json(d.pieces[o.i], o.s_ij)},
                        {"s_ji", element_to_json(d.pieces[o.j], o.s_ji)}});
  return json{{"kind", d.kind == GlueKind::Ideal ? "ideal" : "filter"},
              {"lattices", lattices},
              {"overlaps", overlaps}};
}

}  // namespace heitmann::lattice
