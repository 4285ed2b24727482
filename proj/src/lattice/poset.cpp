#include "heitmann/lattice/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace heitmann::lattice {

FinPoset FinPoset::from_relations(std::vector<std::string> names,
                                  const std::vector<std::pair<int, int>>& less) {
  const int n = static_cast<int>(names.size());
  if (n > kMaxPoints) {
    throw CapacityError("poset has " + std::to_string(n) + " points; the limit is " +
                        std::to_string(kMaxPoints));
  }
  FinPoset p;
  p.names_ = std::move(names);
  p.up_.assign(n, 0);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up_[i] = Mask{1} << i;
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw ValidationError("relation refers to an unknown point");
    p.up_[a] |= Mask{1} << b;
  }
  // Warshall closure on the up-set rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((p.up_[i] >> k) & 1u) p.up_[i] |= p.up_[k];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq(i, j) && p.leq(j, i))
        throw ValidationError("relation is not antisymmetric: " + p.names_[i] + " and " + p.names_[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(j, i)) p.down_[i] |= Mask{1} << j;
  return p;
}

FinPoset FinPoset::antichain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return from_relations(std::move(names), {});
}

FinPoset FinPoset::chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return from_relations(std::move(names), rel);
}

int FinPoset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool FinPoset::is_downset(Mask m) const { return down_closure(m) == m; }
bool FinPoset::is_upset(Mask m) const { return up_closure(m) == m; }

Mask FinPoset::down_closure(Mask m) const {
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if ((m >> i) & 1u) r |= down_[i];
  return r;
}

Mask FinPoset::up_closure(Mask m) const {
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if ((m >> i) & 1u) r |= up_[i];
  return r;
}

Mask FinPoset::downset_interior(Mask m) const {
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if ((down_[i] & ~m) == 0) r |= Mask{1} << i;
  return r;
}

Mask FinPoset::maximal_points() const {
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if (up_[i] == (Mask{1} << i)) r |= Mask{1} << i;
  return r;
}

Mask FinPoset::minimal_points() const {
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if (down_[i] == (Mask{1} << i)) r |= Mask{1} << i;
  return r;
}

int FinPoset::longest_chain() const {
  // height[i] = longest chain ending at i; process points by down-set size.
  const int n = size();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(down_[a]) < popcount(down_[b]); });
  std::vector<int> height(n, 1);
  int best = 0;
  for (int i : order) {
    for (int j = 0; j < n; ++j)
      if (less(j, i)) height[i] = std::max(height[i], height[j] + 1);
    best = std::max(best, height[i]);
  }
  return best;
}

Mask FinPoset::compress(Mask m, Mask subset) {
  Mask r = 0;
  int k = 0;
  for (int i = 0; i < 32 && (subset >> i) != 0; ++i) {
    if (!((subset >> i) & 1u)) continue;
    if ((m >> i) & 1u) r |= Mask{1} << k;
    ++k;
  }
  return r;
}

Mask FinPoset::expand(Mask m, Mask subset) {
  Mask r = 0;
  int k = 0;
  for (int i = 0; i < 32 && (subset >> i) != 0; ++i) {
    if (!((subset >> i) & 1u)) continue;
    if ((m >> k) & 1u) r |= Mask{1} << i;
    ++k;
  }
  return r;
}

FinPoset FinPoset::induced(Mask subset) const {
  FinPoset p;
  for (int i = 0; i < size(); ++i) {
    if (!((subset >> i) & 1u)) continue;
    p.names_.push_back(names_[i]);
    p.up_.push_back(compress(up_[i] & subset, subset));
    p.down_.push_back(compress(down_[i] & subset, subset));
  }
  return p;
}

FinPoset FinPoset::reversed() const {
  FinPoset p = *this;
  std::swap(p.up_, p.down_);
  return p;
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      Mask between = up_[i] & down_[j] & ~(Mask{1} << i) & ~(Mask{1} << j);
      if (between == 0) out.emplace_back(i, j);
    }
  return out;
}

namespace {

using Colors = std::vector<int>;

// Colour refinement: a point's colour is repeatedly refined by the multisets
// of colours strictly below and strictly above it. Signatures only involve
// colours, so the result does not depend on point labels.
void refine(const FinPoset& p, Colors& col) {
  const int n = p.size();
  for (;;) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> below, above;
      for (int j = 0; j < n; ++j) {
        if (p.less(j, i)) below.push_back(col[j]);
        if (p.less(i, j)) above.push_back(col[j]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[i] = Sig{col[i], std::move(below), std::move(above)};
    }
    std::vector<Sig> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Colors next(n);
    for (int i = 0; i < n; ++i)
      next[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(col.begin(), col.end()).size();
    col = std::move(next);
    if (stable) return;
  }
}

std::string encode(const FinPoset& p, const Colors& col) {
  const int n = p.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[col[i]] = i;
  std::string s = std::to_string(n) + ":";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.push_back(p.leq(pos[a], pos[b]) ? '1' : '0');
  return s;
}

bool twins(const FinPoset& p, int i, int j) {
  const Mask bi = Mask{1} << i, bj = Mask{1} << j;
  return (p.down(i) & ~bi) == (p.down(j) & ~bj) && (p.up(i) & ~bi) == (p.up(j) & ~bj);
}

void search(const FinPoset& p, Colors col, std::string& best) {
  refine(p, col);
  const int n = p.size();
  std::map<int, std::vector<int>> cells;
  for (int i = 0; i < n; ++i) cells[col[i]].push_back(i);
  const std::vector<int>* target = nullptr;
  for (auto& [c, members] : cells)
    if (members.size() > 1) {
      target = &members;
      break;
    }
  if (target == nullptr) {
    std::string s = encode(p, col);
    if (best.empty() || s < best) best = std::move(s);
    return;
  }
  const int c = col[target->front()];
  std::vector<int> tried;
  for (int v : *target) {
    // Twins are interchangeable by an automorphism; one representative suffices.
    bool redundant = false;
    for (int t : tried)
      if (twins(p, t, v)) redundant = true;
    if (redundant) continue;
    tried.push_back(v);
    Colors next = col;
    for (int w = 0; w < n; ++w)
      if (next[w] > c || (next[w] == c && w != v)) ++next[w];
    search(p, std::move(next), best);
  }
}

}  // namespace

std::string canonical_form(const FinPoset& p) {
  if (p.size() == 0) return "0:";
  Colors col(p.size(), 0);
  std::string best;
  search(p, std::move(col), best);
  return best;
}

bool isomorphic(const FinPoset& a, const FinPoset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace heitmann::lattice
