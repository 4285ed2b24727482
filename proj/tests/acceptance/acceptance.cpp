// Acceptance run: one PASS/FAIL line per criterion. Sample sizes, seeds and
// time limits are fixed below; the exit status is non-zero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genred_support.hpp"
#include "heitmann/errors.hpp"
#include "heitmann/genred/genred.hpp"
#include "heitmann/lattice/dimension.hpp"
#include "heitmann/lattice/glue.hpp"
#include "heitmann/lattice/spectra.hpp"
#include "snf.hpp"
#include "support.hpp"

using namespace heitmann;
using lattice::Lattice;
using lattice::Mask;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Sample for criteria 1, 2, 4 and 5.
constexpr int kLatticeSample = 220;
constexpr int kMaxSamplePoints = 7;
constexpr std::size_t kFormulaMaxElements = 20;

constexpr double kLimit1 = 30, kLimit3 = 1, kLimit4 = 60, kLimit6 = 30, kLimit7 = 300, kLimit8Each = 60,
                 kLimit9 = 120, kLimit10 = 120, kLimit11 = 60;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Runs a criterion, enforcing its time limit (no limit when limit <= 0).
bool report(int number, double limit, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = seconds_since(t0);
  if (limit > 0 && secs >= limit) {
    out.pass = false;
    out.detail += "; over the time limit";
  }
  std::ostringstream timing;
  timing.precision(2);
  timing << std::fixed << secs << "s";
  if (limit > 0) timing << " of " << limit << "s";
  std::printf("criterion %2d: %s  %s (%s)\n", number, out.pass ? "PASS" : "FAIL", out.detail.c_str(),
              timing.str().c_str());
  std::fflush(stdout);
  return out.pass;
}

std::vector<Lattice> lattice_sample() {
  std::mt19937_64 rng(kSeed);
  std::vector<Lattice> out;
  for (int i = 0; i < kLatticeSample; ++i) out.push_back(testsupport::random_lattice(rng, kMaxSamplePoints));
  return out;
}

Outcome criterion1(const std::vector<Lattice>& sample) {
  int bad = 0;
  for (const auto& t : sample) {
    const int up = lattice::kdim_upper(t), low = lattice::kdim_lower(t), chain = lattice::kdim_chain(t);
    if (up != low || up != chain) ++bad;
  }
  return {bad == 0, std::to_string(sample.size()) + " posets, " + std::to_string(bad) + " disagreements"};
}

Outcome criterion2(const std::vector<Lattice>& sample) {
  int order = 0, equal = 0;
  for (const auto& t : sample) {
    const int h = lattice::hdim(t), j = lattice::jdim(t), k = lattice::kdim(t);
    const int kq = lattice::kdim(lattice::kill(t, lattice::jacobson_zero(t)).target);
    if (!(h <= j && j <= kq && kq <= k)) ++order;
    if (h != j) ++equal;
  }
  return {order == 0 && equal == 0, std::to_string(order) + " ordering violations, " + std::to_string(equal) +
                                        " cases with hdim != jdim"};
}

Outcome criterion3() {
  Outcome out;
  std::string values;
  for (int L = 1; L <= 4; ++L) {
    const Lattice t(lattice::heitmann_example(3, L));
    const int h = lattice::hdim(t), j = lattice::jdim(t), k = lattice::kdim(t);
    const int kq = lattice::kdim(lattice::kill(t, lattice::jacobson_zero(t)).target);
    if (!(j == 0 && h == 0 && kq == L && k == L)) out.pass = false;
    values += (L > 1 ? "; " : "") + std::string("L=") + std::to_string(L) + ": jdim " + std::to_string(j) +
              ", hdim " + std::to_string(h) + ", kdim(T/J0) " + std::to_string(kq) + ", kdim " + std::to_string(k);
  }
  out.detail = values;
  return out;
}

// All sequences of length n over `s`, visited in lexicographic order until
// `visit` returns false.
template <class Visit>
void for_each_sequence(const std::vector<Mask>& s, int n, Visit visit) {
  std::vector<std::size_t> idx(n, 0);
  std::vector<Mask> xs(n, s.empty() ? 0 : s[0]);
  if (s.empty()) return;
  while (true) {
    for (int i = 0; i < n; ++i) xs[i] = s[idx[i]];
    if (!visit(xs)) return;
    int i = n - 1;
    while (i >= 0 && ++idx[i] == s.size()) idx[i--] = 0;
    if (i < 0) return;
  }
}

Outcome criterion4(const std::vector<Lattice>& sample) {
  int lattices = 0, bad = 0;
  long sequences = 0;
  for (const auto& t : sample) {
    const auto elems = t.elements();
    if (elems.size() > kFormulaMaxElements) continue;
    ++lattices;
    const int k = lattice::kdim(t);
    // kdim ≤ ℓ must match "every sequence passes" for ℓ = k and fail at ℓ = k − 1.
    for (int ell = std::max(k - 1, 0); ell <= k; ++ell) {
      bool witness_all = true, heyting_all = true, brouwer_all = true, per_sequence = true;
      for_each_sequence(elems, ell + 1, [&](const std::vector<Mask>& xs) {
        ++sequences;
        const bool w = lattice::kdim_global_check(t, xs).has_value();
        const bool h = lattice::heyting_dim_formula(t, xs) == t.top();
        const bool b = lattice::brouwer_dim_formula(t, xs) == t.bottom();
        witness_all = witness_all && w;
        heyting_all = heyting_all && h;
        brouwer_all = brouwer_all && b;
        per_sequence = per_sequence && (w == h);
        return true;
      });
      const bool expected = k <= ell;
      if (witness_all != expected || heyting_all != expected || brouwer_all != expected || !per_sequence) ++bad;
    }
  }
  return {bad == 0 && lattices > 0, std::to_string(lattices) + " lattices with at most " +
                                        std::to_string(kFormulaMaxElements) + " elements, " +
                                        std::to_string(sequences) + " sequences, " + std::to_string(bad) +
                                        " disagreements"};
}

Outcome criterion5(const std::vector<Lattice>& sample) {
  using lattice::BoundaryKind;
  int bad_union = 0, bad_regular = 0;
  long pairs = 0;
  for (const auto& t : sample) {
    const auto e = t.elements();
    for (Mask x : e) {
      if (lattice::annihilator(t, lattice::boundary_set(t, BoundaryKind::KrullUpper, x)) != lattice::ElemSet{0})
        ++bad_regular;
      for (Mask y : e) {
        ++pairs;
        for (auto kind : {BoundaryKind::KrullUpper, BoundaryKind::Heitmann}) {
          auto lhs = lattice::intersect(lattice::boundary_set(t, kind, x), lattice::boundary_set(t, kind, y));
          auto rhs = lattice::intersect(lattice::boundary_set(t, kind, t.join(x, y)),
                                        lattice::boundary_set(t, kind, t.meet(x, y)));
          if (lhs != rhs) ++bad_union;
        }
      }
    }
  }
  return {bad_union == 0 && bad_regular == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad_union) +
                                                  " union failures, " + std::to_string(bad_regular) +
                                                  " regularity failures"};
}

Outcome criterion6() {
  std::mt19937_64 rng(kSeed + 6);
  int tried = 0, bad = 0;
  for (int attempt = 0; attempt < 5000 && tried < 60; ++attempt) {
    const Lattice t = testsupport::random_lattice(rng, 6);
    const auto e = t.elements();
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    const auto kind = attempt % 2 ? lattice::GlueKind::Ideal : lattice::GlueKind::Filter;
    std::vector<Mask> s;
    for (int k = 0; k < 1 + attempt % 3; ++k) s.push_back(e[pick(rng)]);
    Mask cover = kind == lattice::GlueKind::Ideal ? t.top() : 0;
    for (Mask x : s) cover = kind == lattice::GlueKind::Ideal ? (cover & x) : (cover | x);
    if (cover != (kind == lattice::GlueKind::Ideal ? t.bottom() : t.top())) continue;
    ++tried;
    if (!lattice::isomorphic(lattice::glue(lattice::decompose(t, s, kind)).lattice.base(), t.base())) ++bad;
  }
  return {tried >= 50 && bad == 0, std::to_string(tried) + " coverings, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion7() {
  std::mt19937_64 rng(kSeed + 7);
  int ok = 0, total = 0;
  for (int n = 1; n <= 2; ++n) {
    const auto ring = n == 1 ? poly::make_ring(0, {"x"}) : poly::make_ring(0, {"x", "y"});
    const auto A = zariski::ambient(ring);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int i = 0; i < 50; ++i) {
      ++total;
      std::vector<poly::Poly> xs;
      for (int j = 0; j <= n; ++j) xs.push_back(testsupport::random_poly(rng, ring, deg(rng)));
      auto cert = zariski::dim_cert_search(A, xs);
      if (cert && zariski::collapse_polynomial(ring, cert->xs, cert->ms, cert->as).is_zero() &&
          zariski::verify_dim_cert(A, *cert))
        ++ok;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " certificates verified"};
}

Outcome criterion8() {
  std::mt19937_64 rng(kSeed + 8);
  const auto ring = poly::make_ring(0, {"x", "y"});
  const auto A = zariski::ambient(ring);
  std::uniform_int_distribution<int> deg(1, 3);
  int ok = 0, slow = 0;
  double worst = 0;
  for (int i = 0; i < 25; ++i) {
    std::vector<poly::Poly> gens;
    for (int j = 0; j < 5; ++j) gens.push_back(testsupport::random_poly(rng, ring, deg(rng)));
    const auto t0 = Clock::now();
    bool good = false;
    try {
      auto red = genred::kronecker_reduce(A, gens);
      good = red.outputs.size() <= 3 && red.forward.size() == gens.size();
      for (const auto& c : red.forward) good = good && genred::claim_holds(c);
      for (const auto& c : red.backward) good = good && genred::claim_holds(c);
    } catch (const std::exception& e) {
      std::printf("  instance %d: %s\n", i, e.what());
    }
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    if (secs >= kLimit8Each) ++slow;
    if (good) ++ok;
  }
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << ok << "/25 reduced to at most 3 generators with both directions witnessed, slowest " << worst
    << "s of " << kLimit8Each << "s";
  return {ok == 25 && slow == 0, d.str()};
}

Outcome criterion9() {
  std::mt19937_64 rng(kSeed + 9);
  const auto ring = poly::make_ring(0, {"x"});
  const auto A = zariski::ambient(ring);
  int pairs = 0, replays = 0;
  for (int i = 0; i < 25; ++i) {
    auto [G, Ginv] = testsupport::random_elementary(rng, ring, 3, 4, 2);
    const genred::Vec v = G.column(0);
    auto b = genred::bass_stable_range(A, v[2], {v[0], v[1]});
    if (genred::claim_holds(b.conclusion) && genred::unimodular(A, b.outputs)) ++pairs;
    auto u = genred::unimodular_to_e1(A, v);
    const auto w = genred::replay(u.script, v);
    if (w[0] == poly::Poly::constant(ring, 1) && w[1].is_zero() && w[2].is_zero()) ++replays;
  }
  return {pairs == 25 && replays == 25, std::to_string(pairs) + "/25 unimodular pairs, " + std::to_string(replays) +
                                            "/25 exact replays to (1,0,0)"};
}

Outcome criterion10() {
  std::mt19937_64 rng(kSeed + 10);
  const auto ring = poly::make_ring(0, {"x"});
  const auto A = zariski::ambient(ring);
  // Invariant-factor shapes: diagonal entries, then zero rows for free summands.
  const std::vector<std::vector<const char*>> shapes = {
      {"1", "x^2-1"}, {"1", "1", "x"}, {"x", "x*(x+1)"}, {"1", "x^2+1", "0"}, {"x-2", "0"}, {"1", "0"}};
  int ok = 0, total = 0;
  std::string notes;
  for (int i = 0; i < 12; ++i) {
    const auto& shape = shapes[i % shapes.size()];
    const int q = static_cast<int>(shape.size()) + 1;  // one redundant generator
    std::vector<genred::Vec> cols;
    for (std::size_t j = 0; j < shape.size(); ++j) {
      genred::Vec c = genred::zeros(ring, q);
      c[j] = poly::parse_poly(ring, shape[j]);
      cols.push_back(c);
    }
    // The extra generator equals the first one: relation e_last − e_0.
    genred::Vec extra = genred::zeros(ring, q);
    extra[q - 1] = poly::Poly::constant(ring, 1);
    extra[0] = poly::Poly::constant(ring, -1);
    cols.push_back(extra);
    const genred::Matrix D = genred::Matrix::from_columns(ring, q, cols);
    auto [U, Uinv] = testsupport::random_elementary(rng, ring, q, 3, 1);
    auto [W, Winv] = testsupport::random_elementary(rng, ring, D.cols(), 2, 1);
    const genred::Matrix F = U * D * W;
    ++total;
    const auto snf = testsupport::smith_summary(F);
    const int mu = snf.min_generators();
    const int expected = snf.free_rank > 0 ? std::max(mu, snf.free_rank + 1) : mu;
    const int m = genred::swan_bound(A, F);
    auto sw = genred::forster_swan_generate(A, F, m);
    const bool exact = sw.P * sw.Q + sw.presentation * sw.Rel == genred::Matrix::identity(ring, q);
    if (m == expected && m >= mu && sw.P.cols() == m && exact) ++ok;
    notes += (i ? "," : "") + std::to_string(q) + "->" + std::to_string(m) + "(min " + std::to_string(mu) + ")";
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " regenerated at the bound, SNF-checked [" +
                           notes + "]"};
}

Outcome criterion11() {
  std::mt19937_64 rng(kSeed + 11);
  const auto ring = poly::make_ring(0, {"x"});
  const auto A = zariski::ambient(ring);
  const genred::Matrix D = genred::Matrix::from_rows(
      ring, {{poly::Poly::constant(ring, 1), poly::Poly(ring), poly::Poly(ring)},
             {poly::Poly(ring), poly::Poly::constant(ring, 1), poly::Poly(ring)},
             {poly::Poly(ring), poly::Poly(ring), poly::Poly(ring)}});
  int ok = 0;
  for (int i = 0; i < 10; ++i) {
    auto [Pm, Pinv] = testsupport::random_elementary(rng, ring, 3, 3, 1);
    auto [G, Ginv] = testsupport::random_elementary(rng, ring, 3, 4, 1);
    const genred::Matrix F = Pm * D * Pinv;
    const genred::Vec g = G.column(2);
    const genred::Vec C = Pm.apply({g[0], g[1], poly::Poly(ring)});
    auto bc = genred::bass_cancel(A, F, C, g[2], 2);
    genred::Vec v = C;
    v.push_back(g[2]);
    v = (bc.psi[2] * bc.psi[1] * bc.psi[0]).apply(v);
    bool good = v[3] == poly::Poly::constant(ring, 1) && v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
    for (int k = 0; k < 3; ++k) good = good && bc.psi[k] * bc.psi_inv[k] == genred::Matrix::identity(ring, 4);
    if (good) ++ok;
  }
  return {ok == 10, std::to_string(ok) + "/10 instances replay to (0,1) with exact inverses"};
}

}  // namespace

int main() {
  const auto sample = lattice_sample();
  bool all = true;
  all &= report(1, kLimit1, [&] { return criterion1(sample); });
  all &= report(2, 0, [&] { return criterion2(sample); });
  all &= report(3, kLimit3, criterion3);
  all &= report(4, kLimit4, [&] { return criterion4(sample); });
  all &= report(5, 0, [&] { return criterion5(sample); });
  all &= report(6, kLimit6, criterion6);
  all &= report(7, kLimit7, criterion7);
  all &= report(8, 0, criterion8);
  all &= report(9, kLimit9, criterion9);
  all &= report(10, kLimit10, criterion10);
  all &= report(11, kLimit11, criterion11);
  return all ? 0 : 1;
}
