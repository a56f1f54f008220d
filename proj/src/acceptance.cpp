#include "hecke/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "hecke/eigen.hpp"
#include "hecke/error.hpp"
#include "hecke/perturb.hpp"

namespace hecke::acceptance {

namespace {

using NbMap = std::map<Vertex, long long>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

// Every graph built during a run, so invariants can be checked across all of them.
class GraphCache {
 public:
  const HeckeGraph& get(const OperatorDesc& desc, int radius) {
    auto key = std::make_tuple(desc.field->q(), static_cast<int>(desc.level), desc.r, desc.at_x, desc.degree_y,
                               static_cast<int>(desc.exponent), radius);
    auto it = graphs_.find(key);
    if (it == graphs_.end()) it = graphs_.emplace(key, build_graph(desc, radius)).first;
    return it->second;
  }
  template <class F>
  void for_each(F&& fn) const {
    for (const auto& [k, g] : graphs_) fn(g);
  }
  std::size_t size() const { return graphs_.size(); }

 private:
  std::map<std::tuple<std::uint32_t, int, int, bool, int, int, int>, HeckeGraph> graphs_;
};

GraphCache& cache() {
  static GraphCache c;
  return c;
}

NbMap out_map(const HeckeGraph& g, std::size_t i) {
  NbMap m;
  auto [lo, hi] = g.out_range(i);
  for (std::size_t e = lo; e < hi; ++e) m[g.vertices[g.edges[e].dst]] = g.edges[e].mult;
  return m;
}

struct Deviation {
  Vertex src, dst;
  long long expected = 0, computed = 0;
};

std::vector<Deviation> compare(const HeckeGraph& g, const std::function<NbMap(const Vertex&)>& ref) {
  std::vector<Deviation> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (g.is_frontier(i)) continue;
    const Vertex v = g.vertices[i];
    NbMap got = out_map(g, i), want = ref(v);
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    std::set<Vertex> keys;
    for (const auto& [u, m] : got) keys.insert(u);
    for (const auto& [u, m] : want) keys.insert(u);
    for (const Vertex& u : keys) {
      long long a = want.count(u) ? want.at(u) : 0, b = got.count(u) ? got.at(u) : 0;
      if (a != b) out.push_back({v, u, a, b});
    }
  }
  return out;
}

std::string describe(const OperatorDesc& desc, const Deviation& d) {
  return vertex_label(desc, d.src) + " -> " + vertex_label(desc, d.dst) + ": reference " + std::to_string(d.expected) +
         ", computed " + std::to_string(d.computed);
}

// Reference neighborhoods with q substituted.

NbMap ref_unramified_d6(long long q, const Vertex& v) {
  auto c = [](int n) { return Vertex{n, -1}; };
  const long long q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q, q6 = q5 * q;
  switch (v.n) {
    case 0: return {{c(0), q6 - q5}, {c(2), q5 - q3}, {c(4), q3 - q}, {c(6), q + 1}};
    case 1: return {{c(1), q6 - q4}, {c(3), q4 - q2}, {c(5), q2}, {c(7), 1}};
    case 2: return {{c(0), q6 - q5}, {c(2), q5 - q3}, {c(4), q3}, {c(8), 1}};
    case 3: return {{c(1), q6 - q4}, {c(3), q4}, {c(9), 1}};
    case 4: return {{c(0), q6 - q5}, {c(2), q5}, {c(10), 1}};
    case 5: return {{c(1), q6}, {c(11), 1}};
    default: return {{c(v.n - 6), q6}, {c(v.n + 6), 1}};
  }
}

int idx_10() { return 0; }
int idx_01(const Field& f) { return static_cast<int>(f.q()); }

NbMap ref_ramified_d1(const Field& f, const Vertex& v) {
  const long long q = f.q();
  if (v.n == 0) return {{{1, idx_10()}, 1}, {{1, idx_01(f)}, q}};
  if (v.n == 1) return {{Vertex::base(), q}, {{2, v.label}, 1}};
  return {{{v.n - 1, v.label}, q}, {{v.n + 1, v.label}, 1}};
}

NbMap ref_ramified_d2(const Field& f, const Vertex& v) {
  const long long q = f.q();
  if (v.n == 0) return {{Vertex::base(), q * q - q}, {{2, idx_10()}, 1}, {{2, idx_01(f)}, q}};
  if (v.n == 1) return {{v, q * q}, {{3, v.label}, 1}};
  if (v.n == 2) return {{Vertex::base(), q * q}, {{4, v.label}, 1}};
  return {{{v.n - 2, v.label}, q * q}, {{v.n + 2, v.label}, 1}};
}

// [1:0] <-> [0:1], [1:a] <-> [1:a^-1]
int partner(const Field& f, int label) {
  if (label == idx_10()) return idx_01(f);
  if (label == idx_01(f)) return idx_10();
  ProjPoint w = ProjPoint::from_index(f, static_cast<std::uint32_t>(label));
  return static_cast<int>(ProjPoint::finite(f.inv(w.a)).index(f));
}

NbMap ref_ramified_d3(const Field& f, const Vertex& v) {
  const long long q = f.q(), q2 = q * q, q3 = q2 * q;
  if (v.n == 0)
    return {{{3, idx_10()}, 1}, {{3, idx_01(f)}, q}, {{1, idx_10()}, q2 - q}, {{1, idx_01(f)}, q3 - q2}};
  if (v.n == 1) return {{Vertex::base(), q3 - q2}, {{2, partner(f, v.label)}, q2}, {{4, v.label}, 1}};
  if (v.n == 2) return {{{1, partner(f, v.label)}, q3}, {{5, v.label}, 1}};
  if (v.n == 3) return {{Vertex::base(), q3}, {{6, v.label}, 1}};
  return {{{v.n - 3, v.label}, q3}, {{v.n + 3, v.label}, 1}};
}

NbMap ref_at_x(const Field& f, const Vertex& v) {
  const long long q = f.q();
  if (v.n == 0) return {{{1, idx_10()}, q}};
  if (v.label == idx_01(f)) {
    NbMap m;
    for (std::uint32_t a = 0; a < f.q(); ++a) m[{v.n + 1, static_cast<int>(ProjPoint::finite(a).index(f))}] = 1;
    return m;
  }
  return {{v.n == 1 ? Vertex::base() : Vertex{v.n - 1, idx_10()}, q}};
}

// --- criteria -------------------------------------------------------------

Result c1_unramified_structure() {
  Result res{1, "unramified graph structure", true, {}};
  int graphs = 0, checked = 0;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = field_of_order(q);
    for (int d = 1; d <= 6; ++d) {
      const OperatorDesc desc = OperatorDesc::unramified(f, d);
      const HeckeGraph& g = cache().get(desc, 2 * d + 3);
      ++graphs;
      const long long qd = ipow(q, d);
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.is_frontier(i)) continue;
        const int n = g.vertices[i].n;
        const NbMap m = out_map(g, i);
        ++checked;
        bool ok = true;
        if (n >= d) {
          ok = m == NbMap{{{n - d, -1}, qd}, {{n + d, -1}, 1}};
        } else {
          NbMap outside;
          for (const auto& [u, k] : m)
            if (u.n >= d) outside.emplace(u, k);
          ok = outside == NbMap{{{n + d, -1}, n == 0 ? static_cast<long long>(q) + 1 : 1}};
        }
        if (!ok) {
          res.pass = false;
          res.details.push_back("q=" + std::to_string(q) + " d=" + std::to_string(d) + " c_" + std::to_string(n) +
                                " violates the expected neighbor pattern");
        }
      }
    }
  }
  res.details.insert(res.details.begin(),
                     std::to_string(graphs) + " graphs, " + std::to_string(checked) + " completed vertices checked");
  return res;
}

Result c2_degree_six_table() {
  Result res{2, "unramified d=6 table reproduction", true, {}};
  const auto t0 = Clock::now();
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    const OperatorDesc desc = OperatorDesc::unramified(f, 6);
    const HeckeGraph& g = cache().get(desc, 13);
    auto dev = compare(g, [&](const Vertex& v) { return ref_unramified_d6(q, v); });
    res.details.push_back("q=" + std::to_string(q) + ": " + std::to_string(g.edges.size()) + " edges, " +
                          std::to_string(dev.size()) + " deviations");
    for (const auto& d : dev) res.details.push_back("  " + describe(desc, d));
    if (!dev.empty()) res.pass = false;
  }
  const double dt = seconds_since(t0);
  res.details.push_back("runtime " + fmt_seconds(dt) + " (limit 10 s)");
  if (dt >= 10.0) res.pass = false;
  return res;
}

std::vector<OperatorDesc> sum_matrix() {
  std::vector<OperatorDesc> out;
  for (std::uint32_t q : {2u, 3u, 4u})
    for (int d = 1; d <= 6; ++d) out.push_back(OperatorDesc::unramified(field_of_order(q), d));
  for (std::uint32_t q : {2u, 3u})
    for (int d = 1; d <= 3; ++d) out.push_back(OperatorDesc::ramified(field_of_order(q), d));
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) out.push_back(OperatorDesc::ramified_at_x(field_of_order(q)));
  const Field& f2 = field_of_order(2);
  out.push_back(OperatorDesc::level_r(f2, 2, true, 1));
  out.push_back(OperatorDesc::level_r(f2, 2, false, 1));
  out.push_back(OperatorDesc::level_r(f2, 2, false, 2));
  return out;
}

int sum_radius(const OperatorDesc& d) {
  if (d.level == Level::GeneralR) return 4;
  if (d.level == Level::Unramified) return 2 * d.degree_y + 3;
  return d.at_x ? 8 : std::max(8, 3 * d.degree_y);
}

Result c3_multiplicity_sums() {
  Result res{3, "multiplicity sums", true, {}};
  for (const OperatorDesc& d : sum_matrix()) cache().get(d, sum_radius(d));
  std::size_t vertices = 0, graphs = 0;
  cache().for_each([&](const HeckeGraph& g) {
    ++graphs;
    const long long want = g.desc.out_degree();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.is_frontier(i)) continue;
      ++vertices;
      long long s = 0;
      for (const auto& [u, m] : out_map(g, i)) s += m;
      if (s != want) {
        res.pass = false;
        res.details.push_back("q=" + std::to_string(g.desc.field->q()) + " " + g.desc.level_name() + " " +
                              vertex_label(g.desc, g.vertices[i]) + " sums to " + std::to_string(s) + ", expected " +
                              std::to_string(want));
      }
    }
  });
  res.details.insert(res.details.begin(), std::to_string(vertices) + " completed vertices over " +
                                              std::to_string(graphs) + " graphs (K, K1 at y and at x, K^(2))");
  return res;
}

Result c4_fibers() {
  Result res{4, "ramified fiber sizes", true, {}};
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    std::string row;
    for (int n = 0; n <= 4; ++n) {
      std::set<Vertex> seen;
      for (const LevelRElement& A : fiber_candidates(f, n, 1)) seen.insert(reduce_ramified1(A.matrix(f)));
      const std::size_t want = n == 0 ? 1 : q + 1;
      row += (n ? "," : "") + std::to_string(seen.size());
      if (seen.size() != want) res.pass = false;
    }
    res.details.push_back("q=" + std::to_string(q) + ": sizes [" + row + "] for n=0..4");
  }
  return res;
}

// Classification stability of every coset matrix behind a deviating edge.
bool perturbation_protocol(const OperatorDesc& desc, const Deviation& dev, int trials, std::uint64_t seed,
                           std::string& note) {
  auto model = make_level_model(desc);
  const CosetReps reps = coset_reps(desc);
  const Mat2 R = model->representative(dev.src);
  std::vector<Mat2> mats;
  for (const Mat2& C : reps.mats) {
    Mat2 M = reps.side == Side::Left ? C * R : R * C;
    if (dev.computed == 0 || model->classify(M) == dev.dst) mats.push_back(M);
  }
  std::vector<Vertex> base;
  for (const Mat2& M : mats) base.push_back(model->classify(M));
  int changed = 0;
  if (mats.empty()) return false;
  for (int t = 0; t < trials; ++t) {
    const std::size_t i = static_cast<std::size_t>(t) % mats.size();
    if (model->classify(random_coset_perturb(mats[i], 1, seed + static_cast<std::uint64_t>(t))) != base[i]) ++changed;
  }
  // the count of matrices landing on dst must reproduce the computed multiplicity
  long long landing = 0;
  for (const Vertex& v : base) landing += v == dev.dst;
  note = std::to_string(trials) + " trials over " + std::to_string(mats.size()) + " coset matrices, " +
         std::to_string(changed) + " classification changes";
  return changed == 0 && landing == dev.computed;
}

Result c5_ramified_tables(const Config& cfg) {
  Result res{5, "ramified d=1,2,3 table reproduction", true, {}};
  bool d1 = true, d2 = true, d3_ok = true;
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    const std::string qs = "q=" + std::to_string(q);

    const OperatorDesc o1 = OperatorDesc::ramified(f, 1);
    auto dev1 = compare(cache().get(o1, 8), [&](const Vertex& v) { return ref_ramified_d1(f, v); });
    res.details.push_back(qs + " d=1: " + std::to_string(dev1.size()) + " deviations");
    for (const auto& d : dev1) res.details.push_back("  " + describe(o1, d));
    d1 = d1 && dev1.empty();

    const OperatorDesc o2 = OperatorDesc::ramified(f, 2);
    auto dev2 = compare(cache().get(o2, 8), [&](const Vertex& v) { return ref_ramified_d2(f, v); });
    res.details.push_back(qs + " d=2: " + std::to_string(dev2.size()) + " deviations (exact match required)");
    for (const auto& d : dev2) res.details.push_back("  " + describe(o2, d));
    d2 = d2 && dev2.empty();

    const OperatorDesc o3 = OperatorDesc::ramified(f, 3);
    auto dev3 = compare(cache().get(o3, 9), [&](const Vertex& v) { return ref_ramified_d3(f, v); });
    res.details.push_back(qs + " d=3: " + std::to_string(dev3.size()) + " deviations, each put through the perturbation protocol");
    for (std::size_t i = 0; i < dev3.size(); ++i) {
      std::string note;
      bool ok = perturbation_protocol(o3, dev3[i], cfg.trials, cfg.seed + 7919 * i, note);
      d3_ok = d3_ok && ok;
      res.details.push_back("  " + describe(o3, dev3[i]) + " [" + (ok ? "stable" : "UNSTABLE") + ": " + note + "]");
    }
  }
  res.pass = d1 && d2 && d3_ok;
  res.details.insert(res.details.begin(), std::string("d=1 ") + (d1 ? "exact" : "MISMATCH") + ", d=2 " +
                                              (d2 ? "exact" : "MISMATCH") + ", d=3 " +
                                              (d3_ok ? "exact or all deviations stable" : "unstable deviation"));
  return res;
}

Result c6_at_x() {
  Result res{6, "operator at x: structure and dimension", true, {}};
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = field_of_order(q);
    const OperatorDesc desc = OperatorDesc::ramified_at_x(f);
    const HeckeGraph& g = cache().get(desc, 8);
    bool degree = true, shifts = true;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.is_frontier(i)) continue;
      long long s = 0;
      for (const auto& [u, m] : out_map(g, i)) {
        s += m;
        int dn = u.n - g.vertices[i].n;
        if (dn != 1 && dn != -1) shifts = false;
      }
      if (s != static_cast<long long>(q)) degree = false;
    }
    auto dev = compare(g, [&](const Vertex& v) { return ref_at_x(f, v); });
    std::string dims;
    bool dim_ok = true;
    if (q <= 3) {
      for (int R : {6, 10}) {
        std::size_t dim = window_dimension(cache().get(desc, R));
        dims += " dim(R=" + std::to_string(R) + ")=" + std::to_string(dim);
        dim_ok = dim_ok && dim == 1;
      }
    }
    res.pass = res.pass && degree && shifts && dim_ok;
    res.details.push_back("q=" + std::to_string(q) + ": out-degree q " + (degree ? "ok" : "FAIL") + ", shifts +-1 " +
                          (shifts ? "ok" : "FAIL") + dims + "; " + std::to_string(dev.size()) +
                          " edges differ from the reference graph (reported only)");
    if (q == 2) {
      for (const auto& d : dev)
        if (d.src.n <= 2) res.details.push_back("  " + describe(desc, d));
    }
  }
  // Closed forms induced by the computed graph.
  const Field& f = field_of_order(3);
  const OperatorDesc desc = OperatorDesc::ramified_at_x(f);
  Eigenform ef = extend_from_nucleus(cache().get(desc, 8), {{Vertex::base(), LambdaScalar(1)}});
  const LambdaScalar l = LambdaScalar::lambda();
  bool ones = true, infs = true;
  LambdaScalar prev_inf(1), qn(1);  // f(c'_0) = 1
  for (int n = 1; n <= 6; ++n) {
    qn = qn * LambdaScalar(3) / l;
    for (std::uint32_t b = 0; b < 3; ++b)
      ones = ones && ef.values.at({n, static_cast<int>(ProjPoint::finite(b).index(f))}) == qn;
    // f(n,[0:1]) = l f(n-1,[0:1]) - (q-1) q^n / l^n
    LambdaScalar want = l * prev_inf - LambdaScalar(2) * qn;
    const LambdaScalar& got = ef.values.at({n, 3});
    infs = infs && got == want;
    prev_inf = got;
  }
  res.details.push_back(std::string("q=3 f(c'_{n,[1:a]}) = q^n/l^n: ") + (ones ? "holds" : "FAILS") +
                        "; f(c'_{n,[0:1]}) = l f(c'_{n-1,[0:1]}) - (q-1) q^n/l^n: " + (infs ? "holds" : "FAILS") +
                        "; f(c'_{1,[0:1]}) = " + ef.values.at({1, 3}).to_string() +
                        " (the alternative form q^{n+2}/l^{n+2} gives 27/l^3)");
  res.pass = res.pass && ones && infs;
  return res;
}

Result c7_dimensions() {
  Result res{7, "eigenspace dimensions", true, {}};
  const auto t0 = Clock::now();
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    std::string row = "q=" + std::to_string(q) + ":";
    auto check = [&](const OperatorDesc& desc, const std::string& name, std::size_t want) {
      const int base = min_window_radius(desc);
      std::vector<int> radii = desc.at_x ? std::vector<int>{6, 10} : std::vector<int>{base, base + desc.degree_y};
      row += " " + name + "=";
      for (std::size_t k = 0; k < radii.size(); ++k) {
        std::size_t dim = window_dimension(cache().get(desc, radii[k]));
        row += (k ? "/" : "") + std::to_string(dim);
        if (dim != want) res.pass = false;
      }
      row += "(want " + std::to_string(want) + ")";
    };
    for (int d = 1; d <= 4; ++d) check(OperatorDesc::unramified(f, d), "K,d" + std::to_string(d), d);
    check(OperatorDesc::ramified_at_x(f), "K1,x", 1);
    for (int d = 1; d <= 3; ++d) check(OperatorDesc::ramified(f, d), "K1,d" + std::to_string(d), d * (q + 1));
    res.details.push_back(row);
  }
  const double dt = seconds_since(t0);
  res.details.push_back("runtime " + fmt_seconds(dt) + " (limit 60 s)");
  if (dt >= 60.0) res.pass = false;
  return res;
}

Mat2 random_matrix(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coef(0, f.q() - 1);
  std::uniform_int_distribution<int> lo(-3, 1), len(1, 4), pick(0, 3);
  for (;;) {
    RatF e[4];
    for (auto& x : e) {
      std::vector<std::uint32_t> c(static_cast<std::size_t>(len(rng)));
      for (auto& v : c) v = coef(rng);
      x = RatF::laurent(f, lo(rng), c);
      if (pick(rng) == 0) x = x / (RatF::one(f) + RatF::monomial(f, 1 + coef(rng) % (f.q() - 1), 1));
    }
    Mat2 M{e[0], e[1], e[2], e[3]};
    if (!M.det().is_zero()) return M;
  }
}

bool audit(const Mat2& M) {
  const Decomposition dec = decompose(M);
  return dec.product() == M && dec.gamma.in_gamma_x() && dec.k.in_k_x() && dec.n >= 0;
}

Result c8_well_defined(const Config& cfg) {
  Result res{8, "reduction well-definedness", true, {}};
  std::size_t audits = 0, audit_fail = 0;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = field_of_order(q);
    for (int r : {0, 1}) {
      std::mt19937_64 rng(cfg.seed + 31 * q + r);
      int changes = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        const Mat2 M = random_matrix(f, rng);
        const Mat2 P = random_coset_perturb(M, r, rng());
        if (r == 0) {
          changes += reduce_unramified(M) != reduce_unramified(P);
        } else {
          changes += reduce_ramified1(M) != reduce_ramified1(P);
        }
        for (const Mat2* X : {&M, &P}) {
          ++audits;
          if (!audit(*X)) ++audit_fail;
        }
      }
      res.details.push_back("q=" + std::to_string(q) + " level " + (r ? "K1" : "K") + ": " +
                            std::to_string(cfg.trials) + " trials, " + std::to_string(changes) + " changes");
      if (changes) res.pass = false;
    }
  }
  // every neighbor matrix of a few graphs
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    for (const OperatorDesc& desc : {OperatorDesc::unramified(f, 2), OperatorDesc::ramified(f, 2), OperatorDesc::ramified_at_x(f)}) {
      auto model = make_level_model(desc);
      const CosetReps reps = coset_reps(desc);
      for (int n = 0; n <= 4; ++n)
        for (const Vertex& v : model->vertices_at(n)) {
          const Mat2 R = model->representative(v);
          for (const Mat2& C : reps.mats) {
            ++audits;
            if (!audit(reps.side == Side::Left ? C * R : R * C)) ++audit_fail;
          }
        }
    }
  }
  res.details.push_back("factorization audit: " + std::to_string(audits) + " reductions, " +
                        std::to_string(audit_fail) + " failures");
  if (audit_fail) res.pass = false;
  return res;
}

Result c9_projection() {
  Result res{9, "projection compatibility", true, {}};
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    for (int d = 1; d <= 3; ++d) {
      const int R = 3 * d;
      const HeckeGraph& ram = cache().get(OperatorDesc::ramified(f, d), R);
      const HeckeGraph& un = cache().get(OperatorDesc::unramified(f, d), R);
      std::size_t bad = 0, checked = 0;
      for (std::size_t i = 0; i < ram.vertices.size(); ++i) {
        if (ram.is_frontier(i)) continue;
        ++checked;
        NbMap pushed;
        for (const auto& [u, m] : out_map(ram, i)) pushed[{u.n, -1}] += m;
        NbMap want;
        for (const auto& [u, m] : un.out({ram.vertices[i].n, -1})) want[u] = m;
        if (pushed != want) ++bad;
      }
      res.details.push_back("q=" + std::to_string(q) + " d=" + std::to_string(d) + ": " + std::to_string(checked) +
                            " vertices, " + std::to_string(bad) + " mismatches");
      if (bad) res.pass = false;
    }
  }
  return res;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Result c10_levels(const Config& cfg) {
  Result res{10, "level-r machinery", true, {}};
  // r = 1 finite oracle against the level-one labels
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    const std::vector<Mat2> klift = klift_enum(f, 1, cfg.budget);
    std::size_t pairs = 0, disagree = 0;
    for (int n = 0; n <= 4; ++n) {
      const auto cand = fiber_candidates(f, n, 1);
      std::vector<Vertex> lab;
      for (const auto& A : cand) lab.push_back(reduce_ramified1(A.matrix(f)));
      for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
          ++pairs;
          if (equivalent_at_level(f, cand[i], cand[j], klift) != (lab[i] == lab[j])) ++disagree;
        }
    }
    res.details.push_back("q=" + std::to_string(q) + " r=1 oracle vs reduction labels: " + std::to_string(pairs) +
                          " pairs, " + std::to_string(disagree) + " disagreements");
    if (disagree) res.pass = false;
    FiberReport r1 = fiber_report(f, 1, 6, ClassRoute::Oracle, cfg.budget);
    bool sane = r1.counts[0] == 1;
    for (std::size_t n = 1; n < r1.counts.size(); ++n) sane = sane && r1.counts[n] == q + 1;
    res.details.push_back("q=" + std::to_string(q) + " r=1 fiber counts " + join(r1.counts) + (sane ? "" : " (expected [1,q+1,...])"));
    if (!sane) res.pass = false;
  }

  // r = 2, q = 2: reported, not asserted beyond completing within budget
  const Field& f2 = field_of_order(2);
  try {
    FiberReport orbit = fiber_report(f2, 2, 6, ClassRoute::Orbit, cfg.budget);
    FiberReport oracle = fiber_report(f2, 2, 6, ClassRoute::Oracle, cfg.budget);
    res.details.push_back("q=2 r=2 fiber counts " + join(orbit.counts) + " (exact orbit test), stabilized at " +
                          (orbit.stabilized_at ? std::to_string(*orbit.stabilized_at) : std::string("-")));
    // oracle equivalences must be genuine: its partition refines the orbit partition
    bool refines = true;
    for (int n = 0; n <= 6; ++n) {
      auto a = enumerate_fiber_classes(f2, n, 2, ClassRoute::Oracle, cfg.budget);
      auto b = enumerate_fiber_classes(f2, n, 2, ClassRoute::Orbit, cfg.budget);
      std::map<std::size_t, std::size_t> img;
      for (std::size_t i = 0; i < a.class_of.size(); ++i) {
        auto [it, fresh] = img.emplace(a.class_of[i], b.class_of[i]);
        if (!fresh && it->second != b.class_of[i]) refines = false;
      }
    }
    res.details.push_back("q=2 r=2 finite-lift oracle counts " + join(oracle.counts) + "; refines the exact partition: " +
                          (refines ? "yes" : "NO"));
  } catch (const Error& e) {
    res.pass = false;
    res.details.push_back(std::string("q=2 r=2 fiber report failed: ") + e.what());
  }

  // dimension = d * tail count at r = 1
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    FiberReport r1 = fiber_report(f, 1, 4, ClassRoute::Orbit, cfg.budget);
    std::string row = "q=" + std::to_string(q) + " r=1 dim vs d*tail:";
    for (int d = 1; d <= 3; ++d) {
      std::size_t dim = window_dimension(cache().get(OperatorDesc::ramified(f, d), 3 * d));
      std::size_t want = static_cast<std::size_t>(d) * r1.tail_count.value_or(0);
      row += " d" + std::to_string(d) + ":" + std::to_string(dim) + "/" + std::to_string(want);
      if (dim != want) res.pass = false;
    }
    res.details.push_back(row);
  }

  // coset systems at x and the r = 1 cross-module check
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    CosetAudit a1 = audit_x_cosets(f, 1, CosetExponent::Derived);
    CosetAudit a2 = audit_x_cosets(f, 2, CosetExponent::Derived);
    CosetAudit p2 = audit_x_cosets(f, 2, CosetExponent::Printed);
    auto show = [](const CosetAudit& a) {
      return std::string(a.pairwise_disjoint ? "disjoint" : "overlapping") + "/" +
             (a.inside_double_coset ? "inside" : "outside");
    };
    res.details.push_back("q=" + std::to_string(q) + " coset reps at x: r=1 " + show(a1) + ", r=2 exponent r " +
                          show(a2) + ", r=2 exponent r-1 " + show(p2));
    if (!a1.ok(q) || !a2.ok(q)) res.pass = false;
  }
  {
    const Field& f = field_of_order(2);
    bool same = true;
    for (bool at_x : {false, true}) {
      OperatorDesc lr = OperatorDesc::level_r(f, 1, at_x, 1);
      OperatorDesc k1 = at_x ? OperatorDesc::ramified_at_x(f) : OperatorDesc::ramified(f, 1);
      LevelRModel model(f, 1);
      auto k1model = make_level_model(k1);
      for (int n = 0; n <= 3; ++n)
        for (const Vertex& v : k1model->vertices_at(n)) {
          NbMap a, b;
          for (const auto& [u, m] : neighbors(k1, *k1model, v)) a[model.classify(k1model->representative(u))] = m;
          for (const auto& [u, m] : neighbors_general_r(lr, model, model.classify(k1model->representative(v)))) b[u] = m;
          same = same && a == b;
        }
    }
    res.details.push_back(std::string("q=2 level-1 neighbors through the level-r path match: ") + (same ? "yes" : "NO"));
    if (!same) res.pass = false;
  }
  {
    const Field& f = field_of_order(2);
    std::string row = "q=2 r=2 window dimensions (reported):";
    for (bool at_x : {false, true}) {
      OperatorDesc desc = OperatorDesc::level_r(f, 2, at_x, 1);
      row += std::string(at_x ? " at x " : " d=1 ") + std::to_string(window_dimension(cache().get(desc, 4)));
    }
    res.details.push_back(row);
  }
  return res;
}

}  // namespace

Result run_criterion(int id, const Config& cfg) {
  try {
    switch (id) {
      case 1: return c1_unramified_structure();
      case 2: return c2_degree_six_table();
      case 3: return c3_multiplicity_sums();
      case 4: return c4_fibers();
      case 5: return c5_ramified_tables(cfg);
      case 6: return c6_at_x();
      case 7: return c7_dimensions();
      case 8: return c8_well_defined(cfg);
      case 9: return c9_projection();
      case 10: return c10_levels(cfg);
      default: break;
    }
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, {std::string("error: ") + e.what()}};
  }
  throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
}

std::vector<Result> run_all(const Config& cfg, std::ostream& out) {
  std::vector<Result> all;
  for (int id = 1; id <= kCriteria; ++id) {
    all.push_back(run_criterion(id, cfg));
    out << format(all.back()) << std::flush;
  }
  return all;
}

std::string format(const Result& r) {
  std::string s = std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + "\n";
  for (const auto& d : r.details) s += "    " + d + "\n";
  return s;
}

}  // namespace hecke::acceptance
