#include "hecke/levels.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "hecke/error.hpp"

namespace hecke {

long long budget_from_env(long long fallback) {
  const char* s = std::getenv("HECKE_BUDGET");
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0) return fallback;
  return v;
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Saturating q^e, capped just above the budget so overflow cannot hide a blowup.
long long capped_pow(long long q, int e, long long cap) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= q;
    if (r > cap) return cap + 1;
  }
  return r;
}

RatF poly_from_coeffs(const Field& f, const std::vector<std::uint32_t>& c) { return RatF(Poly(f, c)); }

// Matrix modulo t^r as four coefficient vectors of length r.
struct Trunc {
  std::vector<std::uint32_t> e[4];
};

Trunc to_trunc(const LevelRElement& A) {
  Trunc T;
  const std::size_t r = A.g.size();
  for (auto& v : T.e) v.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    T.e[0][i] = A.g[i].a;
    T.e[1][i] = A.g[i].b;
    T.e[2][i] = A.g[i].c;
    T.e[3][i] = A.g[i].d;
  }
  return T;
}

LevelRElement from_trunc(int n, const Trunc& T) {
  LevelRElement A;
  A.n = n;
  const std::size_t r = T.e[0].size();
  A.g.resize(r);
  for (std::size_t i = 0; i < r; ++i) A.g[i] = {T.e[0][i], T.e[1][i], T.e[2][i], T.e[3][i]};
  return A;
}

void mul_series(const Field& f, const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                std::vector<std::uint32_t>& acc) {
  const std::size_t r = acc.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < r; ++j) acc[i + j] = f.add(acc[i + j], f.mul(x[i], y[j]));
  }
}

Trunc mul_trunc(const Field& f, const Trunc& X, const Trunc& Y) {
  Trunc Z;
  const std::size_t r = X.e[0].size();
  for (auto& v : Z.e) v.assign(r, 0);
  // [a b; c d]
  mul_series(f, X.e[0], Y.e[0], Z.e[0]);
  mul_series(f, X.e[1], Y.e[2], Z.e[0]);
  mul_series(f, X.e[0], Y.e[1], Z.e[1]);
  mul_series(f, X.e[1], Y.e[3], Z.e[1]);
  mul_series(f, X.e[2], Y.e[0], Z.e[2]);
  mul_series(f, X.e[3], Y.e[2], Z.e[2]);
  mul_series(f, X.e[2], Y.e[1], Z.e[3]);
  mul_series(f, X.e[3], Y.e[3], Z.e[3]);
  return Z;
}

// Lexicographic order on (g_0.a, g_0.b, g_0.c, g_0.d, g_1.a, ...).
bool trunc_less(const Trunc& X, const Trunc& Y) {
  const std::size_t r = X.e[0].size();
  for (std::size_t i = 0; i < r; ++i)
    for (int k = 0; k < 4; ++k)
      if (X.e[k][i] != Y.e[k][i]) return X.e[k][i] < Y.e[k][i];
  return false;
}

// The group zeta * U acting on the left, constant part of zeta normalized to 1.
std::vector<Trunc> stabilizer_group(const Field& f, int n, int r) {
  const std::uint32_t q = f.q();
  std::vector<Trunc> us;
  auto blank = [&]() {
    Trunc T;
    for (auto& v : T.e) v.assign(static_cast<std::size_t>(r), 0);
    return T;
  };
  if (n == 0) {
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          for (std::uint32_t d = 0; d < q; ++d) {
            if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
            Trunc T = blank();
            T.e[0][0] = a;
            T.e[1][0] = b;
            T.e[2][0] = c;
            T.e[3][0] = d;
            us.push_back(std::move(T));
          }
  } else {
    const int m = std::min(n, r - 1);
    const long long np = ipow(q, m + 1);
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b)
        for (long long code = 0; code < np; ++code) {
          Trunc T = blank();
          T.e[0][0] = a;
          T.e[3][0] = b;
          long long c = code;
          for (int i = 0; i <= m; ++i) {
            T.e[1][static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % q);
            c /= q;
          }
          us.push_back(std::move(T));
        }
  }
  std::vector<Trunc> out;
  const long long nz = ipow(q, r - 1);
  for (long long code = 0; code < nz; ++code) {
    std::vector<std::uint32_t> z(static_cast<std::size_t>(r), 0);
    z[0] = 1;
    long long c = code;
    for (int i = 1; i < r; ++i) {
      z[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    for (const Trunc& U : us) {
      Trunc T = blank();
      for (int k = 0; k < 4; ++k) mul_series(f, z, U.e[k], T.e[k]);
      out.push_back(std::move(T));
    }
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller index as root so classes are keyed by first member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

Mat2 LevelRElement::unit_part(const Field& f) const {
  std::vector<std::uint32_t> e[4];
  for (auto& v : e) v.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    e[0][i] = g[i].a;
    e[1][i] = g[i].b;
    e[2][i] = g[i].c;
    e[3][i] = g[i].d;
  }
  return {poly_from_coeffs(f, e[0]), poly_from_coeffs(f, e[1]), poly_from_coeffs(f, e[2]), poly_from_coeffs(f, e[3])};
}

Mat2 LevelRElement::matrix(const Field& f) const { return Mat2::p_power(f, n) * unit_part(f); }

bool LevelRElement::operator<(const LevelRElement& o) const {
  if (n != o.n) return n < o.n;
  return g < o.g;
}

LevelRElement truncate_cofactor(int n, const Mat2& k, int r) {
  LevelRElement A;
  A.n = n;
  if (r == 0) return A;
  const std::vector<std::uint32_t> a = k.a.series(0, r - 1), b = k.b.series(0, r - 1), c = k.c.series(0, r - 1),
                                   d = k.d.series(0, r - 1);
  A.g.resize(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < A.g.size(); ++i) A.g[i] = {a[i], b[i], c[i], d[i]};
  return A;
}

std::vector<Mat2> klift_enum(const Field& f, int r, long long budget) {
  if (r < 1) throw Error(ErrorKind::UnsupportedDescriptor, "klift needs r >= 1");
  const long long count = capped_pow(f.q(), 4 * (r - 1), budget);
  if (count > budget) throw Error(ErrorKind::BudgetExceeded, "klift enumeration exceeds the budget");
  const std::uint32_t q = f.q();
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long code = 0; code < count; ++code) {
    std::vector<std::uint32_t> e[4];
    for (auto& v : e) v.assign(static_cast<std::size_t>(std::max(1, 2 * (r - 1) + 1)), 0);
    e[0][0] = 1;
    e[3][0] = 1;
    long long c = code;
    for (int j = r; j <= 2 * (r - 1); ++j)
      for (auto& v : e) {
        v[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
    out.push_back({poly_from_coeffs(f, e[0]), poly_from_coeffs(f, e[1]), poly_from_coeffs(f, e[2]),
                   poly_from_coeffs(f, e[3])});
  }
  return out;
}

bool membership_central_gamma(const Mat2& M) {
  const RatF det = M.det();
  if (det.is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  // z^2 det M must be a constant, so det M = c (A/B)^2 with A, B monic.
  std::optional<Poly> A = sqrt_monic(det.num().monic());
  if (!A) return false;
  std::optional<Poly> B = sqrt_monic(det.den());
  if (!B) return false;
  return M.scaled(RatF(*B, *A)).in_gamma_x();
}

bool equivalent_at_level(const Field& f, const LevelRElement& A, const LevelRElement& B,
                         const std::vector<Mat2>& klift) {
  if (A.n != B.n) return false;
  const Mat2 X = A.matrix(f);
  const Mat2 Yinv = B.matrix(f).inverse();
  for (const Mat2& k : klift)
    if (membership_central_gamma(X * k * Yinv)) return true;
  return false;
}

LevelRElement orbit_canonical(const Field& f, const LevelRElement& A) {
  if (A.g.empty()) return A;
  const Trunc T = to_trunc(A);
  const std::vector<Trunc> H = stabilizer_group(f, A.n, A.r());
  Trunc best = T;
  for (const Trunc& h : H) {
    Trunc cand = mul_trunc(f, h, T);
    if (trunc_less(cand, best)) best = std::move(cand);
  }
  return from_trunc(A.n, best);
}

bool orbit_equivalent(const Field& f, const LevelRElement& A, const LevelRElement& B) {
  if (A.n != B.n || A.r() != B.r()) return false;
  return orbit_canonical(f, A) == orbit_canonical(f, B);
}

std::vector<LevelRElement> fiber_candidates(const Field& f, int n, int r) {
  const std::uint32_t q = f.q();
  std::vector<FqMat2> gl2;
  for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
    std::uint32_t c = code;
    FqMat2 m;
    m.a = c % q;
    c /= q;
    m.b = c % q;
    c /= q;
    m.c = c % q;
    c /= q;
    m.d = c % q;
    if (m.det(f) != 0) gl2.push_back(m);
  }
  const long long rest = ipow(q, 4 * (r - 1));
  std::vector<LevelRElement> out;
  for (const FqMat2& g0 : gl2) {
    for (long long code = 0; code < rest; ++code) {
      LevelRElement A;
      A.n = n;
      A.g.push_back(g0);
      long long c = code;
      for (int i = 1; i < r; ++i) {
        FqMat2 m;
        m.a = static_cast<std::uint32_t>(c % q);
        c /= q;
        m.b = static_cast<std::uint32_t>(c % q);
        c /= q;
        m.c = static_cast<std::uint32_t>(c % q);
        c /= q;
        m.d = static_cast<std::uint32_t>(c % q);
        c /= q;
        A.g.push_back(m);
      }
      out.push_back(std::move(A));
    }
  }
  return out;
}

FiberClasses enumerate_fiber_classes(const Field& f, int n, int r, ClassRoute route, long long budget) {
  if (r < 1) throw Error(ErrorKind::UnsupportedDescriptor, "fiber enumeration needs r >= 1");
  if (n < 0) throw Error(ErrorKind::UnsupportedDescriptor, "level index must be nonnegative");
  const long long per_candidate = capped_pow(f.q(), 4 * (r - 1), budget);
  if (per_candidate > budget) throw Error(ErrorKind::BudgetExceeded, "fiber candidates exceed the budget");
  const std::vector<LevelRElement> cand = fiber_candidates(f, n, r);
  FiberClasses out;
  UnionFind uf(cand.size());

  if (route == ClassRoute::Orbit) {
    std::map<LevelRElement, std::size_t> first;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      auto [it, fresh] = first.emplace(orbit_canonical(f, cand[i]), i);
      if (!fresh) uf.unite(it->second, i);
    }
  } else {
    // Level-r equivalence refines level one, so only same-label pairs are compared.
    std::map<Vertex, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < cand.size(); ++i)
      buckets[reduce_ramified1(Mat2::p_power(f, n) * Mat2::from_fq(f, cand[i].g[0]))].push_back(i);
    long long pairs = 0;
    for (const auto& [v, idx] : buckets) pairs += static_cast<long long>(idx.size()) * (idx.size() - 1) / 2;
    const std::vector<Mat2> klift = klift_enum(f, r, budget);
    if (pairs > 0 && pairs > budget / static_cast<long long>(klift.size()))
      throw Error(ErrorKind::BudgetExceeded, "pairwise oracle calls exceed the budget (" + std::to_string(pairs) +
                                                 " pairs x " + std::to_string(klift.size()) + " lifts)");
    std::vector<Mat2> X(cand.size()), Yinv(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
      X[i] = cand[i].matrix(f);
      Yinv[i] = X[i].inverse();
    }
    for (const auto& [v, idx] : buckets) {
      const std::size_t b = idx.size();
      std::vector<char> rel(b * b, 0);
      for (std::size_t i = 0; i < b; ++i) {
        rel[i * b + i] = 1;
        for (std::size_t j = i + 1; j < b; ++j) {
          bool eq = false;
          for (const Mat2& k : klift) {
            ++out.oracle_calls;
            if (membership_central_gamma(X[idx[i]] * k * Yinv[idx[j]])) {
              eq = true;
              break;
            }
          }
          rel[i * b + j] = rel[j * b + i] = eq;
          if (eq) uf.unite(idx[i], idx[j]);
        }
      }
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = i + 1; j < b; ++j)
          if ((uf.find(idx[i]) == uf.find(idx[j])) != static_cast<bool>(rel[i * b + j]))
            throw Error(ErrorKind::OracleInconsistent, "level-" + std::to_string(r) + " relation is not transitive over c_" +
                                                           std::to_string(n));
    }
  }

  std::map<std::size_t, std::size_t> class_id;
  out.class_of.resize(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::size_t root = uf.find(i);
    auto [it, fresh] = class_id.emplace(root, out.reps.size());
    if (fresh) out.reps.push_back(cand[i]);
    out.class_of[i] = it->second;
  }
  return out;
}

FiberReport fiber_report(const Field& f, int r, int n_max, ClassRoute route, long long budget) {
  if (r < 0 || n_max < 0) throw Error(ErrorKind::UnsupportedDescriptor, "r and n_max must be nonnegative");
  FiberReport rep;
  rep.q = f.q();
  rep.r = r;
  for (int n = 0; n <= n_max; ++n)
    rep.counts.push_back(r == 0 ? 1 : enumerate_fiber_classes(f, n, r, route, budget).reps.size());
  int m = n_max;
  while (m > 0 && rep.counts[static_cast<std::size_t>(m - 1)] == rep.counts.back()) --m;
  if (m < n_max) {
    rep.stabilized_at = m;
    rep.tail_count = rep.counts.back();
  }
  return rep;
}

std::string FiberReport::to_json() const {
  nlohmann::ordered_json j;
  j["q"] = q;
  j["r"] = r;
  j["counts"] = counts;
  j["stabilized_at"] = stabilized_at ? nlohmann::ordered_json(*stabilized_at) : nlohmann::ordered_json(nullptr);
  j["tail_count"] = tail_count ? nlohmann::ordered_json(*tail_count) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::size_t predicted_fiber_size(std::uint32_t q, int r, int n) {
  if (r == 0) return 1;
  if (n == 0) return static_cast<std::size_t>(ipow(q, 3 * (r - 1)));
  return static_cast<std::size_t>((q + 1) * ipow(q, 3 * r - 3 - std::min(n, r - 1)));
}

LevelRModel::LevelRModel(const Field& f, int r) : f_(f), r_(r) {
  if (r < 1) throw Error(ErrorKind::UnsupportedDescriptor, "level r must be at least 1");
}

namespace {

// 0 for the identity, 1 for another constant theta_w, 2 otherwise.
int theta_rank(const LevelRElement& A) {
  for (std::size_t i = 1; i < A.g.size(); ++i)
    if (!(A.g[i] == FqMat2{0, 0, 0, 0})) return 2;
  const FqMat2& g = A.g[0];
  if (g == FqMat2::identity()) return 0;
  return (g.a == 1 && g.b == 0 && g.d == 1) || g == FqMat2{0, 1, 1, 0} ? 1 : 2;
}

}  // namespace

const LevelRModel::Fiber& LevelRModel::classes(int n) const {
  // The orbit structure depends on n only through min(n, r - 1) once n >= 1.
  const int key = n == 0 ? 0 : std::min(n, r_ - 1) + 1;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::map<LevelRElement, LevelRElement> best;
  for (LevelRElement A : fiber_candidates(f_, n, r_)) {
    LevelRElement c = orbit_canonical(f_, A);
    c.n = 0;
    A.n = 0;
    auto [pos, fresh] = best.emplace(c, A);
    if (!fresh && theta_rank(A) < theta_rank(pos->second)) pos->second = A;
  }
  Fiber fib;
  for (auto& [c, A] : best) {
    fib.forms.push_back(c);
    fib.reps.push_back(A);
  }
  return cache_.emplace(key, std::move(fib)).first->second;
}

std::vector<Vertex> LevelRModel::vertices_at(int n) const {
  std::vector<Vertex> out;
  const std::size_t count = classes(n).forms.size();
  for (std::size_t i = 0; i < count; ++i) out.push_back({n, static_cast<int>(i)});
  return out;
}

LevelRElement LevelRModel::element(const Vertex& v) const {
  const auto& cl = classes(v.n).reps;
  if (v.label < 0 || static_cast<std::size_t>(v.label) >= cl.size())
    throw Error(ErrorKind::UnsupportedDescriptor, "no level-r class " + std::to_string(v.label) + " over c_" + std::to_string(v.n));
  LevelRElement A = cl[static_cast<std::size_t>(v.label)];
  A.n = v.n;
  return A;
}

Mat2 LevelRModel::representative(const Vertex& v) const { return element(v).matrix(f_); }

Vertex LevelRModel::classify(const Mat2& M) const {
  const Decomposition dec = decompose(M);
  LevelRElement c = orbit_canonical(f_, truncate_cofactor(dec.n, dec.k, r_));
  c.n = 0;
  const auto& cl = classes(dec.n).forms;
  auto it = std::lower_bound(cl.begin(), cl.end(), c);
  if (it == cl.end() || !(*it == c)) throw Error(ErrorKind::OracleInconsistent, "cofactor outside the enumerated classes");
  return {dec.n, static_cast<int>(it - cl.begin())};
}

Neighbors neighbors_general_r(const OperatorDesc& desc, const LevelRModel& model, const Vertex& v) {
  if (desc.level != Level::GeneralR || desc.r != model.r())
    throw Error(ErrorKind::UnsupportedDescriptor, "descriptor does not match the level-r model");
  return neighbors(desc, model, v);
}

}  // namespace hecke
