#include "hecke/reduction.hpp"

#include "hecke/error.hpp"

namespace hecke {

namespace {

Mat2 upper_unipotent(const RatF& x) {
  const Field& f = x.field();
  return {RatF::one(f), x, RatF(f), RatF::one(f)};
}

// Splits h into the part in F_q[1/t] (absorbed into gamma on the left), the
// part of valuation >= m (absorbed into k on the right) and what remains in
// degrees 1..m-1.
void strip(int m, RatF& h, Mat2& gamma, Mat2& k) {
  if (h.is_zero()) return;
  const Field& f = h.field();
  const int v = h.valuation();
  const int hi = std::max(0, m - 1);
  if (hi < v) {
    // entirely of valuation >= m with m <= v
    k = upper_unipotent(h * RatF::monomial(f, 1, -m)) * k;
    h = RatF(f);
    return;
  }
  std::vector<std::uint32_t> s = h.series(v, hi);
  if (v <= 0) {
    std::vector<std::uint32_t> neg(s.begin(), s.begin() + (1 - v));
    RatF h_neg = RatF::laurent(f, v, neg);
    if (!h_neg.is_zero()) {
      gamma = gamma * upper_unipotent(h_neg);
      h = h - h_neg;
    }
  }
  RatF h_mid(f);
  if (m >= 2) {
    int lo = std::max(1, v);
    std::vector<std::uint32_t> mid(s.begin() + (lo - v), s.end());
    h_mid = RatF::laurent(f, lo, mid);
  }
  RatF h_hi = h - h_mid;
  if (!h_hi.is_zero()) k = upper_unipotent(h_hi * RatF::monomial(f, 1, -m)) * k;
  h = h_mid;
}

}  // namespace

Mat2 Decomposition::product() const { return gamma.scaled(z) * Mat2::p_power(z.field(), n) * k; }

TriangularForm iwasawa_triangularize(const Mat2& M) {
  const Field& f = M.field();
  if (M.det().is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  TriangularForm out;
  out.gamma = Mat2::identity(f);
  out.k = Mat2::identity(f);
  Mat2 X = M;
  if (!X.c.is_zero() && (X.d.is_zero() || X.c.valuation() < X.d.valuation())) {
    const Mat2 S = Mat2::swap(f);
    X = X * S;
    out.k = S;
  }
  if (!X.c.is_zero()) {
    RatF r = X.c / X.d;
    X.a = X.a - X.b * r;
    X.c = RatF(f);
    out.k = Mat2{RatF::one(f), RatF(f), r, RatF::one(f)} * out.k;
  }
  out.z = X.d;
  RatF di = X.d.inv();
  RatF diag = X.a * di;
  out.h = X.b * di;
  out.m = diag.valuation();
  RatF u = diag * RatF::monomial(f, 1, -out.m);
  out.k = Mat2::diag(u, RatF::one(f)) * out.k;
  strip(out.m, out.h, out.gamma, out.k);
  return out;
}

Decomposition reduce_upper(TriangularForm form) {
  const Field& f = form.z.field();
  if (!form.h.is_zero()) {
    const RatF& h = form.h;
    bool ok = h.den().is_one() && h.num().valuation() >= 1 && static_cast<int>(*h.num().degree()) <= form.m - 1;
    if (!ok) throw Error(ErrorKind::BadSupport, "h must be supported in degrees 1..m-1");
  }
  const Mat2 S = Mat2::swap(f);
  int m = form.m;
  RatF h = form.h;
  Mat2 gamma = form.gamma, k = form.k;
  RatF z = form.z;
  while (!h.is_zero()) {
    // [[t^m, s t^j],[0,1]] = S [[t^(m-2j), s^-1 t^-j],[0,1]] (s^-1 t^j) [[-1,0],[s t^(m-j), s^2]]
    const int j = h.valuation();
    const RatF tj = RatF::monomial(f, 1, j);
    const RatF s = h / tj;
    const RatF sinv = s.inv();
    gamma = gamma * S;
    z = z * sinv * tj;
    k = Mat2{RatF::constant(f, f.neg(1)), RatF(f), s * RatF::monomial(f, 1, m - j), s * s} * k;
    m -= 2 * j;
    h = sinv / tj;
    strip(m, h, gamma, k);
  }
  Decomposition out;
  if (m > 0) {
    gamma = gamma * S;
    z = z * RatF::monomial(f, 1, m);
    k = S * k;
    out.n = m;
  } else {
    out.n = -m;
  }
  out.gamma = std::move(gamma);
  out.z = std::move(z);
  out.k = std::move(k);
  return out;
}

Decomposition decompose(const Mat2& M) { return reduce_upper(iwasawa_triangularize(M)); }

int reduce_unramified(const Mat2& M) { return decompose(M).n; }

Vertex vertex_from_decomposition(const Field& f, const Decomposition& dec) {
  if (dec.n == 0) return Vertex::base();
  FqMat2 kbar = dec.k.mod_t();
  ProjPoint w = proj_normalize(f, kbar.c, kbar.d);
  return {dec.n, static_cast<int>(w.index(f))};
}

Vertex reduce_ramified1(const Mat2& M) { return vertex_from_decomposition(M.field(), decompose(M)); }

Mat2 theta(const Field& f, const ProjPoint& w) {
  if (w.infinite) return Mat2::swap(f);
  return {RatF::one(f), RatF(f), RatF::constant(f, w.a), RatF::one(f)};
}

Mat2 ramified_representative(const Field& f, const Vertex& v) {
  if (v.n == 0) return Mat2::identity(f);
  return Mat2::p_power(f, v.n) * theta(f, ProjPoint::from_index(f, static_cast<std::uint32_t>(v.label)));
}

}  // namespace hecke
