#include "hecke/eigen.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

EigenWindow eigen_window(const HeckeGraph& g) {
  EigenWindow w;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (g.is_frontier(i)) continue;
    w.unknowns.push_back(i);
    auto [lo, hi] = g.out_range(i);
    bool inside = true;
    for (std::size_t e = lo; e < hi; ++e) inside = inside && !g.is_frontier(g.edges[e].dst);
    if (inside) w.interior.push_back(i);
  }
  return w;
}

int min_window_radius(const OperatorDesc& desc) { return desc.at_x ? 3 : 3 * desc.degree_y; }

std::size_t bareiss_rank(std::vector<std::vector<ZPoly>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  ZPoly prev = ZPoly::constant(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const ZPoly& piv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const ZPoly lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        ZPoly v = piv * a[i][j];
        if (!lead.is_zero() && !a[rank][j].is_zero()) v = v - lead * a[rank][j];
        a[i][j] = v.exact_div(prev);
      }
      a[i][c] = ZPoly();
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t window_dimension(const HeckeGraph& g) {
  const EigenWindow w = eigen_window(g);
  std::vector<long> col(g.vertices.size(), -1);
  for (std::size_t k = 0; k < w.unknowns.size(); ++k) col[w.unknowns[k]] = static_cast<long>(k);
  std::vector<std::vector<ZPoly>> rows;
  for (std::size_t v : w.interior) {
    std::vector<std::vector<mpz_class>> coef(w.unknowns.size());
    auto at = [&](std::size_t idx) -> std::vector<mpz_class>& {
      auto& c = coef[static_cast<std::size_t>(col[idx])];
      if (c.empty()) c.assign(2, 0);
      return c;
    };
    at(v)[1] += 1;
    auto [lo, hi] = g.out_range(v);
    for (std::size_t e = lo; e < hi; ++e) at(g.edges[e].dst)[0] -= static_cast<long>(g.edges[e].mult);
    std::vector<ZPoly> row;
    row.reserve(coef.size());
    for (auto& c : coef) row.emplace_back(std::move(c));
    rows.push_back(std::move(row));
  }
  return w.unknowns.size() - bareiss_rank(std::move(rows));
}

std::size_t window_dimension(const OperatorDesc& desc, int radius) {
  if (radius < min_window_radius(desc))
    throw Error(ErrorKind::RadiusTooSmall, "window radius must be at least " + std::to_string(min_window_radius(desc)));
  return window_dimension(build_graph(desc, radius));
}

std::vector<Vertex> seed_domain(const OperatorDesc& desc) {
  if (desc.at_x) return {Vertex::base()};
  return nucleus(desc);
}

namespace {

// Coefficient of f(u) in lambda f(v) - sum m(v,u) f(u).
LambdaScalar coefficient(const HeckeGraph& g, std::size_t v, std::size_t u) {
  LambdaScalar c = v == u ? LambdaScalar::lambda() : LambdaScalar(0);
  auto [lo, hi] = g.out_range(v);
  for (std::size_t e = lo; e < hi; ++e)
    if (g.edges[e].dst == u) c = c - LambdaScalar(g.edges[e].mult);
  return c;
}

template <class S>
std::vector<Vertex> check_impl(const HeckeGraph& g, const std::map<Vertex, S>& values, const S& lambda) {
  std::vector<Vertex> bad;
  for (std::size_t v : eigen_window(g).interior) {
    auto it = values.find(g.vertices[v]);
    if (it == values.end()) {
      bad.push_back(g.vertices[v]);
      continue;
    }
    S rhs(0);
    bool complete = true;
    auto [lo, hi] = g.out_range(v);
    for (std::size_t e = lo; e < hi && complete; ++e) {
      auto jt = values.find(g.vertices[g.edges[e].dst]);
      if (jt == values.end()) {
        complete = false;
      } else {
        rhs = rhs + S(static_cast<long>(g.edges[e].mult)) * jt->second;
      }
    }
    if (!complete || lambda * it->second != rhs) bad.push_back(g.vertices[v]);
  }
  return bad;
}

}  // namespace

Eigenform extend_from_nucleus(const HeckeGraph& g, const std::map<Vertex, LambdaScalar>& seed) {
  std::vector<Vertex> domain = seed_domain(g.desc);
  bool match = domain.size() == seed.size();
  for (const Vertex& v : domain) match = match && seed.count(v) == 1;
  if (!match) throw Error(ErrorKind::SeedDomainMismatch, "seed must be given exactly on the nucleus");

  const EigenWindow w = eigen_window(g);
  std::vector<std::optional<LambdaScalar>> val(g.vertices.size());
  for (const auto& [v, x] : seed) {
    auto i = g.index_of(v);
    if (!i || g.is_frontier(*i)) throw Error(ErrorKind::SeedDomainMismatch, "seed vertex outside the window");
    val[*i] = x;
  }
  std::size_t remaining = w.unknowns.size() - seed.size();
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (std::size_t v : w.interior) {
      std::vector<std::size_t> terms{v};
      auto [lo, hi] = g.out_range(v);
      for (std::size_t e = lo; e < hi; ++e)
        if (g.edges[e].dst != v) terms.push_back(g.edges[e].dst);
      std::optional<std::size_t> missing;
      int count = 0;
      for (std::size_t u : terms)
        if (!val[u]) {
          missing = u;
          ++count;
        }
      if (count != 1) continue;
      const LambdaScalar cu = coefficient(g, v, *missing);
      if (cu.is_zero()) continue;
      LambdaScalar rest(0);
      for (std::size_t u : terms)
        if (u != *missing) rest = rest + coefficient(g, v, u) * *val[u];
      val[*missing] = -rest / cu;
      --remaining;
      progress = true;
    }
  }
  if (remaining > 0)
    throw Error(ErrorKind::Stuck, std::to_string(remaining) + " values undetermined after propagation");
  Eigenform out;
  for (std::size_t i : w.unknowns) out.values.emplace(g.vertices[i], *val[i]);
  if (!check_eigen(g, out).empty()) throw Error(ErrorKind::Inconsistent, "propagated values violate an eigen equation");
  return out;
}

Eigenform extend_from_nucleus(const OperatorDesc& desc, const std::map<Vertex, LambdaScalar>& seed, int radius) {
  return extend_from_nucleus(build_graph(desc, radius), seed);
}

std::vector<Vertex> check_eigen(const HeckeGraph& g, const Eigenform& f) {
  return check_impl(g, f.values, LambdaScalar::lambda());
}

std::vector<Vertex> check_eigen(const HeckeGraph& g, const NumericEigenform& f) {
  return check_impl(g, f.values, f.lambda);
}

NumericEigenform specialize(const Eigenform& f, const mpq_class& x) {
  NumericEigenform out;
  out.lambda = x;
  for (const auto& [v, s] : f.values) out.values.emplace(v, s.eval(x));
  return out;
}

std::vector<std::pair<int, double>> growth_probe(const NumericEigenform& f) {
  std::map<int, double> best;
  for (const auto& [v, x] : f.values) {
    double lg = -std::numeric_limits<double>::infinity();
    if (x != 0) {
      long en = 0, ed = 0;
      double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
      double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
      lg = std::log2(std::fabs(mn)) + static_cast<double>(en) - std::log2(md) - static_cast<double>(ed);
    }
    auto it = best.find(v.n);
    if (it == best.end() || lg > it->second) best[v.n] = lg;
  }
  return {best.begin(), best.end()};
}

std::string eigenform_to_csv(const OperatorDesc& desc, const Eigenform& f) {
  std::ostringstream os;
  os << "vertex,value\n";
  for (const auto& [v, x] : f.values) os << '"' << vertex_label(desc, v) << "\"," << x.to_string() << "\n";
  return os.str();
}

std::map<Vertex, LambdaScalar> parse_seed_csv(const OperatorDesc& desc, const std::string& text) {
  std::map<std::string, Vertex> by_label;
  for (const Vertex& v : seed_domain(desc)) by_label.emplace(vertex_label(desc, v), v);
  std::map<Vertex, LambdaScalar> out;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (first && line.rfind("vertex,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    std::size_t comma = line.rfind(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "seed line without a value: " + line);
    std::string label = line.substr(0, comma);
    while (!label.empty() && label.front() == ' ') label.erase(label.begin());
    while (!label.empty() && label.back() == ' ') label.pop_back();
    if (label.size() >= 2 && label.front() == '"' && label.back() == '"') label = label.substr(1, label.size() - 2);
    auto it = by_label.find(label);
    if (it == by_label.end()) throw Error(ErrorKind::SeedDomainMismatch, "'" + label + "' is not a nucleus vertex");
    if (!out.emplace(it->second, parse_lambda(line.substr(comma + 1))).second)
      throw Error(ErrorKind::SeedDomainMismatch, "duplicate seed vertex " + label);
  }
  return out;
}

}  // namespace hecke
