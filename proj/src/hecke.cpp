#include "hecke/hecke.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hecke/error.hpp"
#include "hecke/levels.hpp"

namespace hecke {

OperatorDesc OperatorDesc::unramified(const Field& f, int d) {
  OperatorDesc o;
  o.field = &f;
  o.level = Level::Unramified;
  o.degree_y = d;
  return o;
}

OperatorDesc OperatorDesc::ramified(const Field& f, int d) {
  OperatorDesc o = unramified(f, d);
  o.level = Level::RamifiedL1;
  return o;
}

OperatorDesc OperatorDesc::ramified_at_x(const Field& f) {
  OperatorDesc o = ramified(f, 1);
  o.at_x = true;
  return o;
}

OperatorDesc OperatorDesc::level_r(const Field& f, int r, bool at_x, int d) {
  OperatorDesc o = unramified(f, at_x ? 1 : d);
  o.level = Level::GeneralR;
  o.r = r;
  o.at_x = at_x;
  return o;
}

OperatorDesc OperatorDesc::with_place(const Field& f, Level level, int r, const Poly& y) {
  Place pl = Place::finite(y);
  OperatorDesc o = unramified(f, static_cast<int>(pl.degree()));
  o.level = level;
  o.r = r;
  o.y = y;
  return o;
}

void OperatorDesc::validate() const {
  auto bad = [](const std::string& m) { throw Error(ErrorKind::UnsupportedDescriptor, m); };
  if (field == nullptr) bad("descriptor has no field");
  if (degree_y < 1) bad("degree of y must be positive");
  if (level == Level::Unramified && at_x) bad("the unramified operator at x is the degree-one operator");
  if (at_x && degree_y != 1) bad("x has degree one");
  if (level == Level::GeneralR && r < 1) bad("level r must be at least 1");
  if (y && (*y->degree() != static_cast<unsigned>(degree_y) || at_x)) bad("place polynomial does not match descriptor");
  long long qd = 1;
  for (int i = 0; i < degree_y; ++i) {
    qd *= field->q();
    if (qd > (1LL << 24)) bad("q^d exceeds the supported neighbor count");
  }
}

long long OperatorDesc::out_degree() const {
  if (at_x) return field->q();
  long long qd = 1;
  for (int i = 0; i < degree_y; ++i) qd *= field->q();
  return qd + 1;
}

std::string OperatorDesc::level_name() const {
  switch (level) {
    case Level::Unramified: return "K";
    case Level::RamifiedL1: return "K1";
    case Level::GeneralR: return "Kr";
  }
  return "";
}

CosetReps coset_reps(const OperatorDesc& desc) {
  desc.validate();
  const Field& f = *desc.field;
  CosetReps out;
  if (!desc.at_x) {
    out.side = Side::Left;
    const int d = desc.degree_y;
    const std::uint64_t count = count_monic(f, static_cast<unsigned>(d));
    const RatF td = RatF::monomial(f, 1, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly b = monic_by_index(f, static_cast<unsigned>(d), idx) - Poly::t_power(f, static_cast<unsigned>(d));
      out.mats.push_back({td, RatF(b), RatF(f), RatF::one(f)});
    }
    out.mats.push_back(Mat2::diag(RatF::one(f), td));
    return out;
  }
  out.side = Side::Right;
  int e = 1;
  if (desc.level == Level::GeneralR) e = desc.exponent == CosetExponent::Derived ? desc.r : desc.r - 1;
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    out.mats.push_back({RatF::monomial(f, 1, 1), RatF::monomial(f, a, e), RatF(f), RatF::one(f)});
  }
  return out;
}

namespace {

class UnramifiedModel : public LevelModel {
 public:
  explicit UnramifiedModel(const Field& f) : f_(f) {}
  std::vector<Vertex> vertices_at(int n) const override { return {Vertex{n, -1}}; }
  Mat2 representative(const Vertex& v) const override { return Mat2::p_power(f_, v.n); }
  Vertex classify(const Mat2& M) const override { return {reduce_unramified(M), -1}; }

 private:
  const Field& f_;
};

class Ramified1Model : public LevelModel {
 public:
  explicit Ramified1Model(const Field& f) : f_(f) {}
  std::vector<Vertex> vertices_at(int n) const override {
    if (n == 0) return {Vertex::base()};
    std::vector<Vertex> out;
    for (std::uint32_t i = 0; i <= f_.q(); ++i) out.push_back({n, static_cast<int>(i)});
    return out;
  }
  Mat2 representative(const Vertex& v) const override { return ramified_representative(f_, v); }
  Vertex classify(const Mat2& M) const override { return reduce_ramified1(M); }

 private:
  const Field& f_;
};

}  // namespace

std::unique_ptr<LevelModel> make_level_model(const OperatorDesc& desc) {
  desc.validate();
  switch (desc.level) {
    case Level::Unramified: return std::make_unique<UnramifiedModel>(*desc.field);
    case Level::RamifiedL1: return std::make_unique<Ramified1Model>(*desc.field);
    case Level::GeneralR: return std::make_unique<LevelRModel>(*desc.field, desc.r);
  }
  throw Error(ErrorKind::UnsupportedDescriptor, "unknown level");
}

std::string vertex_label(const OperatorDesc& desc, const Vertex& v) {
  const std::string n = std::to_string(v.n);
  switch (desc.level) {
    case Level::Unramified: return "c_{" + n + "}";
    case Level::RamifiedL1:
      if (v.label < 0) return "c'_{" + n + "}";
      return "c'_{" + n + "," + ProjPoint::from_index(*desc.field, static_cast<std::uint32_t>(v.label)).to_string(*desc.field) + "}";
    case Level::GeneralR: return "c'_{" + n + ",#" + std::to_string(v.label) + "}";
  }
  return "";
}

std::string vertex_tag(const OperatorDesc& desc, const Vertex& v) {
  switch (desc.level) {
    case Level::Unramified: return "base";
    case Level::RamifiedL1:
      if (v.label < 0) return "base";
      return ProjPoint::from_index(*desc.field, static_cast<std::uint32_t>(v.label)).to_string(*desc.field);
    case Level::GeneralR: return "#" + std::to_string(v.label);
  }
  return "";
}

Vertex vertex_from_tag(const OperatorDesc& desc, int n, const std::string& tag) {
  auto bad = [&]() -> Vertex { throw Error(ErrorKind::Parse, "bad vertex tag '" + tag + "'"); };
  switch (desc.level) {
    case Level::Unramified:
      if (tag != "base") return bad();
      return {n, -1};
    case Level::RamifiedL1:
      if (tag == "base") return n == 0 ? Vertex::base() : bad();
      for (std::uint32_t i = 0; i <= desc.field->q(); ++i)
        if (ProjPoint::from_index(*desc.field, i).to_string(*desc.field) == tag) return {n, static_cast<int>(i)};
      return bad();
    case Level::GeneralR:
      if (tag.size() < 2 || tag[0] != '#') return bad();
      return {n, std::stoi(tag.substr(1))};
  }
  return bad();
}

Neighbors neighbors(const OperatorDesc& desc, const LevelModel& model, const Vertex& v) {
  const CosetReps reps = coset_reps(desc);
  const Mat2 R = model.representative(v);
  std::map<Vertex, long long> acc;
  for (const Mat2& C : reps.mats) {
    Mat2 M = reps.side == Side::Left ? C * R : R * C;
    ++acc[model.classify(M)];
  }
  return Neighbors(acc.begin(), acc.end());
}

Neighbors neighbors(const OperatorDesc& desc, const Vertex& v) {
  auto model = make_level_model(desc);
  return neighbors(desc, *model, v);
}

std::optional<std::size_t> HeckeGraph::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::pair<std::size_t, std::size_t> HeckeGraph::out_range(std::size_t i) const { return {offsets_[i], offsets_[i + 1]}; }

long long HeckeGraph::mult(const Vertex& u, const Vertex& v) const {
  auto iu = index_of(u), iv = index_of(v);
  if (!iu || !iv) return 0;
  auto [lo, hi] = out_range(*iu);
  for (std::size_t e = lo; e < hi; ++e)
    if (edges[e].dst == *iv) return edges[e].mult;
  return 0;
}

Neighbors HeckeGraph::out(const Vertex& u) const {
  Neighbors out;
  auto iu = index_of(u);
  if (!iu) return out;
  auto [lo, hi] = out_range(*iu);
  for (std::size_t e = lo; e < hi; ++e) out.emplace_back(vertices[edges[e].dst], edges[e].mult);
  return out;
}

void HeckeGraph::finalize() {
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.src != b.src ? a.src < b.src : a.dst < b.dst; });
  offsets_.assign(vertices.size() + 1, 0);
  for (const Edge& e : edges) ++offsets_[e.src + 1];
  for (std::size_t i = 0; i < vertices.size(); ++i) offsets_[i + 1] += offsets_[i];
  frontier.clear();
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (is_frontier(i)) frontier.push_back(i);
}

bool HeckeGraph::operator==(const HeckeGraph& o) const {
  return desc.field == o.desc.field && desc.level == o.desc.level && desc.r == o.desc.r && desc.at_x == o.desc.at_x &&
         desc.degree_y == o.desc.degree_y && radius == o.radius && vertices == o.vertices && edges == o.edges &&
         frontier == o.frontier;
}

HeckeGraph build_graph(const OperatorDesc& desc, int radius, const LevelModel& model) {
  desc.validate();
  if (radius < 0) throw Error(ErrorKind::RadiusTooSmall, "radius must be nonnegative");
  std::vector<std::pair<Vertex, Neighbors>> rows;
  std::set<Vertex> all;
  for (int n = 0; n <= radius; ++n) {
    for (const Vertex& v : model.vertices_at(n)) {
      rows.emplace_back(v, neighbors(desc, model, v));
      all.insert(v);
      for (const auto& [u, m] : rows.back().second) all.insert(u);
    }
  }
  HeckeGraph g;
  g.desc = desc;
  g.radius = radius;
  g.vertices.assign(all.begin(), all.end());
  for (const auto& [v, nb] : rows) {
    std::size_t src = *g.index_of(v);
    for (const auto& [u, m] : nb) g.edges.push_back({src, *g.index_of(u), m});
  }
  g.finalize();
  return g;
}

HeckeGraph build_graph(const OperatorDesc& desc, int radius) {
  auto model = make_level_model(desc);
  return build_graph(desc, radius, *model);
}

std::vector<Vertex> nucleus(const OperatorDesc& desc) {
  desc.validate();
  std::vector<Vertex> out;
  const int d = desc.degree_y;
  if (desc.level == Level::Unramified) {
    for (int n = 0; n < d; ++n) out.push_back({n, -1});
    return out;
  }
  if (desc.level == Level::RamifiedL1 && !desc.at_x) {
    out.push_back(Vertex::base());
    for (int n = 1; n <= d; ++n)
      for (std::uint32_t i = 0; i <= desc.field->q(); ++i)
        if (!(n == d && i == 0)) out.push_back({n, static_cast<int>(i)});
    return out;
  }
  throw Error(ErrorKind::UnsupportedDescriptor, "nucleus is defined for the unramified and away-from-x Iwahori operators");
}

bool in_principal_congruence(const Mat2& M, int r) {
  const Field& f = M.field();
  const RatF one = RatF::one(f);
  return valuation_at_least(M.a - one, r) && valuation_at_least(M.b, r) && valuation_at_least(M.c, r) &&
         valuation_at_least(M.d - one, r);
}

CosetAudit audit_x_cosets(const Field& f, int r, CosetExponent exponent) {
  OperatorDesc desc = r == 1 ? OperatorDesc::ramified_at_x(f) : OperatorDesc::level_r(f, r, true, 1);
  desc.exponent = exponent;
  const CosetReps reps = coset_reps(desc);
  CosetAudit out;
  out.count = reps.mats.size();
  out.pairwise_disjoint = true;
  for (std::size_t i = 0; i < reps.mats.size(); ++i)
    for (std::size_t j = i + 1; j < reps.mats.size(); ++j)
      if (in_principal_congruence(reps.mats[i].inverse() * reps.mats[j], r)) out.pairwise_disjoint = false;

  const Mat2 h_inv = Mat2::diag(RatF::monomial(f, 1, -1), RatF::one(f));
  const RatF tr = RatF::monomial(f, 1, r);
  const std::uint32_t q = f.q();
  out.inside_double_coset = true;
  for (const Mat2& g : reps.mats) {
    bool found = false;
    for (std::uint64_t code = 0; code < std::uint64_t(q) * q * q * q && !found; ++code) {
      std::uint64_t c = code;
      std::uint32_t e[4];
      for (auto& x : e) {
        x = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
      Mat2 k1 = {RatF::one(f) + tr.scaled(e[0]), tr.scaled(e[1]), tr.scaled(e[2]), RatF::one(f) + tr.scaled(e[3])};
      found = in_principal_congruence(h_inv * k1.inverse() * g, r);
    }
    if (!found) out.inside_double_coset = false;
  }
  return out;
}

}  // namespace hecke
