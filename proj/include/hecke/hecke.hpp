#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/reduction.hpp"

namespace hecke {

enum class Level { Unramified, RamifiedL1, GeneralR };
// Exponent of t in the upper-right entry of the at-x coset representatives at
// level r: r (Derived) or r - 1 (Printed). Only the former is a coset system.
enum class CosetExponent { Derived, Printed };

struct OperatorDesc {
  const Field* field = nullptr;
  Level level = Level::Unramified;
  int r = 1;
  bool at_x = false;
  int degree_y = 1;
  std::optional<Poly> y;
  CosetExponent exponent = CosetExponent::Derived;

  static OperatorDesc unramified(const Field& f, int d);
  static OperatorDesc ramified(const Field& f, int d);
  static OperatorDesc ramified_at_x(const Field& f);
  static OperatorDesc level_r(const Field& f, int r, bool at_x, int d);
  // Uses deg(y) and validates y as a place other than x.
  static OperatorDesc with_place(const Field& f, Level level, int r, const Poly& y);

  // Throws UnsupportedDescriptor for inconsistent combinations.
  void validate() const;
  // Total multiplicity of every vertex: q^d + 1 away from x, q at x.
  long long out_degree() const;
  // Largest level shift of a single step.
  int step() const { return at_x ? 1 : degree_y; }
  std::string level_name() const;
};

enum class Side { Left, Right };

// Neighbors of the vertex with representative R are the classes of C*R (Left)
// or R*C (Right) for C in mats.
struct CosetReps {
  Side side = Side::Left;
  std::vector<Mat2> mats;
};
CosetReps coset_reps(const OperatorDesc& desc);

// Vertex universe of one level: enumeration per level index, representatives
// and classification of arbitrary matrices.
class LevelModel {
 public:
  virtual ~LevelModel() = default;
  virtual std::vector<Vertex> vertices_at(int n) const = 0;
  virtual Mat2 representative(const Vertex& v) const = 0;
  virtual Vertex classify(const Mat2& M) const = 0;
};

// Model for the descriptor's level (K, K' or K^(r)).
std::unique_ptr<LevelModel> make_level_model(const OperatorDesc& desc);

std::string vertex_label(const OperatorDesc& desc, const Vertex& v);
// Fiber tag used in serialized graphs: "base", "[1:a]", "[0:1]" or "#i".
std::string vertex_tag(const OperatorDesc& desc, const Vertex& v);
Vertex vertex_from_tag(const OperatorDesc& desc, int n, const std::string& tag);

using Neighbors = std::vector<std::pair<Vertex, long long>>;
Neighbors neighbors(const OperatorDesc& desc, const LevelModel& model, const Vertex& v);
Neighbors neighbors(const OperatorDesc& desc, const Vertex& v);

struct Edge {
  std::size_t src = 0, dst = 0;
  long long mult = 0;
  bool operator==(const Edge& o) const { return src == o.src && dst == o.dst && mult == o.mult; }
};

// Edges out of every vertex of level <= radius. Vertices beyond the radius
// are reached as targets only and form the frontier.
struct HeckeGraph {
  OperatorDesc desc;
  int radius = 0;
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted by (src, dst)
  std::vector<std::size_t> frontier;

  std::optional<std::size_t> index_of(const Vertex& v) const;
  bool is_frontier(std::size_t i) const { return vertices[i].n > radius; }
  // Out-edges of vertex i as a subrange of edges.
  std::pair<std::size_t, std::size_t> out_range(std::size_t i) const;
  long long mult(const Vertex& u, const Vertex& v) const;
  Neighbors out(const Vertex& u) const;
  void finalize();  // sorts and indexes after edits

  bool operator==(const HeckeGraph& o) const;

 private:
  std::vector<std::size_t> offsets_;
};

HeckeGraph build_graph(const OperatorDesc& desc, int radius);
HeckeGraph build_graph(const OperatorDesc& desc, int radius, const LevelModel& model);

// Vertices that freely determine an eigenform: c_0..c_{d-1} unramified, the
// base with all (n,w), 1 <= n <= d, except (d,[1:0]) away from x.
std::vector<Vertex> nucleus(const OperatorDesc& desc);

// Membership in K^(r) = ker(GL2(F_q[[t]]) -> GL2(F_q[t]/t^r)).
bool in_principal_congruence(const Mat2& M, int r);

// Brute-force check of the at-x coset system at level r (r = 1 is K').
struct CosetAudit {
  std::size_t count = 0;
  bool pairwise_disjoint = false;
  bool inside_double_coset = false;
  bool ok(std::size_t expected) const { return count == expected && pairwise_disjoint && inside_double_coset; }
};
CosetAudit audit_x_cosets(const Field& f, int r, CosetExponent exponent);

}  // namespace hecke
