#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke {

inline constexpr long long kDefaultBudget = 100000;
// HECKE_BUDGET from the environment when set and positive, else fallback.
long long budget_from_env(long long fallback = kDefaultBudget);

// p_n (g_0 + g_1 t + ... + g_{r-1} t^{r-1}), g_0 invertible.
struct LevelRElement {
  int n = 0;
  std::vector<FqMat2> g;

  int r() const { return static_cast<int>(g.size()); }
  Mat2 unit_part(const Field& f) const;  // sum g_i t^i
  Mat2 matrix(const Field& f) const;     // p_n * unit_part
  bool operator==(const LevelRElement& o) const { return n == o.n && g == o.g; }
  bool operator<(const LevelRElement& o) const;
};

// Truncation of an element of K_x modulo t^r.
LevelRElement truncate_cofactor(int n, const Mat2& k, int r);

// id + sum_{j=r}^{2(r-1)} t^j M_j over all M_j; BudgetExceeded past the budget.
std::vector<Mat2> klift_enum(const Field& f, int r, long long budget = kDefaultBudget);

// M in Z_x Gamma_x: some central z has z M in GL2(F_q[1/t]).
bool membership_central_gamma(const Mat2& M);

// Finite test: some k in klift has (p_n A) k (p_n B)^-1 in Z_x Gamma_x.
bool equivalent_at_level(const Field& f, const LevelRElement& A, const LevelRElement& B,
                         const std::vector<Mat2>& klift);

// Exact test used as the second route: A = zeta U B mod t^r with zeta a unit
// scalar and U in p_n^-1 Gamma_x p_n cap K_x, i.e. [[a, P],[0, b]], deg P <= n
// (all of GL2(F_q) for n = 0).
bool orbit_equivalent(const Field& f, const LevelRElement& A, const LevelRElement& B);
// Smallest element of the orbit of A; equal for equivalent elements.
LevelRElement orbit_canonical(const Field& f, const LevelRElement& A);

enum class ClassRoute { Oracle, Orbit };

// All p_n (g_0 + ... + g_{r-1} t^{r-1}) with g_0 in GL2(F_q), in code order.
std::vector<LevelRElement> fiber_candidates(const Field& f, int n, int r);

struct FiberClasses {
  std::vector<LevelRElement> reps;  // first member of each class, in enumeration order
  std::vector<std::size_t> class_of;  // per candidate
  std::size_t oracle_calls = 0;
};
// Partitions the fiber over c_n. The oracle route compares every pair inside
// each level-one fiber and throws OracleInconsistent if the relation is not
// transitive; its cost is bounded by pairs * |klift| <= budget.
FiberClasses enumerate_fiber_classes(const Field& f, int n, int r, ClassRoute route = ClassRoute::Oracle,
                                     long long budget = kDefaultBudget);

struct FiberReport {
  std::uint32_t q = 0;
  int r = 0;
  std::vector<std::size_t> counts;
  std::optional<int> stabilized_at;
  std::optional<std::size_t> tail_count;

  std::string to_json() const;
};
// r = 0 is the unramified degenerate case.
FiberReport fiber_report(const Field& f, int r, int n_max, ClassRoute route = ClassRoute::Oracle,
                         long long budget = kDefaultBudget);

// Closed form of the fiber size from the orbit count: q^(3(r-1)) over c_0 and
// (q+1) q^(3r-3-min(n,r-1)) over c_n, n >= 1.
std::size_t predicted_fiber_size(std::uint32_t q, int r, int n);

// Vertex model for K^(r): labels index the sorted canonical forms of each fiber.
// Representatives are p_n theta_w when the class contains one, so that left
// translation agrees with the level-one model at r = 1.
class LevelRModel : public LevelModel {
 public:
  LevelRModel(const Field& f, int r);
  std::vector<Vertex> vertices_at(int n) const override;
  Mat2 representative(const Vertex& v) const override;
  Vertex classify(const Mat2& M) const override;
  LevelRElement element(const Vertex& v) const;
  int r() const { return r_; }

 private:
  struct Fiber {
    std::vector<LevelRElement> forms;  // sorted canonical forms, n = 0
    std::vector<LevelRElement> reps;   // preferred member of each class, n = 0
  };
  const Fiber& classes(int n) const;
  const Field& f_;
  int r_;
  mutable std::map<int, Fiber> cache_;
};

Neighbors neighbors_general_r(const OperatorDesc& desc, const LevelRModel& model, const Vertex& v);

}  // namespace hecke
