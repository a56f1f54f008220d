#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "hecke/hecke.hpp"
#include "hecke/lambda.hpp"

namespace hecke {

// Vertices of a built graph carrying unknowns (those with complete neighbor
// lists) and the subset where the eigen equation is imposed (all out-neighbors
// carry unknowns).
struct EigenWindow {
  std::vector<std::size_t> unknowns;
  std::vector<std::size_t> interior;
};
EigenWindow eigen_window(const HeckeGraph& g);

// Smallest radius accepted by window_dimension: 3d, or 3 at x.
int min_window_radius(const OperatorDesc& desc);

// Nullity of the windowed system lambda f(v) = sum m(v,u) f(u), lambda generic.
std::size_t window_dimension(const HeckeGraph& g);
std::size_t window_dimension(const OperatorDesc& desc, int radius);

// Rank of a matrix over Z[lambda] by fraction-free elimination.
std::size_t bareiss_rank(std::vector<std::vector<ZPoly>> rows);

struct Eigenform {
  std::map<Vertex, LambdaScalar> values;
};
struct NumericEigenform {
  mpq_class lambda;
  std::map<Vertex, mpq_class> values;
};

// Vertices the seed must cover: the nucleus, or the base vertex at x.
std::vector<Vertex> seed_domain(const OperatorDesc& desc);

// Solves the interior equations one unknown at a time starting from the seed.
// Throws SeedDomainMismatch, Stuck or Inconsistent.
Eigenform extend_from_nucleus(const HeckeGraph& g, const std::map<Vertex, LambdaScalar>& seed);
Eigenform extend_from_nucleus(const OperatorDesc& desc, const std::map<Vertex, LambdaScalar>& seed, int radius);

// Interior vertices where the eigen equation fails; missing values count as failures.
std::vector<Vertex> check_eigen(const HeckeGraph& g, const Eigenform& f);
std::vector<Vertex> check_eigen(const HeckeGraph& g, const NumericEigenform& f);

// Substitutes lambda = x; throws ZeroInput at a pole.
NumericEigenform specialize(const Eigenform& f, const mpq_class& x);

// Per level n, log2 of the largest |f(v)| over vertices at that level (or a
// very negative number when all vanish). Heuristic only.
std::vector<std::pair<int, double>> growth_probe(const NumericEigenform& f);

// vertex label, value
std::string eigenform_to_csv(const OperatorDesc& desc, const Eigenform& f);
// Reads "label,value" lines over the seed domain; a header line is skipped.
std::map<Vertex, LambdaScalar> parse_seed_csv(const OperatorDesc& desc, const std::string& text);

}  // namespace hecke
