#pragma once

#include "hecke/mat2.hpp"
#include "hecke/places.hpp"

namespace hecke {

// Vertex of a graph: level index n and a fiber label. The label is -1 for
// unramified vertices and for the base vertex c'_0, a ProjPoint index for
// Iwahori-level vertices, and a class index for deeper levels.
struct Vertex {
  int n = 0;
  int label = -1;

  static Vertex base() { return {0, -1}; }
  bool operator==(const Vertex& o) const { return n == o.n && label == o.label; }
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  bool operator<(const Vertex& o) const { return n != o.n ? n < o.n : label < o.label; }
};

// M = gamma * z * p_n * k with gamma in Gamma_x, z central, k in K_x.
struct Decomposition {
  Mat2 gamma;
  RatF z;
  int n = 0;
  Mat2 k;

  Mat2 product() const;
};

// M = gamma * z * [[t^m, h],[0,1]] * k, h supported in degrees [1, m-1].
struct TriangularForm {
  int m = 0;
  RatF h;
  Mat2 gamma;
  RatF z;
  Mat2 k;
};

TriangularForm iwasawa_triangularize(const Mat2& M);
// Runs the descent on the exponent m until h vanishes, then normalizes the
// diagonal to p_n. Throws BadSupport if h is not supported in [1, m-1].
Decomposition reduce_upper(TriangularForm form);

Decomposition decompose(const Mat2& M);
// Index n with M in Gamma_x Z_x p_n K_x.
int reduce_unramified(const Mat2& M);
// Vertex of Gamma_x \ G_x / Z_x K'_x: base, or (n, w) with w read off the
// bottom row of the cofactor modulo t.
Vertex reduce_ramified1(const Mat2& M);
Vertex vertex_from_decomposition(const Field& f, const Decomposition& dec);

// theta_w: [[1,0],[a,1]] for [1:a], the swap for [0:1].
Mat2 theta(const Field& f, const ProjPoint& w);
// Representative p_n theta_w of a level-one vertex, identity for the base.
Mat2 ramified_representative(const Field& f, const Vertex& v);

}  // namespace hecke
