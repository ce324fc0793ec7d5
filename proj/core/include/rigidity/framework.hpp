#pragma once

#include <vector>

#include "rigidity/embedding.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity {

// A graph together with an embedding of its vertices in R^d.
struct Framework {
    Graph graph;
    Embedding points;

    Framework(Graph g, Embedding p);
    int dimension() const { return points.dimension(); }
};

// Unit vector from p(v) towards p(u), or the zero vector when the two
// points coincide within threshold 1e-14 * (1 + |p(u)| + |p(v)|).
std::vector<double> direction(const Embedding& p, int u, int v);
bool coincident(const Embedding& p, int u, int v);

// d|V| x |E|, rows vertex-major then axis, columns in edge order. Column of
// edge {u,v} carries sqrt(f(v)) * dir(u->v) in the u block and
// sqrt(f(u)) * dir(v->u) in the v block.
Matrix rigidity_matrix(const Framework& fw, const WeightFn& f);
Matrix rigidity_matrix(const Framework& fw);

Matrix stiffness(const Framework& fw, const WeightFn& f);  // R R^T
Matrix stiffness(const Framework& fw);

// d x deg(v); one column sqrt(f(u)) * dir(v->u) per neighbor u, ascending.
Matrix local_rigidity_matrix(const Framework& fw, int v, const WeightFn& f);
Matrix local_rigidity_matrix(const Framework& fw, int v);

Matrix local_stiffness(const Framework& fw, int v, const WeightFn& f);  // R^v (R^v)^T
Matrix local_stiffness(const Framework& fw, int v);

Matrix lower_stiffness(const Framework& fw, const WeightFn& f);  // R^T R
Matrix lower_stiffness(const Framework& fw);

// Entrywise formula for R^T R: diagonal f(u) + f(v) for an edge with
// distinct endpoints (0 otherwise); sqrt(f(v) f(w)) * cos of the angle at
// the shared vertex for edges {u,v}, {u,w}; 0 for disjoint edges.
Matrix lower_stiffness_closed_form(const Framework& fw, const WeightFn& f);

// Cosine of the angle between the two edge directions at their shared
// vertex; 0 whenever either direction degenerates. Requires |e1 ∩ e2| = 1.
double edge_angle_cos(const Embedding& p, Edge e1, Edge e2);

// L_f * phi without forming the matrix; phi has length d|V|.
std::vector<double> apply_stiffness(const Framework& fw, const WeightFn& f, const std::vector<double>& phi);

// Checks the diagonal factorizations R_f = D_hat R D_tilde and, per vertex,
// R^v_f = R^v D^v entrywise within tol.
bool weight_factorization_check(const Framework& fw, const WeightFn& f, double tol = 1e-10);

}  // namespace rigidity
