#pragma once

#include <optional>
#include <vector>

#include "bicirc/matroid.hpp"
#include "bicirc/multigraph.hpp"

namespace bicirc {

/// S is independent in B(G) iff it has no free edge and every component of
/// the subgraph it spans contains at most one cycle (loops count as cycles).
bool bicircular_independent(const Multigraph& g, EdgeSet s);

/// Rank of S in B(G): touched vertices minus acyclic components.
int bicircular_rank(const Multigraph& g, EdgeSet s);

/// Combinatorial construction of B(G).  |E| <= 20.
Matroid bicircular_matroid(const Multigraph& g);

/// Integer matrix whose column matroid is B(G): a link (i,j) contributes -1
/// in row i and a distinct prime in row j (primes 2,3,5,... assigned in
/// ground-set order), a loop at v contributes an elementary column at v, a
/// free edge a zero column.
std::vector<std::vector<long long>> bicircular_matrix(const Multigraph& g);

/// Independent second oracle for B(G): the column matroid of
/// bicircular_matrix(G) under exact fraction-free rank computation.
/// |E| <= 16.
Matroid matrix_matroid_of(const Multigraph& g);

/// Graph-level contraction matching matroid contraction of B(G): free edge
/// deletes, link contracts, loop at v removes v (other loops at v become
/// free edges, links at v become loops at their other endpoint).
Multigraph bicircular_contract(const Multigraph& g, int label);

/// 3-connectivity of B(G) by the graph criterion: G 2-connected, no
/// degree-2 vertices, no two loops at one vertex.  Throws unless G is
/// connected, free of free edges, and has >= 3 vertices.
bool wagner_3connected(const Multigraph& g);

/// All multigraphs G, up to isomorphism and without isolated vertices, with
/// B(G) isomorphic to M.  M must be connected with <= 10 elements.
std::vector<Multigraph> enumerate_representations(const Matroid& m);

/// Witness graph with B(G) ≅ M, or nullopt.  Unlike the enumeration this
/// accepts disconnected matroids (a representation exists iff each connected
/// component has one; the witness is the disjoint union).  |E| <= 10.
/// Results are memoized process-wide.
std::optional<Multigraph> bicircular_witness(const Matroid& m);

bool is_bicircular(const Matroid& m);
bool is_cobicircular(const Matroid& m);

/// M is not cobicircular but every single-element deletion and contraction
/// is.  |E| <= 10.
bool is_minimally_not_cobicircular(const Matroid& m);

}  // namespace bicirc
