#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicirc/multigraph.hpp"

namespace bicirc {

/// Subset of a ground set of at most 24 elements, one bit per element.
using EdgeSet = uint32_t;

inline int popcount(EdgeSet s) { return __builtin_popcount(s); }
inline EdgeSet full_set(int n) { return n == 0 ? 0 : (EdgeSet{1} << n) - 1; }

/// Matroid stored by its explicit basis family.  Ground size <= 24; the
/// basis-exchange axiom is verified exhaustively up to 12 elements and by
/// sampling above that.
struct Matroid {
  int n = 0;
  std::vector<int> labels;
  int rank = 0;
  std::vector<EdgeSet> bases;  // sorted ascending, unique

  bool has_basis(EdgeSet b) const;
  bool is_loop(int e) const;    // element in no basis
  bool is_coloop(int e) const;  // element in every basis

  bool operator==(const Matroid&) const = default;
};

Matroid from_bases(std::vector<int> labels, std::vector<EdgeSet> bases);
Matroid uniform(int r, int n);

int rank_of(const Matroid& m, EdgeSet s);
Matroid dual(const Matroid& m);
Matroid delete_elements(const Matroid& m, EdgeSet s);
Matroid contract_elements(const Matroid& m, EdgeSet s);

/// Minimal dependent sets; ground size <= 16.
std::vector<EdgeSet> circuits(const Matroid& m);
std::vector<EdgeSet> cocircuits(const Matroid& m);

/// Sizes of circuits, ascending (with multiplicity).
std::vector<int> circuit_size_spectrum(const Matroid& m);

struct SeparationProfile {
  std::optional<EdgeSet> violating_1separation;
  std::optional<EdgeSet> violating_2separation;
};

bool is_3connected(const Matroid& m, SeparationProfile* profile = nullptr);
bool is_matroid_connected(const Matroid& m);

/// Ground sets of the connected components.
std::vector<EdgeSet> connected_components(const Matroid& m);

/// Element bijection search with invariant pruning; intended for ground
/// sets up to about 12 elements, tolerated above for internal callers.
bool matroid_isomorphic(const Matroid& a, const Matroid& b,
                        std::vector<int>* bijection = nullptr);

/// Cheap isomorphism-invariant fingerprint (equal for isomorphic matroids;
/// collisions possible).  Used as a memo key for minor searches.
std::string invariant_key(const Matroid& m);

/// Series (coparallel) extension at element e: dual of a parallel extension
/// of the dual.  The new element takes the smallest unused label.
Matroid coparallel_extend(const Matroid& m, int e);
Matroid parallel_extend(const Matroid& m, int e);

Matroid graphic_matroid(const Multigraph& g);

/// The rank-3 whirl on 6 elements.
Matroid whirl3();

// -- text format (.mtd) ----------------------------------------------------

std::string to_mtd(const Matroid& m);
Matroid parse_mtd(const std::string& text);
Matroid load_mtd(const std::string& path);

}  // namespace bicirc
