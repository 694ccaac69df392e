#pragma once

// Brute-force reference implementations. They share no code path with the
// fast algorithms they check and are only meant for small inputs.

#include "prpd/graph.hpp"
#include "prpd/persistence.hpp"

namespace prpd::oracle {

// 0-dimensional persistence straight from the sublevel complexes: for each
// prefix of the vertex order, the induced subgraph's components are
// recomputed from scratch, and whenever components of the previous step fuse
// the one with the earliest minimum survives while the others die at the
// current value. Quadratic-or-worse; keep inputs small (~15 vertices).
PersistenceDiagram pd0(const Graph& g, const ScalarField& field);

// Bottleneck distance by enumerating every bijection of the augmented
// instance. Throws DomainError if |X| + |Y| > 6.
double bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y);

}  // namespace prpd::oracle
