#pragma once

// Hypercube path-system primitives fulfilled by verified search, the two
// composite covering lemmas built from them, and the constructive
// Hamiltonian paths on the stitched wheel/whirl models.
//
// Every primitive searches for the required path system and re-validates
// it with the independent cover checker; a search that comes back empty
// would refute a published statement and is raised loudly as
// PrimitiveFailure.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobase/hamsearch.hpp"
#include "cobase/mask.hpp"
#include "cobase/wheels.hpp"

namespace cobase {

// Vertex ids are the masks themselves.
SearchGraph hypercube_graph(int n);

// The all-zero vertex is green; colors alternate with weight parity.
inline bool cube_green(Mask v) { return popcount(v) % 2 == 0; }

class PrimitiveFailure : public std::runtime_error {
  public:
    PrimitiveFailure(const std::string& what, std::uint64_t nodes, bool exhausted)
        : std::runtime_error(what + (exhausted ? " (search space exhausted after "
                                               : " (node budget hit after ") +
                             std::to_string(nodes) + " expansions)"),
          nodes_(nodes),
          exhausted_(exhausted) {}
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

  private:
    std::uint64_t nodes_;
    bool exhausted_;
};

using CubeEdge = std::pair<Mask, Mask>;

// (a) Hamiltonian r-g path through a prescribed edge.
PathCover primitive_a(int n, Mask r, Mask g, CubeEdge e, const SearchOptions& opt = {});
// (b) Hamiltonian r-g path avoiding one vertex of each color.
PathCover primitive_b(int n, Mask rstar, Mask gstar, Mask r, Mask g,
                      const SearchOptions& opt = {});
// (c) 2-path cover of the cube minus one vertex: r1-g1 and g2-g3.
PathCover primitive_c(int n, Mask rstar, Mask r1, Mask g1, Mask g2, Mask g3,
                      const SearchOptions& opt = {});
// (d) Hamiltonian r1-r2 path avoiding one opposite-color vertex, through
// an optional prescribed edge.
PathCover primitive_d(int n, Mask gstar, Mask r1, Mask r2, const SearchOptions& opt = {});
PathCover primitive_d(int n, Mask gstar, Mask r1, Mask r2, CubeEdge e,
                      const SearchOptions& opt = {});
// (e) Hamiltonian g1-g2 path avoiding one same-color and two
// opposite-color vertices.
PathCover primitive_e(int n, Mask gstar, Mask r1star, Mask r2star, Mask g1, Mask g2,
                      const SearchOptions& opt = {});
// (f) 2-path cover of the cube minus two same-color vertices, with both
// paths joining the opposite color.
PathCover primitive_f(int n, Mask r1star, Mask r2star, Mask g1, Mask g2, Mask g3, Mask g4,
                      const SearchOptions& opt = {});
// (g) 2-path cover of the cube minus one vertex of each color, with two
// mixed paths.
PathCover primitive_g(int n, Mask rstar, Mask gstar, Mask r1, Mask g1, Mask r2, Mask g2,
                      const SearchOptions& opt = {});
// (h) 3-path cover of the cube minus two same-color vertices (n >= 6).
PathCover primitive_h(int n, Mask r1star, Mask r2star, Mask g1, Mask g2, Mask g3, Mask g4,
                      Mask g5, Mask r1, const SearchOptions& opt = {});

struct LeanPathResult {
    PathCover cover;
    CubeEdge lean_edge;  // both endpoints lean and proper
    std::uint64_t nodes = 0;
};

// Hamiltonian r-g path of the cube minus {rstar, gstar} through a lean
// edge, by the four-way split on a coordinate separating r from rstar.
LeanPathResult lemma_36_plus(int n, Mask rstar, Mask gstar, Mask r, Mask g,
                             const SearchOptions& opt = {});

// 2-path cover of the cube minus the all-zero/all-one vertices: one path
// u1-v1 through the edge w1-z1 (all in the first two levels), the other
// u2-v2 across the two top levels.  Requires n >= 7.
PathCover lemma_43_plus(int n, Mask u1, Mask v1, Mask w1, Mask u2, Mask v2, Mask z1,
                        const SearchOptions& opt = {});

struct HamCertificate {
    PathCover cover;  // single path over stitched-model vertex indices
    std::string case_label;
    std::vector<std::string> log;
    std::uint64_t nodes = 0;
};

// Verified Hamiltonian u-v paths on the stitched models.  Small instances
// (wheel n <= 6, whirl n = 3) fall back to direct search; all larger ones
// are assembled case by case from the primitives above.
HamCertificate ham_path_wheel(int n, ModelVertex u, ModelVertex v,
                              const SearchOptions& opt = {});
HamCertificate ham_path_whirl(int n, ModelVertex u, ModelVertex v,
                              const SearchOptions& opt = {});

}  // namespace cobase
