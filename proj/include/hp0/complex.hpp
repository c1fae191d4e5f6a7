#ifndef HP0_COMPLEX_HPP
#define HP0_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "hp0/gale_frame.hpp"

namespace hp0 {

/// Finite simplicial complex on vertices {0,..,n-1}, stored as the full face
/// list plus the forbidden minimal subsets used to generate it. The void
/// complex (no faces at all, not even the empty one) is allowed.
class SimplicialComplex {
 public:
  /// Faces are the subsets containing none of the given forbidden sets.
  static SimplicialComplex from_forbidden(int n_vertices,
                                          const std::vector<std::uint32_t>& forbidden);
  /// Faces enumerated by an explicit predicate (used for independence complexes).
  template <class Pred>
  static SimplicialComplex from_predicate(int n_vertices, Pred&& is_face_mask) {
    SimplicialComplex cx;
    cx.n_ = n_vertices;
    for (std::uint32_t m = 0; m < (1u << n_vertices); ++m)
      if (is_face_mask(m)) cx.faces_.push_back(m);
    return cx;
  }

  int n_vertices() const { return n_; }
  bool is_void() const { return faces_.empty(); }
  bool is_face(std::uint32_t mask) const;
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  std::vector<std::uint32_t> facets() const;
  int dimension() const;  // -1 for {empty face} only; INT_MIN avoided: void gives -2

  /// Number of faces of each size, (f_{-1}, f_0, ..., f_{dim}).
  std::vector<long long> face_counts() const;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> faces_;  // sorted masks
};

struct FHVectors {
  std::vector<long long> f;  // (f_{-1}, f_0, ..., f_{d-1}); empty for the void complex
  std::vector<long long> h;  // (h_0, ..., h_d); empty for the void complex
};

/// Circuit supports with their largest element removed, deduplicated and
/// sorted by (size, lex). Contains the empty set exactly when a loop exists.
std::vector<std::vector<int>> broken_circuits(const GaleFrame& frame);
std::vector<std::uint32_t> broken_circuit_masks(const std::vector<SignedCircuit>& circuits);

/// The complex of subsets containing no broken circuit; void iff a loop exists.
SimplicialComplex bc_faces(const GaleFrame& frame);
SimplicialComplex bc_complex_of(const LocalFrame& problem);

/// f- and h-vectors with transform parameter d (>= dim + 1).
FHVectors fh_vectors(const SimplicialComplex& cx, int d);

/// Graded dimensions of the face-supported monomial quotient: dims[deg] counts
/// degree-deg monomials whose support is a face. Cross-checked internally
/// against the h-vector expansion h(t)/(1-t)^rank; a mismatch throws.
std::vector<long long> sr_quotient_dims(const GaleFrame& frame, int d_max);
std::vector<long long> sr_quotient_dims_of(const LocalFrame& problem, int d_max,
                                           const SimplicialComplex& cx);

/// Degreewise coefficients of h(t)/(1-t)^k up to d_max.
std::vector<long long> series_expansion(const std::vector<long long>& h_poly, int k, int d_max);

struct IhBettiReport {
  std::vector<long long> ih_betti;      // dim IH^{2i} of the dual variety = h_i
  std::vector<long long> equivariant;   // equivariant dims at degrees 0,2,4,...
  int k = 0;
};
IhBettiReport ih_betti_report(const GaleFrame& frame, int d_max);

struct DualTopHReport {
  long long sum_h = 0;       // sum of h-numbers of the broken circuit complex
  long long dual_top_h = 0;  // top h-number of the dual independence complex
  bool ok = false;
};
DualTopHReport dual_top_h_check(const GaleFrame& frame);

}  // namespace hp0

#endif
