#ifndef HP0_PRESENTATION_HPP
#define HP0_PRESENTATION_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "hp0/complex.hpp"
#include "hp0/echelon.hpp"
#include "hp0/gale_frame.hpp"
#include "hp0/monomial.hpp"
#include "hp0/poly.hpp"

namespace hp0 {

/// Per-degree echelon spans of the relation module: the span of all
/// derivations d_alpha e^beta with alpha a circuit and Supp(alpha) inside
/// Supp(beta). Built once, then shared by every downstream computation.
class Presentation {
 public:
  Presentation(LocalFrame problem, int d_max, int threads = 0);

  /// Monomial variant: the span of the degree-d monomials whose support is
  /// not a face of the given complex (the face-ring quotient in the same
  /// echelon shape, so all downstream computations apply unchanged).
  static Presentation stanley_reisner(LocalFrame problem, const SimplicialComplex& cx,
                                      int d_max, int threads = 0);

  const LocalFrame& problem() const { return problem_; }
  int d_max() const { return d_max_; }
  int n_vars() const { return problem_.n_local; }

  EchelonSpan& span(int degree) { return *spans_[degree]; }
  const std::vector<std::uint32_t>& standard_ids(int degree) const { return std_ids_[degree]; }
  std::vector<Monomial> standard_monomials(int degree) const;

  /// Graded dimensions of the quotient: monomial count minus relation rank.
  const std::vector<long long>& hilbert() const { return hilbert_; }

 private:
  Presentation() = default;

  LocalFrame problem_;
  int d_max_ = 0;
  std::vector<std::unique_ptr<EchelonSpan>> spans_;
  std::vector<std::vector<std::uint32_t>> std_ids_;
  std::vector<long long> hilbert_;
};

/// The degree-d relation generators, materialized as polynomials.
std::vector<Poly> relation_generators(const LocalFrame& problem, int d);

std::vector<long long> hp0_hilbert(const GaleFrame& frame, int d_max);

struct DegenerationDegree {
  int degree = 0;
  long long initial_count = 0;   // pivot monomials of the relation span
  long long sr_count = 0;        // monomials supported on a broken circuit
  bool contains_sr = false;      // every such monomial is a pivot
  bool equal = false;
};

struct DegenerationReport {
  bool ok = false;            // sets equal in every checked degree
  bool containment_ok = false;
  std::vector<DegenerationDegree> degrees;
};

DegenerationReport degeneration_check(Presentation& pres);

struct CentralFiber {
  std::vector<long long> dims;
  // per degree, the surviving standard monomial ids (a monomial lift of the basis)
  std::vector<std::vector<std::uint32_t>> basis_ids;
};

CentralFiber central_fiber(Presentation& pres);
std::vector<long long> central_fiber_dims(const GaleFrame& frame, int d_max);

struct FreenessCertificate {
  bool ok = false;
  std::vector<long long> h_poly;
  int base_rank = 0;
  std::vector<Monomial> basis_monomials;
  int first_bad_degree = -1;    // Hilbert mismatch location when !ok
  bool vanished = false;        // central fiber reached two consecutive zeros
};

FreenessCertificate freeness_certificate(Presentation& pres);

struct FiberResult {
  std::vector<BigRat> lambda;
  int truncation = 0;
  long long dim = 0;        // at the requested truncation
  long long dim_prev = 0;   // at truncation - 1
  bool stabilized = false;
};

/// Dimension of the truncated quotient by the relation span plus the span of
/// (ell_x - lambda_x) * m over monomials m; requires truncation <= d_max of
/// the presentation. lambda must have one entry per base form.
FiberResult fiber_dimension(Presentation& pres, const std::vector<BigRat>& lambda,
                            int truncation);

/// Checks that derivations by sampled non-circuit kernel vectors land in the
/// circuit-generated span (degrees up to d_max). Seeded and deterministic.
bool circuit_sufficiency_check(const GaleFrame& frame, Presentation& pres, int samples,
                               std::uint64_t seed);

/// Independent recomputation of the graded dimensions from the invariant-ring
/// side: monomials z^b w^d with frame*(b-d) = 0 modulo the span of all Poisson
/// brackets of invariant monomial pairs. Exact for each reported degree.
std::vector<long long> invariant_bracket_oracle(const GaleFrame& frame, int d_max);

}  // namespace hp0

#endif
