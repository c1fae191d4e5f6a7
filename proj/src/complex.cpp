#include "hp0/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "hp0/monomial.hpp"

namespace hp0 {

SimplicialComplex SimplicialComplex::from_forbidden(int n_vertices,
                                                    const std::vector<std::uint32_t>& forbidden) {
  return from_predicate(n_vertices, [&](std::uint32_t m) {
    for (std::uint32_t b : forbidden)
      if ((b & m) == b) return false;
    return true;
  });
}

bool SimplicialComplex::is_face(std::uint32_t mask) const {
  return std::binary_search(faces_.begin(), faces_.end(), mask);
}

std::vector<std::uint32_t> SimplicialComplex::facets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : faces_) {
    bool maximal = true;
    for (int v = 0; v < n_ && maximal; ++v)
      if (!(f & (1u << v)) && is_face(f | (1u << v))) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  int best = -2;
  for (std::uint32_t f : faces_) best = std::max(best, __builtin_popcount(f) - 1);
  return best;
}

std::vector<long long> SimplicialComplex::face_counts() const {
  if (faces_.empty()) return {};
  std::vector<long long> f(dimension() + 2, 0);
  for (std::uint32_t m : faces_) f[__builtin_popcount(m)] += 1;
  return f;
}

std::vector<std::uint32_t> broken_circuit_masks(const std::vector<SignedCircuit>& circuits) {
  std::vector<std::uint32_t> out;
  for (const auto& c : circuits) {
    std::uint32_t m = c.mask & ~(1u << c.support.back());
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> broken_circuits(const GaleFrame& frame) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m : broken_circuit_masks(signed_circuits(frame))) {
    std::vector<int> s;
    for (int i = 0; i < frame.n(); ++i)
      if (m & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

SimplicialComplex bc_faces(const GaleFrame& frame) {
  return SimplicialComplex::from_forbidden(frame.n(),
                                           broken_circuit_masks(signed_circuits(frame)));
}

SimplicialComplex bc_complex_of(const LocalFrame& problem) {
  return SimplicialComplex::from_forbidden(problem.n_local,
                                           broken_circuit_masks(problem.circuits));
}

FHVectors fh_vectors(const SimplicialComplex& cx, int d) {
  FHVectors out;
  if (cx.is_void()) return out;
  if (cx.dimension() + 1 > d)
    throw std::invalid_argument("fh_vectors: complex dimension exceeds transform parameter");
  auto counts = cx.face_counts();  // (f_{-1}, ..., f_{dim})
  out.f.assign(d + 1, 0);
  for (std::size_t i = 0; i < counts.size(); ++i) out.f[i] = counts[i];
  out.h.assign(d + 1, 0);
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= j; ++i) {
      long long sign = ((j - i) % 2 == 0) ? 1 : -1;
      out.h[j] += sign * binomial(d - i, j - i) * out.f[i];
    }
  return out;
}

std::vector<long long> series_expansion(const std::vector<long long>& h_poly, int k, int d_max) {
  std::vector<long long> out(d_max + 1, 0);
  for (int d = 0; d <= d_max; ++d)
    for (int i = 0; i < static_cast<int>(h_poly.size()); ++i) {
      if (i > d) break;
      out[d] += h_poly[i] * (k == 0 ? (d == i ? 1 : 0) : binomial(d - i + k - 1, k - 1));
    }
  return out;
}

std::vector<long long> sr_quotient_dims_of(const LocalFrame& problem, int d_max,
                                           const SimplicialComplex& cx) {
  std::vector<long long> dims(d_max + 1, 0);
  auto counts = cx.face_counts();
  if (!counts.empty()) {
    dims[0] = 1;
    for (int d = 1; d <= d_max; ++d)
      for (int s = 1; s < static_cast<int>(counts.size()); ++s)
        dims[d] += counts[s] * binomial(d - 1, s - 1);
  }
  // cross-check against the h-vector expansion
  std::vector<long long> h;
  if (!cx.is_void()) h = fh_vectors(cx, problem.rank).h;
  auto expect = series_expansion(h, problem.rank, d_max);
  if (expect != dims)
    throw std::logic_error("sr_quotient_dims: face counts disagree with h-vector expansion");
  return dims;
}

std::vector<long long> sr_quotient_dims(const GaleFrame& frame, int d_max) {
  return sr_quotient_dims_of(full_problem(frame), d_max, bc_faces(frame));
}

IhBettiReport ih_betti_report(const GaleFrame& frame, int d_max) {
  IhBettiReport rep;
  rep.k = frame.k();
  auto cx = bc_faces(frame);
  std::vector<long long> h;
  if (!cx.is_void()) h = fh_vectors(cx, frame.k()).h;
  rep.ih_betti = h;
  rep.equivariant = series_expansion(h, frame.k(), d_max);
  return rep;
}

DualTopHReport dual_top_h_check(const GaleFrame& frame) {
  DualTopHReport rep;
  auto cx = bc_faces(frame);
  if (!cx.is_void())
    for (long long hv : fh_vectors(cx, frame.k()).h) rep.sum_h += hv;
  GaleFrame dual = dual_frame(frame);
  int dual_rank = frame.n() - frame.k();
  // independence complex of the dual: faces are independent column sets
  auto circuits = signed_circuits(dual);
  auto indep = SimplicialComplex::from_predicate(frame.n(), [&](std::uint32_t m) {
    for (const auto& c : circuits)
      if ((c.mask & m) == c.mask) return false;
    return true;
  });
  auto fh = fh_vectors(indep, dual_rank);
  rep.dual_top_h = fh.h.empty() ? 0 : fh.h.back();
  rep.ok = rep.sum_h == rep.dual_top_h;
  return rep;
}

}  // namespace hp0
