#include "hp0/presentation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "hp0/util.hpp"

namespace hp0 {

namespace {

/// Sparse integer vector of the derivation d_alpha e^beta inside the degree
/// table of |beta| - 1. Ids come out ascending because dropping a later
/// support index yields a graded-lex larger monomial.
SparseInts derivation_row(const SignedCircuit& circuit, const Monomial& beta,
                          const DegreeTable& table) {
  SparseInts row;
  Monomial m = beta;
  for (auto it = circuit.support.rbegin(); it != circuit.support.rend(); ++it) {
    int i = *it;
    if (beta[i] == 0) continue;
    m[i] -= 1;
    row.push_back({table.rank(m), static_cast<long long>(circuit.coeffs[i]) * beta[i]});
    m[i] += 1;
  }
  return row;
}

}  // namespace

Presentation::Presentation(LocalFrame problem, int d_max, int threads)
    : problem_(std::move(problem)), d_max_(d_max) {
  if (d_max_ < 0) throw std::invalid_argument("d_max must be nonnegative");
  const int n = problem_.n_local;
  spans_.resize(d_max_ + 1);
  std_ids_.resize(d_max_ + 1);
  hilbert_.assign(d_max_ + 1, 0);
  // degrees are independent; schedule the expensive high degrees first
  parallel_for(d_max_ + 1, threads, [&](int slot) {
    int d = d_max_ - slot;
    DegreeTable table(n, d);
    auto span = std::make_unique<EchelonSpan>(table.count());
    for (const auto& circuit : problem_.circuits) {
      int s = static_cast<int>(circuit.support.size());
      int rem = d + 1 - s;
      if (rem < 0) continue;
      DegreeTable gamma_table(n, rem);
      for (std::uint32_t g = 0; g < gamma_table.count(); ++g) {
        Monomial beta = gamma_table.unrank(g);
        for (int i : circuit.support) beta[i] += 1;
        span->insert_ints(derivation_row(circuit, beta, table));
      }
    }
    std_ids_[d] = span->free_ids();
    hilbert_[d] = static_cast<long long>(table.count()) - span->rank();
    spans_[d] = std::move(span);
  });
}

Presentation Presentation::stanley_reisner(LocalFrame problem, const SimplicialComplex& cx,
                                           int d_max, int threads) {
  Presentation pres;
  pres.problem_ = std::move(problem);
  pres.d_max_ = d_max;
  const int n = pres.problem_.n_local;
  pres.spans_.resize(d_max + 1);
  pres.std_ids_.assign(d_max + 1, {});
  pres.hilbert_.assign(d_max + 1, 0);
  parallel_for(d_max + 1, threads, [&](int d) {
    DegreeTable table(n, d);
    auto span = std::make_unique<EchelonSpan>(table.count());
    for (std::uint32_t id = 0; id < table.count(); ++id) {
      Monomial m = table.unrank(id);
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i)
        if (m[i] > 0) mask |= (1u << i);
      if (!cx.is_face(mask)) span->insert_ints({{id, 1}});
    }
    pres.std_ids_[d] = span->free_ids();
    pres.hilbert_[d] = static_cast<long long>(table.count()) - span->rank();
    pres.spans_[d] = std::move(span);
  });
  return pres;
}

std::vector<Monomial> Presentation::standard_monomials(int degree) const {
  DegreeTable table(n_vars(), degree);
  std::vector<Monomial> out;
  for (std::uint32_t id : std_ids_[degree]) out.push_back(table.unrank(id));
  return out;
}

std::vector<Poly> relation_generators(const LocalFrame& problem, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Poly> out;
  const int n = problem.n_local;
  for (const auto& circuit : problem.circuits) {
    int rem = d + 1 - static_cast<int>(circuit.support.size());
    if (rem < 0) continue;
    DegreeTable gamma_table(n, rem);
    for (std::uint32_t g = 0; g < gamma_table.count(); ++g) {
      Monomial beta = gamma_table.unrank(g);
      for (int i : circuit.support) beta[i] += 1;
      out.push_back(apply_derivation(circuit.coeffs, beta));
    }
  }
  return out;
}

std::vector<long long> hp0_hilbert(const GaleFrame& frame, int d_max) {
  return Presentation(full_problem(frame), d_max).hilbert();
}

DegenerationReport degeneration_check(Presentation& pres) {
  DegenerationReport rep;
  rep.ok = true;
  rep.containment_ok = true;
  const auto bc = broken_circuit_masks(pres.problem().circuits);
  const int n = pres.n_vars();
  for (int d = 0; d <= pres.d_max(); ++d) {
    DegreeTable table(n, d);
    DegenerationDegree row;
    row.degree = d;
    bool contains = true;
    for (std::uint32_t id = 0; id < table.count(); ++id) {
      Monomial m = table.unrank(id);
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i)
        if (m[i] > 0) mask |= (1u << i);
      bool sr = false;
      for (std::uint32_t b : bc)
        if ((b & mask) == b) {
          sr = true;
          break;
        }
      bool piv = pres.span(d).is_pivot(id);
      if (piv) row.initial_count += 1;
      if (sr) {
        row.sr_count += 1;
        if (!piv) contains = false;
      }
    }
    row.contains_sr = contains;
    row.equal = contains && row.initial_count == row.sr_count;
    rep.containment_ok = rep.containment_ok && contains;
    rep.ok = rep.ok && row.equal;
    rep.degrees.push_back(row);
  }
  return rep;
}

CentralFiber central_fiber(Presentation& pres) {
  CentralFiber out;
  const int n = pres.n_vars();
  const auto& forms = pres.problem().base_forms;
  out.dims.assign(pres.d_max() + 1, 0);
  out.basis_ids.resize(pres.d_max() + 1);
  for (int d = 0; d <= pres.d_max(); ++d) {
    const auto& std_ids = pres.standard_ids(d);
    if (d == 0) {
      out.dims[0] = static_cast<long long>(std_ids.size());
      out.basis_ids[0] = std_ids;
      continue;
    }
    if (std_ids.empty()) continue;
    // dense index of each standard monomial inside this degree
    DegreeTable table(n, d);
    DegreeTable prev(n, d - 1);
    std::vector<std::int32_t> dense(table.count(), -1);
    for (std::uint32_t j = 0; j < std_ids.size(); ++j) dense[std_ids[j]] = j;
    EchelonSpan residues(static_cast<std::uint32_t>(std_ids.size()));
    // Multiples of the base linear forms, reduced into standard coordinates.
    // Standard monomials of the previous degree suffice: the relation span is
    // a module over the base ring, so form * (pivot tail) reduces to zero.
    for (const auto& form : forms) {
      for (std::uint32_t mid : pres.standard_ids(d - 1)) {
        Monomial m = prev.unrank(mid);
        SparseInts prod;
        for (int j = 0; j < n; ++j) {
          if (form[j] == 0) continue;
          m[j] += 1;
          prod.push_back({table.rank(m), form[j]});
          m[j] -= 1;
        }
        auto nf = pres.span(d).normal_form_ints(prod);
        SparseRats re;
        re.reserve(nf.size());
        for (auto& [id, c] : nf) re.push_back({static_cast<std::uint32_t>(dense[id]), c});
        residues.insert(re);
      }
    }
    out.dims[d] = static_cast<long long>(std_ids.size()) - residues.rank();
    for (std::uint32_t j = 0; j < std_ids.size(); ++j)
      if (!residues.is_pivot(j)) out.basis_ids[d].push_back(std_ids[j]);
  }
  return out;
}

std::vector<long long> central_fiber_dims(const GaleFrame& frame, int d_max) {
  Presentation pres(full_problem(frame), d_max);
  return central_fiber(pres).dims;
}

FreenessCertificate freeness_certificate(Presentation& pres) {
  FreenessCertificate cert;
  cert.base_rank = pres.problem().rank;
  CentralFiber cf = central_fiber(pres);
  int vanish_at = -1;
  for (int d = 0; d + 1 <= pres.d_max(); ++d)
    if (cf.dims[d] == 0 && cf.dims[d + 1] == 0) {
      vanish_at = d;
      break;
    }
  if (vanish_at < 0) {
    cert.ok = false;
    cert.vanished = false;
    return cert;
  }
  cert.vanished = true;
  cert.h_poly.assign(cf.dims.begin(), cf.dims.begin() + vanish_at);
  while (!cert.h_poly.empty() && cert.h_poly.back() == 0) cert.h_poly.pop_back();
  auto expect = series_expansion(cert.h_poly, cert.base_rank, pres.d_max());
  cert.ok = true;
  for (int d = 0; d <= pres.d_max(); ++d)
    if (expect[d] != pres.hilbert()[d]) {
      cert.ok = false;
      cert.first_bad_degree = d;
      break;
    }
  for (int d = 0; d <= pres.d_max(); ++d) {
    DegreeTable table(pres.n_vars(), d);
    for (std::uint32_t id : cf.basis_ids[d]) cert.basis_monomials.push_back(table.unrank(id));
  }
  return cert;
}

FiberResult fiber_dimension(Presentation& pres, const std::vector<BigRat>& lambda,
                            int truncation) {
  if (truncation < 1 || truncation > pres.d_max())
    throw std::invalid_argument("fiber truncation must be in 1..d_max");
  const auto& forms = pres.problem().base_forms;
  if (lambda.size() != forms.size())
    throw std::invalid_argument("lambda must have one entry per base row");
  const int n = pres.n_vars();
  FiberResult res;
  res.lambda = lambda;
  res.truncation = truncation;

  auto quotient_dim = [&](int D) -> long long {
    // coordinates: standard monomials of degree D first, then D-1, ... then 0
    std::vector<std::uint32_t> offset(D + 1, 0);
    long long ambient = 0;
    for (int d = D; d >= 0; --d) {
      offset[d] = static_cast<std::uint32_t>(ambient);
      ambient += static_cast<long long>(pres.standard_ids(d).size());
    }
    std::vector<std::vector<std::int32_t>> dense(D + 1);
    for (int d = 0; d <= D; ++d) {
      DegreeTable table(n, d);
      dense[d].assign(table.count(), -1);
      const auto& ids = pres.standard_ids(d);
      for (std::uint32_t j = 0; j < ids.size(); ++j) dense[d][ids[j]] = j;
    }
    EchelonSpan rel(static_cast<std::uint32_t>(ambient));
    for (int j = 0; j + 1 <= D; ++j) {
      DegreeTable table(n, j);
      DegreeTable up(n, j + 1);
      for (std::size_t x = 0; x < forms.size(); ++x) {
        for (std::uint32_t mid : pres.standard_ids(j)) {
          Monomial m = table.unrank(mid);
          SparseInts prod;
          for (int v = 0; v < n; ++v) {
            if (forms[x][v] == 0) continue;
            m[v] += 1;
            prod.push_back({up.rank(m), forms[x][v]});
            m[v] -= 1;
          }
          auto nf = pres.span(j + 1).normal_form_ints(prod);
          SparseRats row;
          row.reserve(nf.size() + 1);
          for (auto& [id, c] : nf)
            row.push_back({offset[j + 1] + static_cast<std::uint32_t>(dense[j + 1][id]), c});
          if (sgn(lambda[x]) != 0)
            row.push_back({offset[j] + static_cast<std::uint32_t>(dense[j][mid]), -lambda[x]});
          rel.insert(row);
        }
      }
    }
    return ambient - rel.rank();
  };

  res.dim = quotient_dim(truncation);
  res.dim_prev = quotient_dim(truncation - 1);
  res.stabilized = res.dim == res.dim_prev;
  return res;
}

bool circuit_sufficiency_check(const GaleFrame& frame, Presentation& pres, int samples,
                               std::uint64_t seed) {
  auto kernel = kernel_basis(frame);
  if (kernel.empty()) return true;
  const int n = frame.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < samples; ++s) {
    std::vector<long long> alpha(n, 0);
    bool nonzero = false;
    for (const auto& row : kernel) {
      int c = coef(rng);
      if (c == 0) continue;
      nonzero = true;
      for (int j = 0; j < n; ++j) alpha[j] += c * row[j];
    }
    if (!nonzero) continue;
    std::vector<int> supp;
    for (int j = 0; j < n; ++j)
      if (alpha[j] != 0) supp.push_back(j);
    if (supp.empty()) continue;
    int sz = static_cast<int>(supp.size());
    for (int d = 0; d <= pres.d_max(); ++d) {
      int rem = d + 1 - sz;
      if (rem < 0) continue;
      DegreeTable table(n, d);
      DegreeTable gamma_table(n, rem);
      for (std::uint32_t g = 0; g < gamma_table.count(); ++g) {
        Monomial beta = gamma_table.unrank(g);
        for (int i : supp) beta[i] += 1;
        SparseInts row;
        Monomial m = beta;
        for (auto it = supp.rbegin(); it != supp.rend(); ++it) {
          int i = *it;
          m[i] -= 1;
          row.push_back({table.rank(m), alpha[i] * beta[i]});
          m[i] += 1;
        }
        if (!pres.span(d).normal_form_ints(row).empty()) return false;
      }
    }
  }
  return true;
}

std::vector<long long> invariant_bracket_oracle(const GaleFrame& frame, int d_max) {
  const int n = frame.n();
  const int k = frame.k();
  std::vector<long long> dims(d_max + 1, 0);

  // frame * exponent vector, the invariance key
  auto key_of = [&](const Monomial& a) {
    std::vector<long long> key(k, 0);
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < n; ++j) key[r] += frame.rows()[r][j] * a[j];
    return key;
  };
  // all monomials componentwise below tau, grouped by key
  auto grouped_subs = [&](const Monomial& tau) {
    std::map<std::vector<long long>, std::vector<Monomial>> groups;
    Monomial a(n, 0);
    while (true) {
      groups[key_of(a)].push_back(a);
      int p = n - 1;
      while (p >= 0 && a[p] == tau[p]) {
        a[p] = 0;
        --p;
      }
      if (p < 0) break;
      a[p] += 1;
    }
    return groups;
  };

  parallel_for(d_max + 1, 0, [&](int slot) {
    int d = d_max - slot;
    DegreeTable table(n, d);
    EchelonSpan span(table.count());
    DegreeTable taus(n, d + 1);
    for (std::uint32_t t = 0; t < taus.count(); ++t) {
      Monomial tau = taus.unrank(t);
      auto groups = grouped_subs(tau);
      for (const auto& [key, members] : groups) {
        (void)key;
        for (const Monomial& a : members) {
          for (const Monomial& b : members) {
            // partner halves: the pair multiplies to (zw)^tau
            Monomial c(n), dd(n);
            for (int j = 0; j < n; ++j) {
              c[j] = tau[j] - a[j];
              dd[j] = tau[j] - b[j];
            }
            // keep one representative of {p,q} vs {q,p}
            if (std::tie(a, b) >= std::tie(c, dd)) continue;
            // { z^a w^b , z^c w^dd } = sum_i (a_i dd_i - b_i c_i) z^(a+c-e_i) w^(b+dd-e_i)
            SparseInts row;
            for (int i = n - 1; i >= 0; --i) {
              long long coef =
                  static_cast<long long>(a[i]) * dd[i] - static_cast<long long>(b[i]) * c[i];
              if (coef == 0) continue;
              if (a[i] + c[i] == 0 || b[i] + dd[i] == 0) continue;
              // only diagonal terms survive the singleton bracket relations
              bool diag = true;
              for (int j = 0; j < n; ++j) {
                int ze = a[j] + c[j] - (j == i ? 1 : 0);
                int we = b[j] + dd[j] - (j == i ? 1 : 0);
                if (ze != we) {
                  diag = false;
                  break;
                }
              }
              if (!diag) continue;
              Monomial m = tau;
              m[i] -= 1;
              row.push_back({table.rank(m), coef});
            }
            if (!row.empty()) span.insert_ints(row);
          }
        }
      }
    }
    dims[d] = static_cast<long long>(table.count()) - span.rank();
  });
  return dims;
}

}  // namespace hp0
