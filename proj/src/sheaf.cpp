#include "hp0/sheaf.hpp"

#include <algorithm>
#include <stdexcept>

#include "hp0/util.hpp"

namespace hp0 {

namespace {

constexpr int kFullEnumerationFlatLimit = 20;
constexpr std::size_t kDownSetBound = 1u << 16;

std::string flat_key(const Flat& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.columns.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.columns[i] + 1);
  }
  return s + "}";
}

}  // namespace

PosetTopology build_topology(const GaleFrame& frame) {
  PosetTopology topo;
  topo.lattice = flats(frame);
  const int m = static_cast<int>(topo.lattice.flats.size());
  // below[i]: bitmask of flats <= flat i (the principal open U_i)
  std::vector<std::uint32_t> below(m, 0);
  for (auto [i, j] : topo.lattice.order) below[j] |= (1u << i);

  auto emit = [&](std::uint32_t mask) {
    std::vector<int> open;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) open.push_back(i);
    topo.opens.push_back(std::move(open));
  };

  if (m <= kFullEnumerationFlatLimit) {
    std::vector<std::uint32_t> downsets;
    bool overflow = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::uint32_t s = static_cast<std::uint32_t>(mask);
      bool closed = true;
      for (int i = 0; i < m && closed; ++i)
        if ((s & (1u << i)) && (below[i] & s) != below[i]) closed = false;
      if (!closed) continue;
      downsets.push_back(s);
      if (downsets.size() > kDownSetBound) {
        overflow = true;
        break;
      }
    }
    if (!overflow) {
      topo.full_mode = true;
      for (std::uint32_t s : downsets) emit(s);
      return topo;
    }
  }
  topo.full_mode = false;
  for (int i = 0; i < m; ++i) emit(below[i]);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if ((below[i] | below[j]) != below[i] && (below[i] | below[j]) != below[j])
        emit(below[i] | below[j]);
  return topo;
}

SheafStalks::SheafStalks(const GaleFrame& frame, const FlatLattice& lattice, SheafKind kind,
                         int d_max, int threads)
    : frame_(frame), lattice_(lattice), kind_(kind), d_max_(d_max) {
  const int m = static_cast<int>(lattice_.flats.size());
  stalks_.resize(m);
  parallel_for(m, threads, [&](int i) {
    LocalFrame lf = localize(frame_, lattice_.flats[i]);
    if (kind_ == SheafKind::Module) {
      stalks_[i] = std::make_unique<Presentation>(lf, d_max_, 1);
    } else {
      SimplicialComplex cx = bc_complex_of(lf);
      stalks_[i] =
          std::make_unique<Presentation>(Presentation::stanley_reisner(lf, cx, d_max_, 1));
    }
  });
}

StalkData SheafStalks::stalk_data(int flat) const {
  StalkData d;
  d.flat = flat;
  d.local_rank = stalks_[flat]->problem().rank;
  d.hilbert = stalks_[flat]->hilbert();
  for (int deg = 0; deg <= d_max_; ++deg)
    d.basis_monomials.push_back(stalks_[flat]->standard_monomials(deg));
  return d;
}

const SheafStalks::Restriction& SheafStalks::restriction(int target, int source) {
  auto key = std::make_pair(target, source);
  auto it = restrictions_.find(key);
  if (it != restrictions_.end()) return it->second;
  return restrictions_.emplace(key, build_restriction(target, source)).first->second;
}

SheafStalks::Restriction SheafStalks::build_restriction(int target, int source) {
  if (!lattice_.leq(target, source))
    throw std::invalid_argument("restriction requires comparable flats (target <= source)");
  Restriction r;
  r.target = target;
  r.source = source;
  Presentation& src = *stalks_[source];
  Presentation& dst = *stalks_[target];
  const auto& src_cols = src.problem().columns;
  const auto& dst_cols = dst.problem().columns;
  std::vector<int> to_target(frame_.n(), -1);
  for (std::size_t j = 0; j < dst_cols.size(); ++j) to_target[dst_cols[j]] = static_cast<int>(j);

  // image of a source-local monomial: kill variables outside the target flat
  auto map_monomial = [&](const Monomial& m) -> std::optional<Monomial> {
    Monomial out(dst.n_vars(), 0);
    for (int v = 0; v < static_cast<int>(m.size()); ++v) {
      if (m[v] == 0) continue;
      int g = src_cols[v];
      if (to_target[g] < 0) return std::nullopt;
      out[to_target[g]] = m[v];
    }
    return out;
  };

  r.mats.resize(d_max_ + 1);
  for (int d = 0; d <= d_max_; ++d) {
    DegreeTable dst_table(dst.n_vars(), d);
    const auto& dst_std = dst.standard_ids(d);
    std::vector<std::int32_t> dense(dst_table.count(), -1);
    for (std::uint32_t j = 0; j < dst_std.size(); ++j) dense[dst_std[j]] = j;
    auto src_basis = src.standard_monomials(d);
    auto& mat = r.mats[d];
    mat.assign(dst_std.size(), std::vector<BigRat>(src_basis.size(), BigRat(0)));
    for (std::size_t c = 0; c < src_basis.size(); ++c) {
      auto img = map_monomial(src_basis[c]);
      if (!img) continue;
      auto nf = dst.span(d).normal_form_ints({{dst_table.rank(*img), 1}});
      for (auto& [id, q] : nf) mat[dense[id]][c] = q;
    }
    // well-definedness: source relations must land in the target relation span
    if (kind_ == SheafKind::Module) {
      for (const Poly& g : relation_generators(src.problem(), d)) {
        SparseInts row;
        for (const auto& [mono, coef] : g.terms()) {
          auto img = map_monomial(mono);
          if (!img) continue;
          row.push_back({dst_table.rank(*img), static_cast<long long>(coef.get_num().get_si())});
        }
        std::sort(row.begin(), row.end());
        if (!dst.span(d).normal_form_ints(row).empty()) r.well_defined = false;
      }
    } else {
      DegreeTable src_table(src.n_vars(), d);
      for (std::uint32_t id : src.span(d).pivot_ids()) {
        auto img = map_monomial(src_table.unrank(id));
        if (!img) continue;
        if (!dst.span(d).normal_form_ints({{dst_table.rank(*img), 1}}).empty())
          r.well_defined = false;
      }
    }
  }
  return r;
}

namespace {

/// Compatible-tuple space over an open set in one degree: kernel of the
/// difference constraints s_target - M s_source over all comparable pairs.
struct SectionSpace {
  long long dim = 0;
  std::vector<SparseRats> basis;           // kernel vectors over block coordinates
  std::vector<long long> block_offset;     // offset of each open member's block
  std::vector<int> members;                // flat indices, lattice order
};

SectionSpace section_space(SheafStalks& stalks, const std::vector<int>& open, int degree) {
  SectionSpace out;
  out.members = open;
  std::sort(out.members.begin(), out.members.end());
  long long ambient = 0;
  for (int f : out.members) {
    out.block_offset.push_back(ambient);
    ambient += static_cast<long long>(stalks.stalk(f).standard_ids(degree).size());
  }
  auto offset_of = [&](int flat) {
    auto it = std::lower_bound(out.members.begin(), out.members.end(), flat);
    return out.block_offset[it - out.members.begin()];
  };
  EchelonSpan constraints(static_cast<std::uint32_t>(ambient), /*keep_reduced=*/true);
  for (std::size_t a = 0; a < out.members.size(); ++a) {
    for (std::size_t b = a + 1; b < out.members.size(); ++b) {
      int i = out.members[a], j = out.members[b];
      if (!stalks.lattice().leq(i, j)) continue;
      const auto& mat = stalks.restriction(i, j).mats[degree];
      long long oi = offset_of(i), oj = offset_of(j);
      for (std::size_t t = 0; t < mat.size(); ++t) {
        SparseRats row;
        row.push_back({static_cast<std::uint32_t>(oi + t), BigRat(1)});
        for (std::size_t c = 0; c < mat[t].size(); ++c)
          if (sgn(mat[t][c]) != 0)
            row.push_back({static_cast<std::uint32_t>(oj + c), -mat[t][c]});
        constraints.insert(row);
      }
    }
  }
  out.dim = ambient - constraints.rank();
  // kernel basis from the reduced echelon rows
  auto rows = constraints.rows();
  std::vector<std::uint32_t> frees = constraints.free_ids();
  for (std::uint32_t f : frees) {
    SparseRats v;
    v.push_back({f, BigRat(1)});
    for (const auto& row : rows) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& t, std::uint32_t key) { return t.first < key; });
      if (it != row.end() && it->first == f) v.push_back({row.front().first, -it->second});
    }
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool surjects_onto(SheafStalks& stalks, const SectionSpace& global,
                   const std::vector<int>& open, int degree) {
  SectionSpace local = section_space(stalks, open, degree);
  if (local.dim == 0) return true;
  // project each global section onto the open's blocks and compare ranks
  std::vector<long long> proj_offset(stalks.lattice().flats.size(), -1);
  for (std::size_t i = 0; i < local.members.size(); ++i)
    proj_offset[local.members[i]] = local.block_offset[i];
  long long local_ambient = 0;
  for (int f : local.members)
    local_ambient += static_cast<long long>(stalks.stalk(f).standard_ids(degree).size());
  EchelonSpan image(static_cast<std::uint32_t>(local_ambient));
  for (const auto& vec : global.basis) {
    SparseRats proj;
    for (const auto& [id, c] : vec) {
      // locate the block of this coordinate inside the global layout
      std::size_t blk = std::upper_bound(global.block_offset.begin(), global.block_offset.end(),
                                         static_cast<long long>(id)) -
                        global.block_offset.begin() - 1;
      int flat = global.members[blk];
      if (proj_offset[flat] < 0) continue;
      long long rel = static_cast<long long>(id) - global.block_offset[blk];
      proj.push_back({static_cast<std::uint32_t>(proj_offset[flat] + rel), c});
    }
    std::sort(proj.begin(), proj.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    image.insert(proj);
  }
  return static_cast<long long>(image.rank()) == local.dim;
}

MesSheafReport check_sheaf(SheafStalks& stalks, const PosetTopology& topo, int d_max) {
  MesSheafReport rep;
  const auto& lat = stalks.lattice();
  // (a) bottom stalk is C in degree 0
  {
    const auto& h = stalks.stalk(lat.bottom).hilbert();
    rep.bottom_ok = !h.empty() && h[0] == 1;
    for (std::size_t d = 1; d < h.size(); ++d) rep.bottom_ok = rep.bottom_ok && h[d] == 0;
  }
  // (b) every stalk free over its local base ring
  rep.free_ok = true;
  for (std::size_t f = 0; f < lat.flats.size(); ++f)
    rep.free_ok = rep.free_ok && freeness_certificate(stalks.stalk(static_cast<int>(f))).ok;
  // restriction well-definedness over all comparable pairs
  rep.restrictions_ok = true;
  for (auto [i, j] : lat.order)
    if (i != j) rep.restrictions_ok = rep.restrictions_ok && stalks.restriction(i, j).well_defined;
  // sections over principal opens match the stalks
  rep.principal_sections_ok = true;
  std::vector<std::vector<int>> principal(lat.flats.size());
  for (auto [i, j] : lat.order) principal[j].push_back(i);
  for (std::size_t f = 0; f < lat.flats.size(); ++f) {
    auto dims = section_dims(stalks, principal[f], d_max);
    rep.principal_sections_ok =
        rep.principal_sections_ok && dims == stalks.stalk(static_cast<int>(f)).hilbert();
  }
  // (c) flabby: global sections surject onto the sections of every open
  rep.flabby_ok = true;
  std::vector<int> whole(lat.flats.size());
  for (std::size_t i = 0; i < whole.size(); ++i) whole[i] = static_cast<int>(i);
  for (int d = 0; d <= d_max; ++d) {
    SectionSpace global = section_space(stalks, whole, d);
    for (const auto& open : topo.opens) {
      if (open.empty() || open.size() == whole.size()) continue;
      if (!surjects_onto(stalks, global, open, d)) {
        rep.flabby_ok = false;
        break;
      }
    }
    if (!rep.flabby_ok) break;
  }
  return rep;
}

}  // namespace

std::vector<long long> section_dims(SheafStalks& stalks, const std::vector<int>& open,
                                    int d_max) {
  std::vector<long long> dims(d_max + 1, 0);
  for (int d = 0; d <= d_max; ++d) dims[d] = section_space(stalks, open, d).dim;
  return dims;
}

MesReport mes_check(const GaleFrame& frame, int d_max, int threads) {
  MesReport rep;
  rep.loops_present = false;
  for (const auto& w : frame.warnings())
    if (w.find("loop") != std::string::npos) rep.loops_present = true;
  PosetTopology topo = build_topology(frame);
  rep.mode = topo.full_mode ? "full" : "principal";

  SheafStalks module_stalks(frame, topo.lattice, SheafKind::Module, d_max, threads);
  SheafStalks bc_stalks(frame, topo.lattice, SheafKind::BrokenCircuit, d_max, threads);

  rep.module_sheaf = check_sheaf(module_stalks, topo, d_max);
  rep.bc_sheaf = check_sheaf(bc_stalks, topo, d_max);

  // (d) stalkwise flat degeneration: initial span equals the face-ring span
  rep.degeneration_ok = true;
  for (std::size_t f = 0; f < topo.lattice.flats.size(); ++f)
    rep.degeneration_ok =
        rep.degeneration_ok && degeneration_check(module_stalks.stalk(static_cast<int>(f))).ok;

  for (std::size_t f = 0; f < topo.lattice.flats.size(); ++f)
    rep.stalk_hilberts.push_back(
        {flat_key(topo.lattice.flats[f]), module_stalks.stalk(static_cast<int>(f)).hilbert()});

  auto sheaf_ok = [](const MesSheafReport& s) {
    return s.bottom_ok && s.free_ok && s.flabby_ok && s.restrictions_ok &&
           s.principal_sections_ok;
  };
  rep.ok = sheaf_ok(rep.module_sheaf) && sheaf_ok(rep.bc_sheaf) && rep.degeneration_ok;
  return rep;
}

}  // namespace hp0
