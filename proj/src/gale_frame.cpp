#include "hp0/gale_frame.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hp0/rational.hpp"
#include "json.hpp"

namespace hp0 {

namespace {

using IntMatrix = std::vector<std::vector<long long>>;

/// Fraction-free determinant. Only called on matrices whose entries are in
/// {-1,0,1} (the 1x1 minors are screened first), so intermediate values are
/// minors of a sign matrix and fit comfortably in 64 bits up to n = 14.
long long det_bareiss(IntMatrix m) {
  const int s = static_cast<int>(m.size());
  long long prev = 1;
  long long sign = 1;
  for (int c = 0; c < s; ++c) {
    int p = c;
    while (p < s && m[p][c] == 0) ++p;
    if (p == s) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (int r = c + 1; r < s; ++r) {
      for (int j = c + 1; j < s; ++j)
        m[r][j] = (m[c][c] * m[r][j] - m[r][c] * m[c][j]) / prev;
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[s - 1][s - 1];
}

void combinations_first(std::vector<int>& idx, int r) {
  idx.resize(r);
  std::iota(idx.begin(), idx.end(), 0);
}

bool combinations_next(std::vector<int>& idx, int limit) {
  int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[i] < limit - (r - i)) {
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Row-reduced echelon form over Q. Returns rank; pivots[r] is the pivot
/// column of row r; rows are rescaled monic and fully back-substituted.
struct Rref {
  std::vector<std::vector<BigRat>> rows;
  std::vector<int> pivots;
  int rank = 0;
};

Rref rref(const IntMatrix& m, int n_cols) {
  Rref out;
  for (const auto& r : m) {
    std::vector<BigRat> v(n_cols);
    for (int j = 0; j < n_cols; ++j) v[j] = BigRat(static_cast<long>(r[j]));
    out.rows.push_back(std::move(v));
  }
  int rank = 0;
  for (int c = 0; c < n_cols && rank < static_cast<int>(out.rows.size()); ++c) {
    int p = -1;
    for (int r = rank; r < static_cast<int>(out.rows.size()); ++r)
      if (sgn(out.rows[r][c]) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(out.rows[rank], out.rows[p]);
    BigRat inv = 1 / out.rows[rank][c];
    for (int j = c; j < n_cols; ++j) out.rows[rank][j] *= inv;
    for (int r = 0; r < static_cast<int>(out.rows.size()); ++r) {
      if (r == rank || sgn(out.rows[r][c]) == 0) continue;
      BigRat f = out.rows[r][c];
      for (int j = c; j < n_cols; ++j) out.rows[r][j] -= f * out.rows[rank][j];
    }
    out.pivots.push_back(c);
    ++rank;
  }
  out.rank = rank;
  out.rows.resize(rank);
  return out;
}

int rank_of_columns(const IntMatrix& rows, const std::vector<int>& cols) {
  if (cols.empty()) return 0;
  IntMatrix t(cols.size(), std::vector<long long>(rows.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < rows.size(); ++r) t[j][r] = rows[r][cols[j]];
  return rref(t, static_cast<int>(rows.size())).rank;
}

std::vector<std::vector<long long>> integer_kernel(const IntMatrix& rows, int n_cols) {
  Rref e = rref(rows, n_cols);
  std::vector<bool> is_pivot(n_cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<long long>> basis;
  for (int f = 0; f < n_cols; ++f) {
    if (is_pivot[f]) continue;
    // x_f = 1, pivot coordinates read off the echelon rows, then cleared to
    // a primitive integer vector with positive first nonzero entry.
    std::vector<BigRat> v(n_cols);
    v[f] = 1;
    for (int r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.rows[r][f];
    mpz_class lcm = 1;
    for (const auto& q : v)
      if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> w(n_cols);
    mpz_class gcd = 0;
    for (int j = 0; j < n_cols; ++j) {
      w[j] = mpz_class(v[j].get_num() * (lcm / v[j].get_den()));
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w[j].get_mpz_t());
    }
    if (gcd > 1)
      for (auto& x : w) x /= gcd;
    int lead = 0;
    while (lead < n_cols && w[lead] == 0) ++lead;
    if (lead < n_cols && w[lead] < 0)
      for (auto& x : w) x = -x;
    std::vector<long long> out(n_cols);
    for (int j = 0; j < n_cols; ++j) {
      if (!w[j].fits_slong_p()) throw FrameError("kernel entry out of range");
      out[j] = w[j].get_si();
    }
    basis.push_back(std::move(out));
  }
  return basis;
}

std::string join_indices(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::optional<MinorViolation> tu_violation(const IntMatrix& rows) {
  const int k = static_cast<int>(rows.size());
  const int n = k == 0 ? 0 : static_cast<int>(rows[0].size());
  // 1x1 minors first; afterwards every entry is a sign and Bareiss is safe.
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c)
      if (rows[r][c] < -1 || rows[r][c] > 1)
        return MinorViolation{{r + 1}, {c + 1}, rows[r][c]};
  for (int s = 2; s <= std::min(k, n); ++s) {
    std::vector<int> rsel, csel;
    combinations_first(rsel, s);
    do {
      combinations_first(csel, s);
      do {
        IntMatrix sub(s, std::vector<long long>(s));
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) sub[i][j] = rows[rsel[i]][csel[j]];
        long long d = det_bareiss(std::move(sub));
        if (d < -1 || d > 1) {
          MinorViolation v;
          for (int i : rsel) v.rows.push_back(i + 1);
          for (int j : csel) v.cols.push_back(j + 1);
          v.det = d;
          return v;
        }
      } while (combinations_next(csel, n));
    } while (combinations_next(rsel, k));
  }
  return std::nullopt;
}

bool check_total_unimodularity(const GaleFrame& frame) {
  return !tu_violation(frame.rows()).has_value();
}

GaleFrame::GaleFrame(int k, int n, IntMatrix rows) : k_(k), n_(n), rows_(std::move(rows)) {
  if (k_ < 0 || n_ < 1) throw FrameError("frame dimensions must satisfy k >= 0, n >= 1");
  if (static_cast<int>(rows_.size()) != k_)
    throw FrameError("expected " + std::to_string(k_) + " rows, got " +
                     std::to_string(rows_.size()));
  for (int r = 0; r < k_; ++r)
    if (static_cast<int>(rows_[r].size()) != n_)
      throw FrameError("row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows_[r].size()) + " entries, expected " +
                       std::to_string(n_));
  if (auto v = tu_violation(rows_)) {
    throw FrameError("not totally unimodular: minor at rows {" + join_indices(v->rows) +
                     "} cols {" + join_indices(v->cols) + "} has determinant " +
                     std::to_string(v->det));
  }
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  if (rank_of_columns(rows_, all) != k_) throw FrameError("rows are not independent");
  for (int c = 0; c < n_; ++c) {
    bool zero = true;
    for (int r = 0; r < k_; ++r) zero = zero && rows_[r][c] == 0;
    if (zero)
      warnings_.push_back("column " + std::to_string(c + 1) +
                          " is zero (loop): all quotients vanish");
  }
}

GaleFrame GaleFrame::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto parse_ints = [&](int expected, const char* what) {
    std::istringstream ls(line);
    std::vector<long long> out;
    std::string tok;
    int pos = 0;
    while (ls >> tok) {
      ++pos;
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        throw FrameError("line " + std::to_string(lineno) + ", token " + std::to_string(pos) +
                         ": '" + tok + "' is not an integer");
      }
    }
    if (expected >= 0 && static_cast<int>(out.size()) != expected)
      throw FrameError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(expected) + " " + what + ", got " +
                       std::to_string(out.size()));
    return out;
  };
  if (!next_line()) throw FrameError("empty frame file");
  auto header = parse_ints(2, "header integers (k n)");
  int k = static_cast<int>(header[0]);
  int n = static_cast<int>(header[1]);
  IntMatrix rows;
  for (int r = 0; r < k; ++r) {
    if (!next_line())
      throw FrameError("unexpected end of input: expected " + std::to_string(k) +
                       " rows, got " + std::to_string(r));
    rows.push_back(parse_ints(n, "entries"));
  }
  if (next_line()) throw FrameError("line " + std::to_string(lineno) + ": trailing content");
  return GaleFrame(k, n, std::move(rows));
}

GaleFrame GaleFrame::parse_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FrameError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("rows"))
    throw FrameError("frame JSON must be an object with keys \"k\", \"n\", \"rows\"");
  if (!j["k"].is_number_integer() || !j["n"].is_number_integer())
    throw FrameError("\"k\" and \"n\" must be integers");
  int k = j["k"].get<int>();
  int n = j["n"].get<int>();
  if (!j["rows"].is_array() || static_cast<int>(j["rows"].size()) != k)
    throw FrameError("\"rows\" must be an array of " + std::to_string(k) + " rows");
  IntMatrix rows;
  for (int r = 0; r < k; ++r) {
    const auto& jr = j["rows"][r];
    if (!jr.is_array() || static_cast<int>(jr.size()) != n)
      throw FrameError("rows[" + std::to_string(r) + "] must be an array of " +
                       std::to_string(n) + " integers");
    std::vector<long long> row;
    for (int c = 0; c < n; ++c) {
      if (!jr[c].is_number_integer())
        throw FrameError("rows[" + std::to_string(r) + "][" + std::to_string(c) +
                         "] is not an integer");
      row.push_back(jr[c].get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return GaleFrame(k, n, std::move(rows));
}

GaleFrame GaleFrame::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrameError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

GaleFrame GaleFrame::permuted(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != n_)
    throw FrameError("ordering must list all " + std::to_string(n_) + " columns");
  std::vector<bool> seen(n_, false);
  for (int v : order) {
    if (v < 1 || v > n_ || seen[v - 1])
      throw FrameError("ordering is not a permutation of 1.." + std::to_string(n_));
    seen[v - 1] = true;
  }
  IntMatrix rows(k_, std::vector<long long>(n_));
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < n_; ++c) rows[r][c] = rows_[r][order[c] - 1];
  return GaleFrame(k_, n_, std::move(rows));
}

std::vector<std::vector<long long>> kernel_basis(const GaleFrame& frame) {
  return integer_kernel(frame.rows(), frame.n());
}

std::vector<SignedCircuit> signed_circuits(const GaleFrame& frame) {
  const int n = frame.n();
  const int k = frame.k();
  std::vector<SignedCircuit> out;
  std::vector<std::uint32_t> found_masks;
  for (int s = 1; s <= std::min(n, k + 1); ++s) {
    std::vector<int> sel;
    combinations_first(sel, s);
    do {
      std::uint32_t mask = 0;
      for (int i : sel) mask |= (1u << i);
      bool pruned = false;
      for (std::uint32_t f : found_masks)
        if ((f & mask) == f) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      // Nullity of the column submatrix; a surviving support with nullity 1
      // carries a full-support kernel vector (smaller supports were pruned).
      IntMatrix t(s, std::vector<long long>(k));
      for (int j = 0; j < s; ++j)
        for (int r = 0; r < k; ++r) t[j][r] = frame.rows()[r][sel[j]];
      Rref e = rref(t, k);
      if (e.rank == s) continue;
      auto kern = integer_kernel([&] {
        IntMatrix cols(k, std::vector<long long>(s));
        for (int r = 0; r < k; ++r)
          for (int j = 0; j < s; ++j) cols[r][j] = frame.rows()[r][sel[j]];
        return cols;
      }(), s);
      if (kern.size() != 1)
        throw FrameError("internal: support with nullity > 1 escaped pruning");
      SignedCircuit c;
      c.coeffs.assign(n, 0);
      for (int j = 0; j < s; ++j) {
        long long v = kern.front()[j];
        if (v < -1 || v > 1)
          throw FrameError("circuit on columns {" + join_indices([&] {
                             std::vector<int> cols1;
                             for (int i : sel) cols1.push_back(i + 1);
                             return cols1;
                           }()) +
                           "} has non-unit entry " + std::to_string(v) +
                           ": input is not unimodular");
        c.coeffs[sel[j]] = static_cast<int>(v);
      }
      c.support = sel;
      c.mask = mask;
      // integer_kernel already makes the first nonzero entry +1
      out.push_back(std::move(c));
      found_masks.push_back(mask);
    } while (combinations_next(sel, n));
  }
  return out;
}

GaleFrame dual_frame(const GaleFrame& frame) {
  auto kb = kernel_basis(frame);
  int rows = static_cast<int>(kb.size());
  return GaleFrame(rows, frame.n(), std::move(kb));
}

std::vector<int> kirwan_degree2_lines(const GaleFrame& frame) {
  std::uint32_t covered = 0;
  for (const auto& c : signed_circuits(frame)) covered |= c.mask;
  std::vector<int> out;
  for (int i = 0; i < frame.n(); ++i)
    if (!(covered & (1u << i))) out.push_back(i);
  return out;
}

bool FlatLattice::leq(int i, int j) const {
  return (flats[i].mask & flats[j].mask) == flats[i].mask;
}

FlatLattice flats(const GaleFrame& frame) {
  const int n = frame.n();
  auto closure = [&](std::uint32_t mask) {
    std::vector<int> cols;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) cols.push_back(i);
    int base = rank_of_columns(frame.rows(), cols);
    std::uint32_t closed = mask;
    for (int i = 0; i < n; ++i) {
      if (closed & (1u << i)) continue;
      std::vector<int> ext = cols;
      ext.push_back(i);
      if (rank_of_columns(frame.rows(), ext) == base) closed |= (1u << i);
    }
    return std::make_pair(closed, base);
  };

  std::vector<std::uint32_t> masks;
  std::vector<int> ranks;
  auto add = [&](std::uint32_t m, int r) {
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
      masks.push_back(m);
      ranks.push_back(r);
      return true;
    }
    return false;
  };
  auto [bottom_mask, bottom_rank] = closure(0);
  add(bottom_mask, bottom_rank);
  for (std::size_t head = 0; head < masks.size(); ++head) {
    std::uint32_t m = masks[head];
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) continue;
      auto [cm, cr] = closure(m | (1u << i));
      add(cm, cr);
    }
  }

  FlatLattice lat;
  std::vector<std::size_t> idx(masks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    int ca = __builtin_popcount(masks[a]), cb = __builtin_popcount(masks[b]);
    if (ca != cb) return ca < cb;
    return masks[a] < masks[b];
  });
  for (std::size_t t : idx) {
    Flat f;
    f.mask = masks[t];
    f.rank = ranks[t];
    for (int i = 0; i < n; ++i)
      if (f.mask & (1u << i)) f.columns.push_back(i);
    lat.flats.push_back(std::move(f));
  }
  std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  for (int i = 0; i < static_cast<int>(lat.flats.size()); ++i) {
    if (lat.flats[i].mask == bottom_mask) lat.bottom = i;
    if (lat.flats[i].mask == full) lat.top = i;
    for (int j = 0; j < static_cast<int>(lat.flats.size()); ++j)
      if (lat.leq(i, j)) lat.order.push_back({i, j});
  }
  return lat;
}

LocalFrame localize(const GaleFrame& frame, const Flat& flat) {
  // Reject non-closed inputs.
  std::vector<int> cols = flat.columns;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  {
    auto lat_closure_rank = rank_of_columns(frame.rows(), cols);
    for (int i = 0; i < frame.n(); ++i) {
      if (std::find(cols.begin(), cols.end(), i) != cols.end()) continue;
      std::vector<int> ext = cols;
      ext.push_back(i);
      if (rank_of_columns(frame.rows(), ext) == lat_closure_rank)
        throw FrameError("column set is not a flat: column " + std::to_string(i + 1) +
                         " lies in its span");
    }
  }
  LocalFrame lf;
  lf.columns = cols;
  lf.n_local = static_cast<int>(cols.size());
  lf.rank = rank_of_columns(frame.rows(), cols);
  std::vector<int> local_of(frame.n(), -1);
  for (int j = 0; j < lf.n_local; ++j) local_of[cols[j]] = j;
  std::uint32_t flat_mask = 0;
  for (int i : cols) flat_mask |= (1u << i);
  for (const auto& c : signed_circuits(frame)) {
    if ((c.mask & flat_mask) != c.mask) continue;
    SignedCircuit local;
    local.coeffs.assign(lf.n_local, 0);
    for (int i : c.support) {
      local.coeffs[local_of[i]] = c.coeffs[i];
      local.support.push_back(local_of[i]);
      local.mask |= (1u << local_of[i]);
    }
    lf.circuits.push_back(std::move(local));
  }
  for (int r = 0; r < frame.k(); ++r) {
    std::vector<int> form(lf.n_local);
    for (int j = 0; j < lf.n_local; ++j) form[j] = static_cast<int>(frame.rows()[r][cols[j]]);
    lf.base_forms.push_back(std::move(form));
  }
  return lf;
}

LocalFrame full_problem(const GaleFrame& frame) {
  Flat top;
  top.rank = frame.k();
  for (int i = 0; i < frame.n(); ++i) {
    top.columns.push_back(i);
    top.mask |= (1u << i);
  }
  return localize(frame, top);
}

}  // namespace hp0
