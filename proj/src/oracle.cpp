#include <algorithm>
#include <unordered_map>
#include <vector>

#include "descent/errors.hpp"
#include "descent/ideals.hpp"

namespace descent {

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (column, coeff)

// Exponents stay below 256 because the cap is below 256.
std::uint64_t pack(const Monomial& m) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < m.size(); ++i) key |= std::uint64_t{m[i]} << (8 * i);
  return key;
}

// Monomials of degree < D, ordered by ascending degree.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, unsigned D) {
    Monomial m(nvars);
    for (unsigned d = 0; d < D; ++d) {
      first_of_degree_.push_back(monos_.size());
      emit(m, 0, d);
    }
    first_of_degree_.push_back(monos_.size());
    for (std::uint32_t i = 0; i < monos_.size(); ++i) index_.emplace(pack(monos_[i]), i);
  }

  const std::vector<Monomial>& monomials() const { return monos_; }
  std::uint32_t index(const Monomial& m) const { return index_.at(pack(m)); }
  /// Number of monomials of degree < d.
  std::size_t count_below(unsigned d) const { return first_of_degree_[d]; }
  unsigned degree_of(std::uint32_t col) const { return monos_[col].degree(); }

 private:
  void emit(Monomial& m, std::size_t var, unsigned remaining) {
    if (var + 1 == m.size()) {
      m.set(var, remaining);
      monos_.push_back(m);
      m.set(var, 0);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      m.set(var, e);
      emit(m, var + 1, remaining - e);
    }
    m.set(var, 0);
  }

  std::vector<Monomial> monos_;
  std::vector<std::size_t> first_of_degree_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// row -= c * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, std::uint32_t c, const SparseRow& pivot, unsigned p) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  const std::uint32_t nc = fp::neg(c, p);
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, fp::mul(b->second, nc, p));
      ++b;
    } else {
      std::uint32_t v = fp::add(a->second, fp::mul(b->second, nc, p), p);
      if (v != 0) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

// Echelon form over F_p where each pivot is the lowest column of its row.
// Returns the sorted list of pivot columns.
std::vector<std::uint32_t> pivot_columns(const IdealPresentation& I, const MonomialIndex& idx,
                                         unsigned D) {
  const unsigned p = I.ring()->p();
  std::unordered_map<std::uint32_t, SparseRow> pivots;
  const auto& monos = idx.monomials();
  for (const auto& m : monos) {
    for (const auto& g : I.generators()) {
      if (g.is_zero() || m.degree() + g.order() >= D) continue;
      SparseRow row;
      for (const auto& t : g.terms()) {
        if (t.mono.degree() + m.degree() >= D) continue;
        row.emplace_back(idx.index(t.mono * m), t.coeff);
      }
      std::sort(row.begin(), row.end());
      while (!row.empty()) {
        auto it = pivots.find(row.front().first);
        if (it == pivots.end()) {
          const std::uint32_t inv = fp::inv(row.front().second, p);
          for (auto& e : row) e.second = fp::mul(e.second, inv, p);
          pivots.emplace(row.front().first, std::move(row));
          break;
        }
        row = axpy(row, row.front().second, it->second, p);
      }
    }
  }
  std::vector<std::uint32_t> cols;
  cols.reserve(pivots.size());
  for (const auto& kv : pivots) cols.push_back(kv.first);
  std::sort(cols.begin(), cols.end());
  return cols;
}

}  // namespace

OracleResult truncation_length_oracle(const IdealPresentation& I, unsigned degree_cap) {
  if (degree_cap == 0 || degree_cap > 255) {
    throw UsageError("oracle degree cap must lie in [1, 255]");
  }
  const std::size_t n = I.ring()->nvars();
  unsigned D = std::min(8u, degree_cap);
  while (true) {
    MonomialIndex idx(n, D);
    const auto cols = pivot_columns(I, idx, D);
    // c(d) = #monomials of degree < d minus #pivots of degree < d.
    std::vector<std::uint64_t> c(D + 1, 0);
    std::size_t k = 0;
    for (unsigned d = 1; d <= D; ++d) {
      while (k < cols.size() && idx.degree_of(cols[k]) < d) ++k;
      c[d] = idx.count_below(d) - k;
      if (c[d] == c[d - 1]) return OracleResult{c[d], D};
    }
    if (D == degree_cap) return OracleResult{std::nullopt, D};
    D = std::min(2 * D, degree_cap);
  }
}

}  // namespace descent
