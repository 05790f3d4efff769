#include "z2sl/linear.hpp"

#include <stdexcept>

namespace z2sl {

LinearResult row_reduce(std::vector<std::vector<Scalar>> rows, std::size_t ncols) {
  LinearResult r;
  r.values.assign(ncols, std::nullopt);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
    std::size_t p = row;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[row]);
    Scalar inv = rows[row][col].inverse();
    for (auto& x : rows[row]) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == row || rows[q][col].is_zero()) continue;
      Scalar f = rows[q][col];
      for (std::size_t c = col; c <= ncols; ++c) rows[q][c] -= f * rows[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  r.rank = pivots.size();
  for (std::size_t q = row; q < rows.size(); ++q)
    if (!rows[q][ncols].is_zero()) r.consistent = false;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    bool free_dep = false;
    for (std::size_t c = 0; c < ncols; ++c)
      if (c != pivots[k] && !rows[k][c].is_zero()) free_dep = true;
    if (!free_dep) r.values[pivots[k]] = rows[k][ncols];
  }
  return r;
}

ParamSolution solve_affine(const std::vector<GradedPoly>& identities, const std::vector<std::string>& unknowns) {
  std::map<std::string, std::size_t> col;
  for (std::size_t k = 0; k < unknowns.size(); ++k) col[unknowns[k]] = k;
  std::map<std::pair<std::size_t, Monomial>, std::vector<Scalar>> rows;
  for (std::size_t e = 0; e < identities.size(); ++e)
    for (const auto& [m, c] : identities[e].terms()) {
      Monomial rest;
      std::optional<std::size_t> var;
      for (const auto& f : m) {
        if (f.gen.kind == GenKind::Param && col.count(f.gen.param->name)) {
          if (var || f.exp != 1) throw std::invalid_argument("solve_affine: identity is not affine in the unknowns");
          var = col.at(f.gen.param->name);
        } else {
          rest.push_back(f);
        }
      }
      auto& r = rows[{e, rest}];
      if (r.empty()) r.assign(unknowns.size() + 1, Scalar());
      if (var) r[*var] += c;
      else r[unknowns.size()] -= c;
    }
  std::vector<std::vector<Scalar>> mat;
  for (auto& [k, r] : rows) mat.push_back(std::move(r));
  ParamSolution out;
  out.equations = mat.size();
  LinearResult lr = row_reduce(std::move(mat), unknowns.size());
  out.consistent = lr.consistent;
  out.unique = lr.consistent && lr.rank == unknowns.size();
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if (lr.values[k]) out.values[unknowns[k]] = *lr.values[k];
  return out;
}

}  // namespace z2sl
