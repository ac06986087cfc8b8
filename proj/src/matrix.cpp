#include "asymclust/matrix.hpp"

#include "asymclust/errors.hpp"

namespace asymclust {

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Value>>& rows) {
  const std::size_t n = rows.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(errc::dimension_mismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool SquareMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

}  // namespace asymclust
