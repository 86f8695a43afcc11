#include "nefcert/config.hpp"

#include <algorithm>
#include <set>

#include "nefcert/error.hpp"

namespace nefcert {
namespace {

bool witness_holds(const IntMatrix& m, const RatVector& c) {
  if (c.size() != m.rows()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += Rat(m(i, j)) * c[i];
    if (s != 1) return false;
  }
  return true;
}

}  // namespace

Configuration::Configuration(IntMatrix matrix, RatVector witness)
    : matrix_(std::move(matrix)), witness_(std::move(witness)) {
  if (matrix_.cols() == 0) throw Error(ErrorCode::kEmptyInput, "configuration without columns");
  if (has_repeated_columns(matrix_)) throw Error(ErrorCode::kRepeatedColumns, "columns must be distinct");
  if (!witness_holds(matrix_, witness_))
    throw Error(ErrorCode::kNotAConfiguration, "witness does not satisfy <a_i, c> = 1");
}

bool has_repeated_columns(const IntMatrix& m) {
  std::set<IntVector> seen;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!seen.insert(m.column(j)).second) return true;
  return false;
}

Configuration as_configuration(const IntMatrix& m) {
  if (m.cols() == 0) throw Error(ErrorCode::kEmptyInput, "configuration without columns");
  if (has_repeated_columns(m)) throw Error(ErrorCode::kRepeatedColumns, "columns must be distinct");
  auto c = solve_rational(m, RatVector(m.cols(), Rat(1)));
  if (!c) throw Error(ErrorCode::kNotAConfiguration, "A^T c = 1 is inconsistent");
  return Configuration(m, std::move(*c));
}

std::vector<std::string> CentrallySymmetric::variable_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n(); ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n(); ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  return names;
}

CentrallySymmetric centrally_symmetric(const Configuration& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.size();
  IntMatrix full(d + 1, 2 * n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      full(i, j) = a.matrix()(i, j);
      full(i, n + j) = -a.matrix()(i, j);
    }
    full(d, j) = 1;
    full(d, n + j) = 1;
  }
  full(d, 2 * n) = 1;
  return CentrallySymmetric{a, std::move(full)};
}

IntMatrix append_origin(const Configuration& a) {
  IntMatrix m(a.dim(), a.size() + 1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a.matrix()(i, j);
  return m;
}

IntMatrix homogenize(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "no points to homogenize");
  const std::size_t d = points.front().size();
  return IntMatrix::from_columns(points, d).with_ones_row();
}

}  // namespace nefcert
