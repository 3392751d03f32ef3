#include "dsturm/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "dsturm/error.hpp"

namespace dsturm {
namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajor> view(const Matrix& m) {
  return Eigen::Map<const RowMajor>(m.data.data(), m.rows, m.cols);
}

void require_square(const Matrix& m) {
  if (m.rows != m.cols || m.rows == 0) throw InputError("matrix must be square and non-empty");
}

}  // namespace

double determinant(const Matrix& m) {
  require_square(m);
  return view(m).partialPivLu().determinant();
}

std::vector<double> solve(const Matrix& m, const std::vector<double>& b) {
  require_square(m);
  if (static_cast<int>(b.size()) != m.rows) throw InputError("right-hand side has wrong length");
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(view(m));
  if (lu.determinant() == 0.0) throw NumericalError("singular linear system");
  const Eigen::VectorXd x = lu.solve(Eigen::Map<const Eigen::VectorXd>(b.data(), m.rows));
  std::vector<double> out(x.data(), x.data() + x.size());
  for (double v : out) {
    if (!std::isfinite(v)) throw NumericalError("linear solve produced a non-finite value");
  }
  return out;
}

int numerical_rank(const Matrix& m, double rel_tol) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(view(m));
  lu.setThreshold(rel_tol);
  return static_cast<int>(lu.rank());
}

double hadamard_bound(const Matrix& m) {
  require_square(m);
  const auto a = view(m);
  double rows = 1.0;
  double cols = 1.0;
  for (int i = 0; i < m.rows; ++i) {
    rows *= a.row(i).norm();
    cols *= a.col(i).norm();
  }
  return std::min(rows, cols);
}

}  // namespace dsturm
