#include "core/magic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qf {

double operator_norm(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

CMatrix haar_unitary(int k, Rng& rng) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "haar_unitary: K must be >= 1");
  CMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) {
    Complex d = r(j, j);
    const double a = std::abs(d);
    Complex phase = a > 0 ? d / a : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

CVector ProjectionFrame::vector(int j) const {
  if (!source_unitary)
    throw Error(ErrorCode::invalid_argument, "frame has no source unitary");
  return source_unitary->col(j - 1);
}

double ProjectionFrame::defect() const {
  const int k = dimension;
  double worst = 0.0;
  CMatrix sum = CMatrix::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    const CMatrix& p = projections[a];
    worst = std::max(worst, (p * p - p).norm());
    worst = std::max(worst, (p.adjoint() - p).norm());
    worst = std::max(worst, std::abs(p.trace() - Complex(1.0, 0.0)));
    for (int b = a + 1; b < k; ++b)
      worst = std::max(worst, (p * projections[b]).norm());
    sum += p;
  }
  worst = std::max(worst, (sum - CMatrix::Identity(k, k)).norm());
  return worst;
}

ProjectionFrame frame_from_unitary(const CMatrix& u, double tol) {
  const int k = static_cast<int>(u.rows());
  if (u.cols() != k || k < 1)
    throw Error(ErrorCode::invalid_argument, "frame_from_unitary: square matrix required");
  if ((u.adjoint() * u - CMatrix::Identity(k, k)).norm() > tol)
    throw Error(ErrorCode::numeric, "frame_from_unitary: input is not unitary");
  ProjectionFrame frame;
  frame.dimension = k;
  frame.source_unitary = u;
  frame.projections.reserve(k);
  for (int j = 0; j < k; ++j) frame.projections.push_back(u.col(j) * u.col(j).adjoint());
  return frame;
}

ProjectionFrame standard_frame(int k) {
  return frame_from_unitary(CMatrix::Identity(k, k));
}

MagicValidation validate_magic(const NumericMagicUnitary& m, double tol) {
  MagicValidation report;
  const int n = m.size;
  const int k = m.fiber;
  const CMatrix id = CMatrix::Identity(k, k);

  auto note = [&](const std::string& kind, int i, int j, double value) {
    report.max_defect = std::max(report.max_defect, value);
    if (value > tol) report.defects.push_back({kind, i, j, value});
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const CMatrix& p = m.at(i, j);
      note("projection", i, j, (p * p - p).norm());
      note("self_adjoint", i, j, (p.adjoint() - p).norm());
    }
  }
  for (int i = 1; i <= n; ++i) {
    CMatrix row = CMatrix::Zero(k, k);
    CMatrix col = CMatrix::Zero(k, k);
    for (int j = 1; j <= n; ++j) {
      row += m.at(i, j);
      col += m.at(j, i);
    }
    note("row_sum", i, 0, (row - id).norm());
    note("col_sum", i, 0, (col - id).norm());
  }
  report.passed = report.defects.empty();
  return report;
}

NumericMagicUnitary assemble_block_magic(const std::vector<NumericMagicUnitary>& blocks) {
  if (blocks.empty())
    throw Error(ErrorCode::invalid_argument, "assemble_block_magic: no blocks");
  const int k = blocks.front().fiber;
  int n = 0;
  for (const auto& b : blocks) {
    if (b.fiber != k)
      throw Error(ErrorCode::invalid_argument, "assemble_block_magic: fiber mismatch");
    n += b.size;
  }
  NumericMagicUnitary out;
  out.size = n;
  out.fiber = k;
  out.entries.assign(n, std::vector<CMatrix>(n, CMatrix::Zero(k, k)));
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i)
      for (int j = 0; j < b.size; ++j) out.entries[offset + i][offset + j] = b.entries[i][j];
    offset += b.size;
  }
  return out;
}

OrbitDecomposition orbit_decomposition(const BMatrix& support) {
  const int n = static_cast<int>(support.rows());
  if (support.cols() != n || n < 1)
    throw Error(ErrorCode::invalid_argument, "orbit_decomposition: square pattern required");

  // Transitive closure of the reflexive-symmetric span of the support.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (support(i, j) != 0) parent[find(i)] = find(j);

  OrbitDecomposition d;
  std::vector<std::vector<int>> byroot(n);
  for (int i = 0; i < n; ++i) byroot[find(i)].push_back(i + 1);
  for (auto& blk : byroot)
    if (!blk.empty()) d.blocks.push_back(std::move(blk));

  d.epsilon = BMatrix::Zero(n, n);
  for (const auto& blk : d.blocks)
    for (int a : blk)
      for (int b : blk) d.epsilon(a - 1, b - 1) = 1;

  // Diagnostic: the raw support of a magic unitary should already be
  // reflexive, symmetric and transitive.
  d.support_was_equivalence = true;
  for (int i = 0; i < n && d.support_was_equivalence; ++i) {
    if (support(i, i) == 0) d.support_was_equivalence = false;
    for (int j = 0; j < n && d.support_was_equivalence; ++j)
      if ((support(i, j) != 0) != (d.epsilon(i, j) != 0)) d.support_was_equivalence = false;
  }
  return d;
}

OrbitDecomposition orbit_decomposition(std::span<const NumericMagicUnitary> samples,
                                       double threshold) {
  if (samples.empty())
    throw Error(ErrorCode::invalid_argument, "orbit_decomposition: empty sample set");
  const int n = samples.front().size;
  BMatrix support = BMatrix::Zero(n, n);
  for (const auto& sample : samples) {
    if (sample.size != n)
      throw Error(ErrorCode::invalid_argument, "orbit_decomposition: sample size mismatch");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (operator_norm(sample.at(i, j)) > threshold) support(i - 1, j - 1) = 1;
  }
  return orbit_decomposition(support);
}

std::optional<int> quasi_transitivity(const OrbitDecomposition& d) {
  if (d.blocks.empty()) return std::nullopt;
  const int k = static_cast<int>(d.blocks.front().size());
  for (const auto& blk : d.blocks)
    if (static_cast<int>(blk.size()) != k) return std::nullopt;
  return k;
}

BMatrix rank_pattern(const NumericMagicUnitary& m, double tol, bool expect_quasi_flat) {
  const int n = m.size;
  const int k = m.fiber;
  BMatrix r = BMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const CMatrix& p = m.at(i, j);
      if ((p * p - p).norm() > tol || (p.adjoint() - p).norm() > tol)
        throw Error(ErrorCode::numeric, "rank_pattern: entry is not a projection within tol");
      const CMatrix h = 0.5 * (p + p.adjoint());
      Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
      int rank = 0;
      for (int t = 0; t < k; ++t)
        if (es.eigenvalues()(t) > 0.5) ++rank;
      if (expect_quasi_flat && rank >= 2)
        throw Error(ErrorCode::numeric, "rank_pattern: entry of rank >= 2 in a quasi-flat model");
      r(i - 1, j - 1) = rank;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (r.row(i).sum() != k || r.col(i).sum() != k)
      throw Error(ErrorCode::numeric, "rank_pattern: row/column rank sums differ from fiber");
  }
  return r;
}

}  // namespace qf
