#include "groupwalk/matrix.hpp"

#include <string>

#include "groupwalk/linalg.hpp"
#include "groupwalk/omp_compat.hpp"

namespace groupwalk {

bool BinaryMatrix::is_permutation() const {
  for (int i = 0; i < n_; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < n_; ++j) {
      row += at(i, j);
      col += at(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool BinaryMatrix::all_ones() const {
  for (auto v : e_) {
    if (v != 1) return false;
  }
  return true;
}

StochasticMatrix StochasticMatrix::from_entries(int n, std::vector<Rational> entries) {
  if (n < 1 || entries.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidParameterError("entry vector is not n x n");
  }
  for (const auto& e : entries) {
    if (e.sign() < 0) throw InvalidParameterError("negative matrix entry");
  }
  for (int i = 0; i < n; ++i) {
    Rational row(0), col(0);
    for (int j = 0; j < n; ++j) {
      row += entries[static_cast<std::size_t>(i) * n + j];
      col += entries[static_cast<std::size_t>(j) * n + i];
    }
    if (row != Rational(1)) {
      throw InvalidParameterError("row " + std::to_string(i + 1) + " sums to " + row.str());
    }
    if (col != Rational(1)) {
      throw InvalidParameterError("column " + std::to_string(i + 1) + " sums to " + col.str());
    }
  }
  return StochasticMatrix(n, std::move(entries));
}

StochasticMatrix StochasticMatrix::identity(int n) {
  std::vector<Rational> e(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = Rational(1);
  return StochasticMatrix(n, std::move(e));
}

StochasticMatrix StochasticMatrix::uniform_smoother(int n) {
  std::vector<Rational> e(static_cast<std::size_t>(n) * n, Rational(1, n));
  return StochasticMatrix(n, std::move(e));
}

std::size_t StochasticMatrix::max_entry_bits() const {
  std::size_t bits = 0;
  for (const auto& e : e_) bits = std::max(bits, e.bit_size());
  return bits;
}

BinaryMatrix permutation_matrix(const Permutation& sigma) {
  if (!sigma.is_bijection()) throw InvalidParameterError("not a permutation");
  const int n = sigma.size();
  BinaryMatrix m(n);
  for (int j = 0; j < n; ++j) m.set(sigma(j), j, 1);
  return m;
}

StochasticMatrix convolution_matrix(const GroupDistribution& x) {
  const FiniteGroup& g = x.group();
  const int n = g.order();
  // Entry (i, j) = p_{i * j^-1}: the unique sigma_k with sigma_k(j) = i
  // has k = i * j^-1.
  std::vector<Rational> e(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const int jinv = g.inverse(j);
    for (int i = 0; i < n; ++i) {
      e[static_cast<std::size_t>(i) * n + j] = x.prob(g.table().at(i, jinv));
    }
  }
  return StochasticMatrix::from_entries(n, std::move(e));
}

StochasticMatrix matrix_multiply(const StochasticMatrix& a, const StochasticMatrix& b) {
  if (a.order() != b.order()) throw InvalidParameterError("matrix order mismatch");
  const int n = a.order();
  std::vector<Rational> e(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(static) if (n >= 16)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) {
        if (a.at(i, k).is_zero()) continue;
        acc += a.at(i, k) * b.at(k, j);
      }
      e[static_cast<std::size_t>(i) * n + j] = std::move(acc);
    }
  }
  return StochasticMatrix::from_entries(n, std::move(e));
}

namespace reference {

StochasticMatrix convolution_matrix(const GroupDistribution& x) {
  const FiniteGroup& g = x.group();
  const int n = g.order();
  std::vector<Rational> e(static_cast<std::size_t>(n) * n, Rational(0));
  for (int k = 0; k < n; ++k) {
    const BinaryMatrix p = permutation_matrix(g.left_translation(k));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (p.at(i, j)) e[static_cast<std::size_t>(i) * n + j] += x.prob(k);
      }
    }
  }
  return StochasticMatrix::from_entries(n, std::move(e));
}

StochasticMatrix matrix_multiply(const StochasticMatrix& a, const StochasticMatrix& b) {
  if (a.order() != b.order()) throw InvalidParameterError("matrix order mismatch");
  const int n = a.order();
  std::vector<Rational> e(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      e[static_cast<std::size_t>(i) * n + j] = std::move(acc);
    }
  }
  return StochasticMatrix::from_entries(n, std::move(e));
}

}  // namespace reference

HomomorphismCheck check_homomorphism(const GroupDistribution& x, const GroupDistribution& y) {
  const StochasticMatrix lhs = convolution_matrix(convolve(x, y));
  const StochasticMatrix rhs = matrix_multiply(convolution_matrix(x), convolution_matrix(y));
  const int n = lhs.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (lhs.at(i, j) != rhs.at(i, j)) {
        return {false, HomomorphismWitness{i, j, lhs.at(i, j), rhs.at(i, j)}};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Rational> raw_convolution_matrix(const CayleyTable& t,
                                             const std::vector<Rational>& probs) {
  const int n = t.n;
  std::vector<Rational> e(static_cast<std::size_t>(n) * n, Rational(0));
  for (int k = 0; k < n; ++k) {
    // P_{row k} has its column-j one at i = t(k, j).
    for (int j = 0; j < n; ++j) {
      e[static_cast<std::size_t>(t.at(k, j)) * n + j] += probs[k];
    }
  }
  return e;
}

std::vector<Rational> raw_convolve(const CayleyTable& t, const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) {
  const int n = t.n;
  std::vector<Rational> r(n, Rational(0));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      r[t.at(k, l)] += x[k] * y[l];
    }
  }
  return r;
}

HomomorphismCheck raw_homomorphism_check(const CayleyTable& t, const std::vector<Rational>& x,
                                         const std::vector<Rational>& y) {
  const int n = t.n;
  const std::vector<Rational> lhs = raw_convolution_matrix(t, raw_convolve(t, x, y));
  const std::vector<Rational> cx = raw_convolution_matrix(t, x);
  const std::vector<Rational> cy = raw_convolution_matrix(t, y);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) {
        acc += cx[static_cast<std::size_t>(i) * n + k] * cy[static_cast<std::size_t>(k) * n + j];
      }
      if (acc != lhs[static_cast<std::size_t>(i) * n + j]) {
        return {false,
                HomomorphismWitness{i, j, lhs[static_cast<std::size_t>(i) * n + j], acc}};
      }
    }
  }
  return {true, std::nullopt};
}

IndexMatrix unique_k_structure(const CayleyTable& t) {
  const int n = t.n;
  IndexMatrix km;
  km.n = n;
  km.v.assign(static_cast<std::size_t>(n) * n, -1);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const int i = t.at(k, j);  // sigma_k(j)
      auto& cell = km.v[static_cast<std::size_t>(i) * n + j];
      if (cell >= 0) {
        throw StructureError("cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") is hit by sigma_" + std::to_string(cell + 1) + " and sigma_" +
                             std::to_string(k + 1));
      }
      cell = k;
    }
  }
  for (std::size_t c = 0; c < km.v.size(); ++c) {
    if (km.v[c] < 0) {
      throw StructureError("cell (" + std::to_string(c / n + 1) + "," +
                           std::to_string(c % n + 1) + ") is hit by no sigma_k");
    }
  }
  return km;
}

IndexMatrix unique_k_structure(const FiniteGroup& g) { return unique_k_structure(g.table()); }

bool check_linear_independence(const FiniteGroup& g) {
  const int n = g.order();
  // Route 1: the unique-k fact gives the P_{sigma_k} pairwise disjoint
  // 0/1 supports, hence independence.
  bool disjoint_supports = false;
  try {
    unique_k_structure(g);
    disjoint_supports = true;
  } catch (const StructureError&) {
    disjoint_supports = false;
  }
  // Route 2: exact rank of the n^2 x n matrix whose column k is
  // vec(P_{sigma_k}).
  std::vector<Rational> stacked(static_cast<std::size_t>(n) * n * n, Rational(0));
  for (int k = 0; k < n; ++k) {
    const Permutation sigma = g.left_translation(k);
    for (int j = 0; j < n; ++j) {
      const std::size_t row = static_cast<std::size_t>(sigma(j)) * n + j;
      stacked[row * n + k] = Rational(1);
    }
  }
  const int rank = rational_rank(n * n, n, std::move(stacked));
  return disjoint_supports && rank == n;
}

BinaryMatrix sum_permutation_matrices(const CayleyTable& t) {
  const int n = t.n;
  std::vector<int> sums(static_cast<std::size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      ++sums[static_cast<std::size_t>(t.at(k, j)) * n + j];
    }
  }
  BinaryMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int s = sums[static_cast<std::size_t>(i) * n + j];
      if (s != 1) {
        throw StructureError("sum of permutation matrices is " + std::to_string(s) +
                             " at cell (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "), expected 1");
      }
      m.set(i, j, 1);
    }
  }
  return m;
}

BinaryMatrix sum_permutation_matrices(const FiniteGroup& g) {
  return sum_permutation_matrices(g.table());
}

GroupDistribution recover_distribution(const StochasticMatrix& m, const FiniteGroup& g) {
  if (m.order() != g.order()) throw InvalidParameterError("matrix order differs from group order");
  const int n = g.order();
  const IndexMatrix km = unique_k_structure(g);
  std::vector<Rational> probs(n);
  std::vector<bool> assigned(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = km.at(i, j);
      if (!assigned[k]) {
        probs[k] = m.at(i, j);
        assigned[k] = true;
      } else if (probs[k] != m.at(i, j)) {
        throw StructureError("matrix is not in the span of the permutation matrices: cells for k=" +
                             std::to_string(k + 1) + " disagree at (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return GroupDistribution::from_probs(g, std::move(probs));
}

}  // namespace groupwalk
