#include "braidkit/abelian.hpp"

#include <sstream>

namespace braidkit {

IntegerMatrix relation_matrix(const Presentation& p) {
  if (p.kind != Kind::group)
    throw MonoidPresentation("relation_matrix: monoid presentations not supported");
  IntegerMatrix m = IntegerMatrix::zero(static_cast<int>(p.relations.size()),
                                        p.alphabet->size());
  for (size_t r = 0; r < p.relations.size(); ++r) {
    for (const auto& l : p.relations[r].lhs.letters())
      m.at(static_cast<int>(r), l.gen) += l.exp;
    for (const auto& l : p.relations[r].rhs.letters())
      m.at(static_cast<int>(r), l.gen) -= l.exp;
  }
  return m;
}

namespace {

void swap_rows(IntegerMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// Smallest nonzero |entry| in the trailing submatrix, ties by lowest row
// then column.
bool find_pivot(const IntegerMatrix& m, int k, int& pr, int& pc) {
  bool found = false;
  mpz_class best;
  for (int i = k; i < m.rows; ++i)
    for (int j = k; j < m.cols; ++j) {
      if (m.at(i, j) == 0) continue;
      mpz_class a = abs(m.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(IntegerMatrix m) {
  int bound = std::min(m.rows, m.cols);
  std::vector<mpz_class> diag(static_cast<size_t>(bound), 0);
  for (int k = 0; k < bound; ++k) {
    int pr = 0, pc = 0;
    if (!find_pivot(m, k, pr, pc)) break;
    for (;;) {
      swap_rows(m, k, pr);
      swap_cols(m, k, pc);
      if (m.at(k, k) < 0)
        for (int j = k; j < m.cols; ++j) m.at(k, j) = -m.at(k, j);
      for (int i = k + 1; i < m.rows; ++i) {
        if (m.at(i, k) == 0) continue;
        mpz_class q = m.at(i, k) / m.at(k, k);
        for (int j = k; j < m.cols; ++j) m.at(i, j) -= q * m.at(k, j);
      }
      for (int j = k + 1; j < m.cols; ++j) {
        if (m.at(k, j) == 0) continue;
        mpz_class q = m.at(k, j) / m.at(k, k);
        for (int i = k; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, k);
      }
      bool clean = true;
      for (int i = k + 1; i < m.rows && clean; ++i)
        if (m.at(i, k) != 0) clean = false;
      for (int j = k + 1; j < m.cols && clean; ++j)
        if (m.at(k, j) != 0) clean = false;
      if (clean) {
        // pivot must divide everything below-right; if not, fold the
        // offending row in and reduce again
        int bad_row = -1;
        for (int i = k + 1; i < m.rows && bad_row < 0; ++i)
          for (int j = k + 1; j < m.cols; ++j)
            if (m.at(i, j) % m.at(k, k) != 0) {
              bad_row = i;
              break;
            }
        if (bad_row < 0) break;
        for (int j = k; j < m.cols; ++j) m.at(k, j) += m.at(bad_row, j);
      }
      if (!find_pivot(m, k, pr, pc)) break;
    }
    diag[static_cast<size_t>(k)] = m.at(k, k);
  }
  return diag;
}

InvariantFactors abelianization(const Presentation& p) {
  std::vector<mpz_class> diag = smith_normal_form(relation_matrix(p));
  InvariantFactors out;
  int rank = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d >= 2) out.torsion.push_back(d);
  }
  out.free_rank = p.alphabet->size() - rank;
  return out;
}

std::string to_string(const InvariantFactors& inv) {
  std::ostringstream os;
  os << "Z^" << inv.free_rank;
  for (const auto& d : inv.torsion) os << " x Z/" << d;
  return os.str();
}

}  // namespace braidkit
