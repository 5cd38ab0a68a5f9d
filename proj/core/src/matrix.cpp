#include "mutlab/matrix.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "mutlab/errors.hpp"

namespace mutlab {

Int parse_decimal(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("non-digit character in integer literal");
    }
  }
  return Int(text);
}

std::size_t IntMatrix::idx(int i, int j) const {
  return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      std::ostringstream msg;
      msg << "matrix is not square: row " << (i + 1) << " has " << rows[i].size()
          << " entries, expected " << n;
      throw NotSquare(msg.str());
    }
    for (int j = 0; j < n; ++j) m.at(i + 1, j + 1) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::of(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Int>> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return from_rows(converted);
}

std::vector<Int> IntMatrix::column(int j) const {
  std::vector<Int> out;
  out.reserve(n_);
  for (int i = 1; i <= n_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Int> IntMatrix::row(int i) const {
  std::vector<Int> out;
  out.reserve(n_);
  for (int j = 1; j <= n_; ++j) out.push_back(at(i, j));
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (int i = 1; i <= m.size(); ++i) {
    if (i > 1) out << ',';
    out << '[';
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out << ',';
      out << m.at(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string to_string(const std::vector<Int>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  const int n = lhs.size();
  IntMatrix out(n);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      const Int& l = lhs.at(i, k);
      if (l.is_zero()) continue;
      for (int j = 1; j <= n; ++j) {
        out.at(i, j) += l * rhs.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  const int n = m.size();
  IntMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Int determinant(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 1; k < n; ++k) {
    if (w.at(k, k).is_zero()) {
      int pivot = 0;
      for (int r = k + 1; r <= n; ++r) {
        if (!w.at(r, k).is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot == 0) return 0;
      for (int j = 1; j <= n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i <= n; ++i) {
      for (int j = k + 1; j <= n; ++j) {
        // Bareiss: division by the previous pivot is exact.
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n, n) : Int(-w.at(n, n));
}

namespace {

Int minor_determinant(const IntMatrix& m, int drop_row, int drop_col) {
  const int n = m.size();
  IntMatrix sub(n - 1);
  int r = 1;
  for (int i = 1; i <= n; ++i) {
    if (i == drop_row) continue;
    int c = 1;
    for (int j = 1; j <= n; ++j) {
      if (j == drop_col) continue;
      sub.at(r, c) = m.at(i, j);
      ++c;
    }
    ++r;
  }
  return determinant(sub);
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Int det = determinant(m);
  if (det != 1 && det != -1) throw NotUnimodular(to_decimal(det));
  const int n = m.size();
  IntMatrix inv(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      // adj(m)_{ij} = cofactor_{ji}; 1/det == det for det = +-1.
      Int cof = minor_determinant(m, j, i);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(i, j) = det * cof;
    }
  }
  return inv;
}

Int bilinear_value(const IntMatrix& m, const std::vector<Int>& v) {
  const int n = m.size();
  Int acc = 0;
  for (int i = 1; i <= n; ++i) {
    if (v[static_cast<std::size_t>(i - 1)].is_zero()) continue;
    Int row = 0;
    for (int j = 1; j <= n; ++j) row += m.at(i, j) * v[static_cast<std::size_t>(j - 1)];
    acc += v[static_cast<std::size_t>(i - 1)] * row;
  }
  return acc;
}

Int max_abs_entry(const IntMatrix& m) {
  Int best = 0;
  const int n = m.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Int mag = abs_of(m.at(i, j));
      if (mag > best) best = std::move(mag);
    }
  }
  return best;
}

}  // namespace mutlab
