#include "znx/integer_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "znx/errors.hpp"

namespace znx {

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw InvalidInput("matrix entry count does not match dimensions");
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntegerMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntegerMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const BigInt& s = (*this)(src, c);
        if (s != 0) (*this)(dst, c) += factor * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const BigInt& s = (*this)(r, src);
        if (s != 0) (*this)(r, dst) += factor * s;
    }
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) out(i, j) += x * b(k, j);
        }
    return out;
}

namespace {

// Bareiss elimination in place; returns the rank and (for square input) the
// determinant up to the sign bookkeeping done by the caller.
std::size_t bareiss(IntegerMatrix& a, int* sign = nullptr) {
    std::size_t rank = 0;
    BigInt prev = 1;
    int s = 1;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank) {
            a.swap_rows(pivot, rank);
            s = -s;
        }
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            for (std::size_t k = c + 1; k < a.cols(); ++k) {
                BigInt v = a(rank, c) * a(r, k) - a(r, c) * a(rank, k);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(r, k) = std::move(v);
            }
            a(r, c) = 0;
        }
        prev = a(rank, c);
        ++rank;
    }
    if (sign) *sign = s;
    return rank;
}

}  // namespace

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    IntegerMatrix a = m;
    int sign = 1;
    const std::size_t r = bareiss(a, &sign);
    if (r < m.rows()) return 0;
    // With full rank and no skipped columns, the last pivot is the determinant.
    return sign * a(m.rows() - 1, m.cols() - 1);
}

std::size_t rank(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    return bareiss(a);
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
    if (rows.empty()) return 0;
    return rank(IntegerMatrix::from_rows(rows, cols));
}

namespace {

struct Transforms {
    IntegerMatrix left, left_inv, right, right_inv;
};

// Smith reduction in place. When `tf` is null no transforms are tracked.
std::size_t smith_in_place(IntegerMatrix& a, Transforms* tf) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t limit = std::min(rows, cols);

    auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        a.add_row_multiple(dst, src, f);
        if (tf) {
            tf->left.add_row_multiple(dst, src, f);
            tf->left_inv.add_col_multiple(src, dst, -f);
        }
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        a.add_col_multiple(dst, src, f);
        if (tf) {
            tf->right.add_col_multiple(dst, src, f);
            tf->right_inv.add_row_multiple(src, dst, -f);
        }
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        if (tf) {
            tf->left.swap_rows(x, y);
            tf->left_inv.swap_cols(x, y);
        }
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        if (tf) {
            tf->right.swap_cols(x, y);
            tf->right_inv.swap_rows(x, y);
        }
    };
    auto row_neg = [&](std::size_t x) {
        a.negate_row(x);
        if (tf) {
            tf->left.negate_row(x);
            tf->left_inv.negate_col(x);
        }
    };

    std::size_t t = 0;
    for (; t < limit; ++t) {
        // Pivot of minimal absolute value in the trailing block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                const BigInt& v = a(r, c);
                if (v == 0) continue;
                if (pr == rows || cmpabs(v, a(pr, pc)) < 0) {
                    pr = r;
                    pc = c;
                    if (abs(v) == 1) goto found;
                }
            }
    found:
        if (pr == rows) break;
        row_swap(t, pr);
        col_swap(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_add(r, t, -q);
                if (a(r, t) != 0) dirty = true;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
                col_add(c, t, -q);
                if (a(t, c) != 0) dirty = true;
            }
            if (dirty) {
                // A smaller remainder appeared in row or column t: move it to the pivot.
                std::size_t br = t, bc = t;
                for (std::size_t r = t + 1; r < rows; ++r)
                    if (a(r, t) != 0 && cmpabs(a(r, t), a(br, bc)) < 0) br = r, bc = t;
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a(t, c) != 0 && cmpabs(a(t, c), a(br, bc)) < 0) br = t, bc = c;
                row_swap(t, br);
                col_swap(t, bc);
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing block.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = r;
                        break;
                    }
            if (bad == rows) break;
            row_add(t, bad, 1);
        }
        if (a(t, t) < 0) row_neg(t);
    }
    return t;
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    Transforms tf{IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.rows()),
                  IntegerMatrix::identity(m.cols()), IntegerMatrix::identity(m.cols())};
    SnfResult out;
    out.rank = smith_in_place(a, &tf);
    const std::size_t limit = std::min(m.rows(), m.cols());
    out.diagonal.resize(limit);
    for (std::size_t i = 0; i < limit; ++i) out.diagonal[i] = a(i, i);
    out.left = std::move(tf.left);
    out.right = std::move(tf.right);
    out.left_inverse = std::move(tf.left_inv);
    out.right_inverse = std::move(tf.right_inv);
    return out;
}

std::vector<BigInt> invariant_factors(const IntegerMatrix& m) {
    std::vector<SparseEntry> entries;
    bool small = true;
    for (std::size_t r = 0; r < m.rows() && small; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 0) continue;
            if (!m(r, c).fits_slong_p()) {
                small = false;
                break;
            }
            entries.push_back({r, c, m(r, c).get_si()});
        }
    if (!small) {
        IntegerMatrix a = m;
        const std::size_t r = smith_in_place(a, nullptr);
        std::vector<BigInt> out;
        for (std::size_t i = 0; i < r; ++i) out.push_back(a(i, i));
        return out;
    }
    return invariant_factors_sparse(m.rows(), m.cols(), entries);
}

std::vector<BigInt> invariant_factors_sparse(std::size_t rows, std::size_t cols,
                                             std::span<const SparseEntry> entries) {
    std::vector<std::map<std::size_t, BigInt>> row_data(rows);
    std::vector<std::set<std::size_t>> col_rows(cols);
    for (const auto& e : entries) {
        if (e.row >= rows || e.col >= cols) throw InvalidInput("sparse entry out of range");
        if (e.value == 0) continue;
        BigInt& slot = row_data[e.row][e.col];
        slot += e.value;
        if (slot == 0) {
            row_data[e.row].erase(e.col);
            col_rows[e.col].erase(e.row);
        } else {
            col_rows[e.col].insert(e.row);
        }
    }

    std::size_t units = 0;
    for (;;) {
        // Unit pivot with the smallest Markowitz cost.
        std::size_t best_r = rows, best_c = cols, best_cost = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& rd = row_data[r];
            if (rd.empty()) continue;
            for (const auto& [c, v] : rd) {
                if (abs(v) != 1) continue;
                const std::size_t cost = (rd.size() - 1) * (col_rows[c].size() - 1);
                if (best_r == rows || cost < best_cost) {
                    best_r = r;
                    best_c = c;
                    best_cost = cost;
                }
            }
            if (best_r != rows && best_cost == 0) break;
        }
        if (best_r == rows) break;

        const BigInt pivot = row_data[best_r].at(best_c);
        const auto pivot_row = row_data[best_r];
        const std::vector<std::size_t> others(col_rows[best_c].begin(), col_rows[best_c].end());
        for (std::size_t r : others) {
            if (r == best_r) continue;
            const BigInt f = row_data[r].at(best_c) * pivot;  // pivot is +-1
            for (const auto& [c, v] : pivot_row) {
                BigInt& slot = row_data[r][c];
                slot -= f * v;
                if (slot == 0) {
                    row_data[r].erase(c);
                    col_rows[c].erase(r);
                } else {
                    col_rows[c].insert(r);
                }
            }
        }
        for (const auto& [c, v] : pivot_row) col_rows[c].erase(best_r);
        row_data[best_r].clear();
        ++units;
    }

    // Whatever is left has no unit entries; finish densely.
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < rows; ++r)
        if (!row_data[r].empty()) live_rows.push_back(r);
    for (std::size_t c = 0; c < cols; ++c)
        if (!col_rows[c].empty()) live_cols.push_back(c);

    std::vector<BigInt> out(units, BigInt(1));
    if (!live_rows.empty()) {
        std::map<std::size_t, std::size_t> col_index;
        for (std::size_t i = 0; i < live_cols.size(); ++i) col_index[live_cols[i]] = i;
        IntegerMatrix dense(live_rows.size(), live_cols.size());
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : row_data[live_rows[i]]) dense(i, col_index[c]) = v;
        const std::size_t r = smith_in_place(dense, nullptr);
        for (std::size_t i = 0; i < r; ++i) out.push_back(dense(i, i));
    }
    return out;
}

RowReduction row_reduce(const IntegerMatrix& m) {
    RowReduction out{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.rows()), 0};
    IntegerMatrix& a = out.reduced;
    auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        a.add_row_multiple(dst, src, f);
        out.transform.add_row_multiple(dst, src, f);
        out.transform_inverse.add_col_multiple(src, dst, -f);
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        out.transform.swap_rows(x, y);
        out.transform_inverse.swap_cols(x, y);
    };

    std::size_t p = 0;
    for (std::size_t c = 0; c < a.cols() && p < a.rows(); ++c) {
        for (;;) {
            std::size_t best = a.rows();
            for (std::size_t r = p; r < a.rows(); ++r)
                if (a(r, c) != 0 && (best == a.rows() || cmpabs(a(r, c), a(best, c)) < 0)) best = r;
            if (best == a.rows()) break;
            row_swap(p, best);
            bool clear = true;
            for (std::size_t r = p + 1; r < a.rows(); ++r) {
                if (a(r, c) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), a(p, c).get_mpz_t());
                row_add(r, p, -q);
                if (a(r, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (a(p, c) == 0) continue;
        if (a(p, c) < 0) {
            a.negate_row(p);
            out.transform.negate_row(p);
            out.transform_inverse.negate_col(p);
        }
        ++p;
    }
    out.rank = p;
    return out;
}

std::vector<IntVector> canonical_row_space(const std::vector<IntVector>& rows, std::size_t cols) {
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) {
        if (r.size() != cols) throw InvalidInput("ragged rows");
        a.emplace_back(r.begin(), r.end());
    }
    std::size_t p = 0;
    for (std::size_t c = 0; c < cols && p < a.size(); ++c) {
        std::size_t piv = p;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[p], a[piv]);
        const Rational lead = a[p][c];
        for (auto& x : a[p]) x /= lead;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == p || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[p][k];
        }
        ++p;
    }
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < p; ++r) {
        BigInt den = 1;
        for (const auto& x : a[r]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        IntVector v(cols);
        BigInt g = 0;
        for (std::size_t k = 0; k < cols; ++k) {
            Rational scaled = a[r][k] * den;
            v[k] = scaled.get_num();
            g = gcd(g, v[k]);
        }
        if (g > 1)
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        out.push_back(std::move(v));
    }
    return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Bezout extended_gcd(const BigInt& a, const BigInt& b) {
    Bezout out;
    mpz_gcdext(out.g.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

NotFreeAbelianRank::NotFreeAbelianRank(std::vector<mpz_class> torsion)
    : Error([&] {
          std::string s = "abelianization has torsion:";
          for (const auto& t : torsion) s += " Z/" + t.get_str();
          return s;
      }()),
      torsion_(std::move(torsion)) {}

}  // namespace znx
