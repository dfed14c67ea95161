/*
 * Copyright 2026 The elastodg Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#include "sparse.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace elastodg {

int CsrMatrix::find(int row, int col) const
{
    const auto first = col_idx.begin() + row_ptr[row];
    const auto last = col_idx.begin() + row_ptr[row + 1];
    const auto it = std::lower_bound(first, last, col);
    if (it == last || *it != col) return -1;
    return static_cast<int>(it - col_idx.begin());
}

void CsrMatrix::multiply(std::span<const Complex> x, std::span<Complex> y) const
{
    if (static_cast<int>(x.size()) != cols || static_cast<int>(y.size()) != rows)
        throw std::invalid_argument("dimension mismatch in sparse mat-vec");
    for (int r = 0; r < rows; ++r) {
        Complex s = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += values[k] * x[col_idx[k]];
        y[r] = s;
    }
}

std::vector<Complex> CsrMatrix::multiply(std::span<const Complex> x) const
{
    std::vector<Complex> y(rows);
    multiply(x, y);
    return y;
}

Complex CsrMatrix::form(std::span<const Complex> v, std::span<const Complex> w) const
{
    const auto aw = multiply(w);
    Complex s = 0.0;
    for (int r = 0; r < rows; ++r) s += std::conj(v[r]) * aw[r];
    return s;
}

CsrMatrix CsrMatrix::adjoint() const
{
    CsrMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.row_ptr.assign(cols + 1, 0);
    for (int c : col_idx) ++t.row_ptr[c + 1];
    for (int r = 0; r < cols; ++r) t.row_ptr[r + 1] += t.row_ptr[r];
    t.col_idx.resize(col_idx.size());
    t.values.resize(values.size());
    std::vector<int> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            const int dst = next[col_idx[k]]++;
            t.col_idx[dst] = r;
            t.values[dst] = std::conj(values[k]);
        }
    return t;
}

void CsrMatrix::add_block(std::span<const int> row_dofs, std::span<const int> col_dofs, std::span<const Complex> local)
{
    const size_t nc = col_dofs.size();
    for (size_t r = 0; r < row_dofs.size(); ++r) {
        for (size_t c = 0; c < nc; ++c) {
            const Complex v = local[r * nc + c];
            if (v == Complex(0.0)) continue;
            const int pos = find(row_dofs[r], col_dofs[c]);
            if (pos < 0) throw std::logic_error("assembly target outside the sparsity pattern");
            values[pos] += v;
        }
    }
}

void CsrMatrix::write_matrix_market(std::ostream& os) const
{
    os << "%%MatrixMarket matrix coordinate complex general\n";
    os << rows << ' ' << cols << ' ' << nnz() << '\n';
    os.precision(17);
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            os << r + 1 << ' ' << col_idx[k] + 1 << ' ' << values[k].real() << ' ' << values[k].imag() << '\n';
}

BlockPattern::BlockPattern(int num_nodes, int block) : block_(block), adjacency_(num_nodes)
{
    for (int i = 0; i < num_nodes; ++i) adjacency_[i].push_back(i);
}

void BlockPattern::couple(int a, int b)
{
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
}

CsrMatrix BlockPattern::build() const
{
    const int nodes = static_cast<int>(adjacency_.size());
    CsrMatrix m;
    m.rows = m.cols = nodes * block_;
    m.row_ptr.assign(m.rows + 1, 0);
    std::vector<std::vector<int>> sorted(nodes);
    size_t total = 0;
    for (int i = 0; i < nodes; ++i) {
        sorted[i] = adjacency_[i];
        std::sort(sorted[i].begin(), sorted[i].end());
        sorted[i].erase(std::unique(sorted[i].begin(), sorted[i].end()), sorted[i].end());
        total += sorted[i].size() * block_ * block_;
    }
    m.col_idx.reserve(total);
    for (int i = 0; i < nodes; ++i) {
        for (int bi = 0; bi < block_; ++bi) {
            const int row = i * block_ + bi;
            for (int j : sorted[i])
                for (int bj = 0; bj < block_; ++bj) m.col_idx.push_back(j * block_ + bj);
            m.row_ptr[row + 1] = static_cast<int>(m.col_idx.size());
        }
    }
    m.values.assign(m.col_idx.size(), Complex(0.0));
    return m;
}

double l2_norm(std::span<const Complex> v)
{
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

} // namespace elastodg
