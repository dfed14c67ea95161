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
#pragma once

#include "types.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace elastodg {

/// Complex matrix in compressed sparse row form; columns sorted and unique per row.
struct CsrMatrix
{
    int rows = 0;
    int cols = 0;
    std::vector<int> row_ptr;
    std::vector<int> col_idx;
    std::vector<Complex> values;

    int nnz() const { return static_cast<int>(col_idx.size()); }

    /// Position of (row, col) in `values`, or -1 when outside the pattern.
    int find(int row, int col) const;

    void multiply(std::span<const Complex> x, std::span<Complex> y) const;
    std::vector<Complex> multiply(std::span<const Complex> x) const;

    /// v^* A w.
    Complex form(std::span<const Complex> v, std::span<const Complex> w) const;

    /// Conjugate transpose.
    CsrMatrix adjoint() const;

    /// Adds a dense block local[r * cols.size() + c] at (rows[r], cols[c]); every
    /// target must already be in the pattern.
    void add_block(std::span<const int> row_dofs, std::span<const int> col_dofs, std::span<const Complex> local);

    /// Matrix Market "coordinate complex general", 1-based.
    void write_matrix_market(std::ostream& os) const;
};

/// Sparsity of a block-structured operator: node i owns dofs
/// [block*i, block*i + block) and every coupled pair of nodes gets a dense block.
class BlockPattern
{
public:
    BlockPattern(int num_nodes, int block);

    void couple(int a, int b);
    /// Zero-valued matrix with the accumulated pattern.
    CsrMatrix build() const;

private:
    int block_;
    std::vector<std::vector<int>> adjacency_;
};

/// Euclidean norm of a complex vector.
double l2_norm(std::span<const Complex> v);

} // namespace elastodg
