// multi.hpp -- generalization to z main sequences.
//
// Forward and reverse LCS tensors over z prefix/suffix coordinates, anchored
// per sequence by compact-appearance tables: the optimum maximizes
// F[t] + R[M(t)] + r - 2 over z-tuples t of first-symbol positions whose
// tables are all defined.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "striclcs/core.hpp"
#include "striclcs/dp.hpp"

namespace striclcs {

struct MultiInstance {
    std::vector<Sequence> mains;
    Sequence constraint;
};

struct MultiResult {
    std::optional<int> length;
    std::vector<int> anchor; // one 1-based position per main; empty when no solution
    std::optional<Sequence> sequence;

    bool found() const { return length.has_value(); }
};

inline constexpr std::int64_t kDefaultMaxTensorCells = std::int64_t{1} << 25;

// Flat z-dimensional array of size prod(n_k + 2) with mixed-radix indexing,
// last axis fastest. Cells with a 0 component (forward) or an n_k + 1
// component (reverse) are the zero border.
class MultiDpTensor {
public:
    MultiDpTensor(Direction direction, std::vector<int> dims, std::int64_t max_cells);

    Direction direction() const noexcept { return direction_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    const std::vector<std::int64_t>& strides() const noexcept { return strides_; }
    std::int64_t cell_count() const noexcept { return static_cast<std::int64_t>(cells_.size()); }

    std::int64_t flat(std::span<const int> coord) const {
        std::int64_t idx = 0;
        for (std::size_t k = 0; k < dims_.size(); ++k) idx += strides_[k] * coord[k];
        return idx;
    }
    std::int32_t at(std::span<const int> coord) const { return cells_[flat(coord)]; }
    std::int32_t at_flat(std::int64_t idx) const { return cells_[idx]; }

private:
    friend MultiDpTensor forward_tensor(std::span<const Sequence>, std::int64_t);
    friend MultiDpTensor reverse_tensor(std::span<const Sequence>, std::int64_t);

    Direction direction_;
    std::vector<int> dims_;            // n_k per axis
    std::vector<std::int64_t> strides_;
    std::vector<std::int32_t> cells_;
};

MultiDpTensor forward_tensor(std::span<const Sequence> mains,
                             std::int64_t max_cells = kDefaultMaxTensorCells);
MultiDpTensor reverse_tensor(std::span<const Sequence> mains,
                             std::int64_t max_cells = kDefaultMaxTensorCells);

// Throws std::invalid_argument when fewer than two mains are given or the
// tensors would exceed `max_cells`.
MultiResult multi_solve(const MultiInstance& instance,
                        std::int64_t max_cells = kDefaultMaxTensorCells);

} // namespace striclcs
