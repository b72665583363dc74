#include "striclcs/multi.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "striclcs/preprocess.hpp"

namespace striclcs {

MultiDpTensor::MultiDpTensor(Direction direction, std::vector<int> dims, std::int64_t max_cells)
    : direction_(direction), dims_(std::move(dims)), strides_(dims_.size(), 1) {
    std::int64_t total = 1;
    for (std::size_t k = dims_.size(); k-- > 0;) {
        strides_[k] = total;
        total *= dims_[k] + 2;
        if (total > max_cells) {
            throw std::invalid_argument("MultiDpTensor: tensor exceeds the configured cell cap");
        }
    }
    cells_.assign(static_cast<std::size_t>(total), 0);
}

namespace {

// Advances `coord` (components 1..dims[k]) in lexicographic order, last axis
// fastest; returns false after the last coordinate.
bool advance(std::vector<int>& coord, const std::vector<int>& dims) {
    for (std::size_t k = coord.size(); k-- > 0;) {
        if (coord[k] < dims[k]) {
            ++coord[k];
            for (std::size_t t = k + 1; t < coord.size(); ++t) coord[t] = 1;
            return true;
        }
    }
    return false;
}

bool any_empty(const std::vector<int>& dims) {
    return std::any_of(dims.begin(), dims.end(), [](int n) { return n == 0; });
}

} // namespace

MultiDpTensor forward_tensor(std::span<const Sequence> mains, std::int64_t max_cells) {
    std::vector<int> dims;
    dims.reserve(mains.size());
    for (const Sequence& s : mains) dims.push_back(s.size());
    MultiDpTensor f(Direction::forward, dims, max_cells);
    if (any_empty(dims)) return f;

    const std::size_t z = mains.size();
    std::int64_t diagonal = 0;
    for (std::int64_t stride : f.strides()) diagonal += stride;

    std::vector<int> t(z, 1);
    do {
        const std::int64_t idx = f.flat(t);
        const Token head = mains[0].at1(t[0]);
        bool all_equal = true;
        for (std::size_t k = 1; k < z; ++k) {
            if (mains[k].at1(t[k]) != head) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) {
            f.cells_[idx] = f.cells_[idx - diagonal] + 1;
        } else {
            std::int32_t best = 0;
            for (std::size_t k = 0; k < z; ++k) {
                best = std::max(best, f.cells_[idx - f.strides()[k]]);
            }
            f.cells_[idx] = best;
        }
    } while (advance(t, f.dims()));
    return f;
}

MultiDpTensor reverse_tensor(std::span<const Sequence> mains, std::int64_t max_cells) {
    std::vector<int> dims;
    dims.reserve(mains.size());
    for (const Sequence& s : mains) dims.push_back(s.size());
    MultiDpTensor r(Direction::reverse, dims, max_cells);
    if (any_empty(dims)) return r;

    const std::size_t z = mains.size();
    std::int64_t diagonal = 0;
    for (std::int64_t stride : r.strides()) diagonal += stride;

    // Descending lexicographic order mirrors the forward fill.
    std::vector<int> t(dims.begin(), dims.end());
    for (;;) {
        const std::int64_t idx = r.flat(t);
        const Token head = mains[0].at1(t[0]);
        bool all_equal = true;
        for (std::size_t k = 1; k < z; ++k) {
            if (mains[k].at1(t[k]) != head) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) {
            r.cells_[idx] = r.cells_[idx + diagonal] + 1;
        } else {
            std::int32_t best = 0;
            for (std::size_t k = 0; k < z; ++k) {
                best = std::max(best, r.cells_[idx + r.strides()[k]]);
            }
            r.cells_[idx] = best;
        }
        std::size_t k = z;
        while (k-- > 0) {
            if (t[k] > 1) {
                --t[k];
                for (std::size_t u = k + 1; u < z; ++u) t[u] = dims[u];
                break;
            }
            if (k == 0) return r;
        }
    }
}

namespace {

std::vector<Token> backtrack_tensor_prefix(const MultiDpTensor& f,
                                           std::span<const Sequence> mains,
                                           std::vector<int> t) {
    const std::size_t z = mains.size();
    std::int64_t diagonal = 0;
    for (std::int64_t stride : f.strides()) diagonal += stride;

    std::vector<Token> out;
    while (f.at(t) > 0) {
        const Token head = mains[0].at1(t[0]);
        bool all_equal = true;
        for (std::size_t k = 1; k < z && all_equal; ++k) {
            all_equal = mains[k].at1(t[k]) == head;
        }
        if (all_equal) {
            out.push_back(head);
            for (int& c : t) --c;
        } else {
            const std::int64_t idx = f.flat(t);
            std::size_t pick = 0;
            std::int32_t best = -1;
            for (std::size_t k = 0; k < z; ++k) {
                const std::int32_t v = f.at_flat(idx - f.strides()[k]);
                if (v > best) {
                    best = v;
                    pick = k;
                }
            }
            --t[pick];
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Token> backtrack_tensor_suffix(const MultiDpTensor& r,
                                           std::span<const Sequence> mains,
                                           std::vector<int> t) {
    const std::size_t z = mains.size();
    std::vector<Token> out;
    while (r.at(t) > 0) {
        const Token head = mains[0].at1(t[0]);
        bool all_equal = true;
        for (std::size_t k = 1; k < z && all_equal; ++k) {
            all_equal = mains[k].at1(t[k]) == head;
        }
        if (all_equal) {
            out.push_back(head);
            for (int& c : t) ++c;
        } else {
            const std::int64_t idx = r.flat(t);
            std::size_t pick = 0;
            std::int32_t best = -1;
            for (std::size_t k = 0; k < z; ++k) {
                const std::int32_t v = r.at_flat(idx + r.strides()[k]);
                if (v > best) {
                    best = v;
                    pick = k;
                }
            }
            ++t[pick];
        }
    }
    return out;
}

} // namespace

MultiResult multi_solve(const MultiInstance& instance, std::int64_t max_cells) {
    const std::vector<Sequence>& mains = instance.mains;
    const Sequence& p = instance.constraint;
    const std::size_t z = mains.size();
    if (z < 2) throw std::invalid_argument("multi_solve: needs at least two main sequences");

    const MultiDpTensor f = forward_tensor(mains, max_cells);

    if (p.empty()) {
        std::vector<int> full;
        full.reserve(z);
        for (const Sequence& s : mains) full.push_back(s.size());
        MultiResult out;
        out.length = any_empty(full) ? 0 : f.at(full);
        out.sequence = any_empty(full)
                           ? Sequence{}
                           : Sequence(backtrack_tensor_prefix(f, mains, full));
        return out;
    }

    const MultiDpTensor r = reverse_tensor(mains, max_cells);
    std::vector<CompactAppearanceTable> tables;
    tables.reserve(z);
    for (const Sequence& s : mains) tables.push_back(build_table(s, p));

    // Anchor tuples combine, per sequence, the positions with a defined table
    // entry; enumeration over the sorted lists is lexicographic, so a strict
    // ">" keeps the first optimum.
    std::vector<std::vector<int>> anchors(z);
    for (std::size_t k = 0; k < z; ++k) {
        for (int i = 1; i <= mains[k].size(); ++i) {
            if (tables[k].defined(i)) anchors[k].push_back(i);
        }
        if (anchors[k].empty()) return {};
    }

    std::vector<std::size_t> pick(z, 0);
    std::vector<int> t(z), ends(z);
    int best = -1;
    std::vector<int> best_anchor;
    for (;;) {
        for (std::size_t k = 0; k < z; ++k) {
            t[k] = anchors[k][pick[k]];
            ends[k] = *tables[k].end_index(t[k]);
        }
        const int candidate = f.at(t) + r.at(ends) + p.size() - 2;
        if (candidate > best) {
            best = candidate;
            best_anchor = t;
        }
        std::size_t k = z;
        bool advanced = false;
        while (k-- > 0) {
            if (++pick[k] < anchors[k].size()) {
                advanced = true;
                break;
            }
            pick[k] = 0;
            if (k == 0) break;
        }
        if (!advanced) break;
    }
    assert(best >= 0);

    // Reconstruction mirrors the two-sequence rule: S1 . p_2..p_r . tail(S2).
    for (std::size_t k = 0; k < z; ++k) ends[k] = *tables[k].end_index(best_anchor[k]);
    std::vector<Token> tokens = backtrack_tensor_prefix(f, mains, best_anchor);
    for (int u = 2; u <= p.size(); ++u) tokens.push_back(p.at1(u));
    const std::vector<Token> tail = backtrack_tensor_suffix(r, mains, ends);
    tokens.insert(tokens.end(), tail.begin() + 1, tail.end());
    assert(static_cast<int>(tokens.size()) == best);

    MultiResult out;
    out.length = best;
    out.anchor = std::move(best_anchor);
    out.sequence = Sequence(std::move(tokens));
    return out;
}

} // namespace striclcs
