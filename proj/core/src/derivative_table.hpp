#pragma once

#include <utility>
#include <vector>

#include "moyallax/diffpoly.hpp"

namespace moyallax::detail {

// table.get(k1, k2) = dx^k1 dy^k2 of the base polynomial, filled on demand.
class DerivativeTable {
public:
    explicit DerivativeTable(DiffPoly base) : rows_{{std::move(base)}} {}

    const DiffPoly& get(int k1, int k2) {
        while (static_cast<int>(rows_.size()) <= k1) rows_.push_back({dx(rows_.back().front())});
        auto& row = rows_[k1];
        while (static_cast<int>(row.size()) <= k2) row.push_back(dy(row.back()));
        return row[k2];
    }

private:
    std::vector<std::vector<DiffPoly>> rows_;
};

}  // namespace moyallax::detail
