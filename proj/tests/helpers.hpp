#pragma once

#include <functional>
#include <vector>

#include "cornerkit/cornerkit.hpp"

namespace ckt {

using namespace cornerkit;

/// All canonical product types with total dimension between 1 and max_dim.
inline std::vector<ProductType> all_types(int max_dim) {
    std::vector<ProductType> out;
    std::vector<FactorType> current;
    std::function<void(int, int, bool)> go = [&](int dims, int min_n, bool in_delta) {
        if (dims > 0) out.emplace_back(ProductType{current});
        if (!in_delta) {
            for (int k = std::max(2, min_n); dims + k <= max_dim; ++k) {
                current.push_back(FactorType::sigma(k));
                go(dims + k, k, false);
                current.pop_back();
            }
            go(dims, 1, true);
            return;
        }
        for (int k = std::max(1, min_n); dims + k <= max_dim; ++k) {
            current.push_back(FactorType::delta(k));
            go(dims + k, k, true);
            current.pop_back();
        }
    };
    go(0, 2, false);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Cofactor-expansion determinant over long long — the independent oracle
/// for the lattice routines.
inline long long det_cofactor(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long det = 0, sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        det += sign * m[0][c] * det_cofactor(std::move(minor));
        sign = -sign;
    }
    return det;
}

} // namespace ckt
