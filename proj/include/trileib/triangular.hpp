#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trileib/algebra.hpp"

namespace trileib {

// 1-based strictly upper-triangular position, i < k <= n.
struct TriIndex {
    std::size_t i = 0;
    std::size_t k = 0;
    bool operator==(const TriIndex&) const = default;
};

// Basis {N_ik : 1 <= i < k <= n} ordered along consecutive off-diagonals:
// all k-i = 1 pairs by increasing i, then k-i = 2, ..., ending with (1,n).
class TriBasis {
public:
    explicit TriBasis(std::size_t n);  // throws for n < 2

    std::size_t n() const { return n_; }
    std::size_t size() const { return order_.size(); }  // n(n-1)/2
    const std::vector<TriIndex>& order() const { return order_; }
    TriIndex pair_at(std::size_t pos) const { return order_[pos]; }

    // 0-based position of (i,k); throws on out-of-range input.
    std::size_t position(std::size_t i, std::size_t k) const;
    bool valid(std::size_t i, std::size_t k) const {
        return 1 <= i && i < k && k <= n_;
    }

    std::string label(std::size_t pos) const;

private:
    std::size_t n_;
    std::vector<TriIndex> order_;
    std::vector<std::size_t> position_;  // (i-1)*n + (k-1) -> pos
};

// 1-based position of N_ik in the off-diagonal ordering for size n;
// (1,2) -> 1 and (1,n) -> n(n-1)/2.
std::size_t flat_index(std::size_t i, std::size_t k, std::size_t n);

// Inverse of flat_index.
TriIndex flat_index_inverse(std::size_t pos, std::size_t n);

// Basis label: "N12", "N23", ...; underscore form "N_1_10" once n >= 10.
std::string tri_label(std::size_t i, std::size_t k, std::size_t n);

// Structure constants of the strictly upper-triangular algebra of size n
// on the ordered TriBasis: [N_ik, N_ab] = d_ka N_ib - d_bi N_ak.
StructureConstants build_T(std::size_t n);

}  // namespace trileib
