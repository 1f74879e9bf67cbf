#include "trileib/triangular.hpp"

#include <stdexcept>

namespace trileib {

TriBasis::TriBasis(std::size_t n) : n_(n) {
    if (n < 2) throw std::invalid_argument("triangular basis requires n >= 2");
    position_.assign(n * n, static_cast<std::size_t>(-1));
    for (std::size_t d = 1; d <= n - 1; ++d)
        for (std::size_t i = 1; i + d <= n; ++i) {
            position_[(i - 1) * n + (i + d - 1)] = order_.size();
            order_.push_back({i, i + d});
        }
}

std::size_t TriBasis::position(std::size_t i, std::size_t k) const {
    if (!valid(i, k)) throw std::out_of_range("triangular index out of range");
    return position_[(i - 1) * n_ + (k - 1)];
}

std::string TriBasis::label(std::size_t pos) const {
    TriIndex t = order_[pos];
    return tri_label(t.i, t.k, n_);
}

std::size_t flat_index(std::size_t i, std::size_t k, std::size_t n) {
    if (!(1 <= i && i < k && k <= n))
        throw std::out_of_range("flat_index: need 1 <= i < k <= n");
    std::size_t d = k - i;
    std::size_t offset = 0;
    for (std::size_t e = 1; e + 1 <= d; ++e) offset += n - e;
    return offset + i;
}

TriIndex flat_index_inverse(std::size_t pos, std::size_t n) {
    if (pos < 1 || pos > n * (n - 1) / 2)
        throw std::out_of_range("flat_index_inverse: position out of range");
    std::size_t d = 1;
    while (pos > n - d) {
        pos -= n - d;
        ++d;
    }
    return {pos, pos + d};
}

std::string tri_label(std::size_t i, std::size_t k, std::size_t n) {
    if (n >= 10) return "N_" + std::to_string(i) + "_" + std::to_string(k);
    return "N" + std::to_string(i) + std::to_string(k);
}

StructureConstants build_T(std::size_t n) {
    TriBasis basis(n);
    std::vector<std::string> names;
    names.reserve(basis.size());
    for (std::size_t p = 0; p < basis.size(); ++p) names.push_back(basis.label(p));
    StructureConstants L(basis.size(), names);

    for (std::size_t p = 0; p < basis.size(); ++p) {
        auto [i, k] = basis.pair_at(p);
        for (std::size_t q = 0; q < basis.size(); ++q) {
            auto [a, b] = basis.pair_at(q);
            if (k == a) L.c(p, q, basis.position(i, b)) += 1;
            if (b == i) L.c(p, q, basis.position(a, k)) -= 1;
        }
    }
    return L;
}

}  // namespace trileib
