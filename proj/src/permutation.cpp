#include "ouroboros/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ouroboros/error.hpp"

namespace ouroboros {

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    const std::size_t n = mapping_.size();
    if (n == 0) throw DomainError("permutation of an empty set");
    std::vector<bool> seen(n + 1, false);
    for (std::size_t v : mapping_) {
        if (v < 1 || v > n || seen[v]) {
            throw DomainError("mapping is not a bijection on {1.." + std::to_string(n) + "}");
        }
        seen[v] = true;
    }
    // O(n^2) is fine; determinant expansion never goes beyond n ~ 10.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (mapping_[a] > mapping_[b]) ++inversions_;
        }
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{1});
    return Permutation(std::move(m));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw DomainError("composing permutations of different sizes");
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = mapping_[other.mapping_[i] - 1];
    return Permutation(std::move(out));
}

PermutationRange::iterator::iterator(std::size_t n) : state_(n) {
    std::iota(state_.begin(), state_.end(), std::size_t{1});
    current_.emplace(state_);
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
    if (std::next_permutation(state_.begin(), state_.end())) {
        current_.emplace(state_);
    } else {
        current_.reset();
    }
    return *this;
}

PermutationRange::PermutationRange(std::size_t n) : n_(n) {
    if (n < 1) throw DomainError("permutations need n >= 1");
}

PermutationRange permutations(std::size_t n) { return PermutationRange(n); }

}  // namespace ouroboros
