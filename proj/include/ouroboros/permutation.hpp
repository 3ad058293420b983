#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace ouroboros {

/// A bijection on {1..n}. `mapping()[i - 1]` is the image of i.
class Permutation {
public:
    /// Validates the bijection and counts inversions. Throws DomainError otherwise.
    explicit Permutation(std::vector<std::size_t> mapping);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return mapping_.size(); }
    std::span<const std::size_t> mapping() const { return mapping_; }
    /// sigma(i) for 1-based i.
    std::size_t operator()(std::size_t i) const { return mapping_[i - 1]; }

    /// Pairs a < b with sigma(a) > sigma(b).
    std::uint64_t inversions() const { return inversions_; }
    /// (-1)^inversions.
    int sign() const { return inversions_ % 2 == 0 ? 1 : -1; }

    /// (this o other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.mapping_ == b.mapping_; }

private:
    std::vector<std::size_t> mapping_;
    std::uint64_t inversions_ = 0;
};

inline int sign(const Permutation& p) { return p.sign(); }

/// All n! permutations of {1..n} in lexicographic order of their mappings, generated lazily.
class PermutationRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;
        using pointer = const Permutation*;
        using reference = const Permutation&;

        iterator() = default;
        explicit iterator(std::size_t n);

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) { return a.current_ == b.current_; }

    private:
        std::vector<std::size_t> state_;
        std::optional<Permutation> current_;
    };

    explicit PermutationRange(std::size_t n);

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    std::size_t n_;
};

/// Throws DomainError for n < 1.
PermutationRange permutations(std::size_t n);

}  // namespace ouroboros
