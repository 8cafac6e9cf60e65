#ifndef TRISPHOM_PERMUTATION_HPP
#define TRISPHOM_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace trisphom {

/// A permutation of {1,...,n}, n >= 1. images()[i] is the image of i+1.
class Permutation {
public:
    /// Throws std::invalid_argument unless images is a bijection on a
    /// nonempty {1,...,n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    /// Parses a product of disjoint cycles with whitespace-separated points,
    /// e.g. "(1 2 3 4 5)" or "(2 3)(4 5)". "()" and "id" denote the
    /// identity. Points must lie in {1,...,degree} and may not repeat.
    static Permutation parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int point) const { return images_[point - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    std::string to_cycle_string() const;

    bool operator==(const Permutation& other) const = default;
    auto operator<=>(const Permutation& other) const = default;

private:
    std::vector<int> images_;
};

/// A finite permutation group given by generators, with the element list
/// fully enumerated (closure under composition). Elements are sorted by
/// image tuple, so the identity is element 0.
class PermutationGroup {
public:
    static constexpr std::size_t kDefaultOrderCap = 1000000;

    /// Throws std::invalid_argument on degree mismatch or when the closure
    /// exceeds max_order.
    PermutationGroup(int degree, std::vector<Permutation> generators,
                     std::size_t max_order = kDefaultOrderCap);

    /// The trivial group on the given degree.
    static PermutationGroup trivial(int degree);

    /// The cyclic group generated by the cycle (1 2 ... degree).
    static PermutationGroup cyclic(int degree);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool is_abelian() const;

    /// Invariant factors d_1 | d_2 | ... of an abelian group (empty for the
    /// trivial group). Throws std::invalid_argument if the group is not
    /// abelian.
    std::vector<long long> abelian_invariants() const;

private:
    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

}  // namespace trisphom

#endif
