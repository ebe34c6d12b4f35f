#ifndef GSYM_PERM_HPP
#define GSYM_PERM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gsym/error.hpp"

namespace gsym {

// Point permutation of 0..n-1. Composition is left to right: (a * b) first
// applies a, then b.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : images_(n) {
        for (int i = 0; i < n; ++i) images_[i] = i;
    }
    explicit Perm(std::vector<int> images);

    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator[](int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
        Perm p;
        p.images_ = std::move(inv);
        return p;
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        std::vector<int> r(a.images_.size());
        for (int i = 0; i < a.degree(); ++i) r[i] = b.images_[a.images_[i]];
        Perm p;
        p.images_ = std::move(r);
        return p;
    }

    bool operator==(const Perm& o) const { return images_ == o.images_; }
    bool operator<(const Perm& o) const { return images_ < o.images_; }

    std::string cycle_string() const;

private:
    std::vector<int> images_;
};

struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.images()) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace gsym

#endif
