#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace modresc {

// Fixed-width dynamic bit set. Width is set at construction and all binary
// operations require equal widths. Unused tail bits of the last word are
// kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_(word_count(nbits), 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void set(std::size_t i, bool v) {
        if (v) set(i); else reset(i);
    }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() {
        for (auto& w : w_) w = 0;
    }
    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t{0};
        mask_tail();
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Lowest set bit index, or -1 when empty.
    int first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    BitVec& operator&=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // this &= ~o
    BitVec& andnot_assign(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) { a &= b; return a; }
    friend BitVec operator|(BitVec a, const BitVec& b) { a |= b; return a; }

    // True iff some position is set here and clear in o.
    bool any_and_not(const BitVec& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return true;
        return false;
    }
    bool is_subset_of(const BitVec& o) const { return !any_and_not(o); }

    bool intersects(const BitVec& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ nbits_);
    }

    // Orders bit sets as their sorted index sequences compare
    // lexicographically, so {0} < {0,1} < {0,2} < {1}.
    static int set_compare(const BitVec& a, const BitVec& b) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) {
            std::uint64_t d = a.w_[k] ^ b.w_[k];
            if (!d) continue;
            std::uint64_t low = d & (~d + 1);
            bool in_a = a.w_[k] & low;
            // the owner of the least differing element wins unless the other
            // set ends right there (a proper prefix sorts first)
            const BitVec& other = in_a ? b : a;
            bool other_goes_on = (other.w_[k] & ~(low | (low - 1))) != 0;
            for (std::size_t j = k + 1; !other_goes_on && j < a.w_.size(); ++j)
                other_goes_on = other.w_[j] != 0;
            if (in_a) return other_goes_on ? -1 : 1;
            return other_goes_on ? 1 : -1;
        }
        return 0;
    }

private:
    static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }
    void mask_tail() {
        if (nbits_ & 63) w_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
        if (nbits_ == 0 && !w_.empty()) w_.back() = 0;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

inline bool set_less(const BitVec& a, const BitVec& b) {
    return BitVec::set_compare(a, b) < 0;
}

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

} // namespace modresc
