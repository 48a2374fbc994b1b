#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace surfwit {

/// Bit vector over GF(2); addition is XOR.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool any() const {
        for (auto w : words_) {
            if (w != 0) return true;
        }
        return false;
    }

    std::optional<std::size_t> lowest_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) {
                return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
            }
        }
        return std::nullopt;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Gf2Vector& operator+=(const Gf2Vector& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }
    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-echelon basis, rows keyed by their lowest set bit.
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t bits) : bits_(bits) {}

    /// Reduces `v` against the basis; returns the remainder.
    Gf2Vector reduce(Gf2Vector v) const {
        for (const auto& [pivot, row] : rows_) {
            if (v.test(pivot)) v += row;
        }
        return v;
    }

    /// Adds `v`; returns false when it was already in the span.
    bool insert(Gf2Vector v) {
        v = reduce(std::move(v));
        const auto pivot = v.lowest_set();
        if (!pivot) return false;
        // Keep rows fully reduced on the new pivot.
        for (auto& [p, row] : rows_) {
            if (row.test(*pivot)) row += v;
        }
        rows_.push_back({*pivot, std::move(v)});
        return true;
    }

    bool contains(const Gf2Vector& v) const { return !reduce(v).any(); }
    std::size_t dimension() const { return rows_.size(); }
    std::size_t bits() const { return bits_; }

    std::vector<Gf2Vector> rows() const {
        std::vector<Gf2Vector> out;
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }

private:
    struct Row {
        std::size_t pivot;
        Gf2Vector row;
    };
    std::size_t bits_;
    std::vector<Row> rows_;
};

}  // namespace surfwit
