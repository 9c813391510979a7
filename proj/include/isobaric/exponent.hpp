#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace isobaric {

/// Exponent vector (alpha_1, ..., alpha_k) of the monomial
/// t_1^{alpha_1} ... t_k^{alpha_k}. Entry alpha_i counts the parts equal to i,
/// so the vector doubles as a partition of its isobaric degree sum(i*alpha_i).
class ExponentVector {
public:
    explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("ExponentVector: length must be >= 1");
        for (int e : entries_)
            if (e < 0) throw std::invalid_argument("ExponentVector: entries must be nonnegative");
    }

    static ExponentVector zero(int k) { return ExponentVector(std::vector<int>(k, 0)); }

    static ExponentVector basis(int j, int k) {
        std::vector<int> e(k, 0);
        e.at(j - 1) = 1;
        return ExponentVector(std::move(e));
    }

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    /// Isobaric degree sum(i * alpha_i).
    int degree() const noexcept {
        int d = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i) d += static_cast<int>(i + 1) * entries_[i];
        return d;
    }

    /// Exponent sum (the depth in the differential lattice).
    int depth() const noexcept {
        int d = 0;
        for (int e : entries_) d += e;
        return d;
    }

    bool is_zero() const noexcept {
        for (int e : entries_)
            if (e != 0) return false;
        return true;
    }

    /// Copy with the 1-based entry j incremented.
    ExponentVector incremented(int j) const {
        check_index(j);
        ExponentVector r = *this;
        ++r.entries_[j - 1];
        return r;
    }

    /// Copy with the 1-based entry j decremented; entry must be positive.
    ExponentVector decremented(int j) const {
        check_index(j);
        if (entries_[j - 1] == 0)
            throw std::invalid_argument("ExponentVector: cannot decrement a zero entry");
        ExponentVector r = *this;
        --r.entries_[j - 1];
        return r;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) noexcept {
        return !(a == b);
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> entries_;

    void check_index(int j) const {
        if (j < 1 || j > size())
            throw std::invalid_argument("ExponentVector: variable index out of range");
    }
};

/// Canonical term order: lexicographic descending on the exponent vector.
struct TermOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const noexcept {
        return b.entries() < a.entries();
    }
};

/// All length-k exponent vectors of isobaric degree n, in canonical order.
/// The count equals the number of partitions of n into parts <= k.
inline std::vector<ExponentVector> enumerate_partitions(int n, int k) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: degree must be >= 0");
    if (k < 1) throw std::invalid_argument("enumerate_partitions: k must be >= 1");
    std::vector<ExponentVector> out;
    std::vector<int> cur(k, 0);
    // descending count of part i first keeps the output lex-descending
    auto rec = [&](auto&& self, int part, int remaining) -> void {
        if (part > k) {
            if (remaining == 0) out.push_back(ExponentVector(cur));
            return;
        }
        for (int c = remaining / part; c >= 0; --c) {
            cur[part - 1] = c;
            self(self, part + 1, remaining - c * part);
        }
        cur[part - 1] = 0;
    };
    rec(rec, 1, n);
    return out;
}

}  // namespace isobaric
