#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isobaric {

/// Sign-magnitude arbitrary-precision integer, little-endian base 2^32.
/// Division truncates toward zero, matching built-in integer semantics.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        neg_ = v < 0;
        // two's-complement safe for LLONG_MIN
        unsigned long long m = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                    : static_cast<unsigned long long>(v);
        while (m != 0) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static BigInt from_string(std::string_view s) {
        BigInt r;
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: invalid digit in numeral");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.mag_.empty();
        return r;
    }

    bool is_zero() const noexcept { return mag_.empty(); }
    bool is_negative() const noexcept { return neg_; }
    bool is_even() const noexcept { return mag_.empty() || (mag_[0] & 1u) == 0; }
    int sign() const noexcept { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.mag_.empty()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.neg_ == b.neg_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.neg_ = a.neg_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.neg_ = b.neg_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            std::size_t pos = i + b.mag_.size();
            while (carry != 0) {
                std::uint64_t cur = r.mag_[pos] + carry;
                r.mag_[pos] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++pos;
            }
        }
        trim(r.mag_);
        r.neg_ = (a.neg_ != b.neg_) && !r.mag_.empty();
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Quotient and remainder, truncated toward zero; remainder takes the
    /// dividend's sign. Throws on zero divisor.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) return {BigInt{}, a};
        BigInt q, r;
        if (b.mag_.size() == 1) {
            r.mag_ = a.mag_;
            std::uint32_t rem = div_small_mag(r.mag_, b.mag_[0]);
            q.mag_ = std::move(r.mag_);
            r.mag_.clear();
            if (rem != 0) r.mag_.push_back(rem);
        } else {
            // binary long division on magnitudes
            long bits = bit_length(a.mag_);
            q.mag_.assign(a.mag_.size(), 0);
            for (long i = bits - 1; i >= 0; --i) {
                shl1(r.mag_);
                if (get_bit(a.mag_, i)) {
                    if (r.mag_.empty())
                        r.mag_.push_back(1);
                    else
                        r.mag_[0] |= 1u;
                }
                if (cmp_mag(r.mag_, b.mag_) >= 0) {
                    r.mag_ = sub_mag(r.mag_, b.mag_);
                    set_bit(q.mag_, i);
                }
            }
            trim(q.mag_);
        }
        q.neg_ = (a.neg_ != b.neg_) && !q.mag_.empty();
        r.neg_ = a.neg_ && !r.mag_.empty();
        return {q, r};
    }

    BigInt operator/(const BigInt& o) const { return divmod(*this, o).first; }
    BigInt operator%(const BigInt& o) const { return divmod(*this, o).second; }

    friend bool operator==(const BigInt& a, const BigInt& b) noexcept {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) noexcept { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) noexcept {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) noexcept { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) noexcept { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) noexcept { return !(a < b); }

    /// Nonnegative gcd via the binary algorithm; gcd(0, 0) = 0.
    static BigInt gcd(const BigInt& x, const BigInt& y) {
        std::vector<std::uint32_t> a = x.mag_, b = y.mag_;
        if (a.empty()) return make_mag(std::move(b));
        if (b.empty()) return make_mag(std::move(a));
        long shift = 0;
        while (mag_even(a) && mag_even(b)) {
            shr1(a);
            shr1(b);
            ++shift;
        }
        while (mag_even(a)) shr1(a);
        while (!b.empty()) {
            while (mag_even(b)) shr1(b);
            if (cmp_mag(a, b) > 0) std::swap(a, b);
            b = sub_mag(b, a);
        }
        for (long i = 0; i < shift; ++i) shl1(a);
        return make_mag(std::move(a));
    }

    std::string to_string() const {
        if (mag_.empty()) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::vector<std::uint32_t> groups;
        while (!m.empty()) groups.push_back(div_small_mag(m, 1000000000u));
        std::string s = neg_ ? "-" : "";
        s += std::to_string(groups.back());
        for (std::size_t i = groups.size() - 1; i-- > 0;) {
            std::string g = std::to_string(groups[i]);
            s += std::string(9 - g.size(), '0') + g;
        }
        return s;
    }

private:
    bool neg_ = false;
    std::vector<std::uint32_t> mag_;

    static BigInt make_mag(std::vector<std::uint32_t> m) {
        BigInt r;
        r.mag_ = std::move(m);
        trim(r.mag_);
        return r;
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static bool mag_even(const std::vector<std::uint32_t>& m) {
        return m.empty() || (m[0] & 1u) == 0;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        trim(r);
        return r;
    }

    static long bit_length(const std::vector<std::uint32_t>& m) {
        if (m.empty()) return 0;
        std::uint32_t top = m.back();
        long bits = 0;
        while (top != 0) {
            ++bits;
            top >>= 1;
        }
        return bits + 32 * static_cast<long>(m.size() - 1);
    }

    static bool get_bit(const std::vector<std::uint32_t>& m, long i) {
        std::size_t w = static_cast<std::size_t>(i / 32);
        return w < m.size() && ((m[w] >> (i % 32)) & 1u) != 0;
    }

    static void set_bit(std::vector<std::uint32_t>& m, long i) {
        std::size_t w = static_cast<std::size_t>(i / 32);
        if (w >= m.size()) m.resize(w + 1, 0);
        m[w] |= (1u << (i % 32));
    }

    static void shl1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& w : m) {
            std::uint32_t next = w >> 31;
            w = (w << 1) | carry;
            carry = next;
        }
        if (carry != 0) m.push_back(carry);
    }

    static void shr1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint32_t next = m[i] & 1u;
            m[i] = (m[i] >> 1) | (carry << 31);
            carry = next;
        }
        trim(m);
    }

    // divides in place by a single limb, returns the remainder
    static std::uint32_t div_small_mag(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& w : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(w) * f + carry;
            w = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry != 0) mag_.push_back(static_cast<std::uint32_t>(carry));
        trim(mag_);
    }

    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; i < mag_.size() && carry != 0; ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry != 0) mag_.push_back(static_cast<std::uint32_t>(carry));
    }
};

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative integer");
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

}  // namespace isobaric
