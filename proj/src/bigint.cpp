#include "acfg/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace acfg {

Bigint::Bigint(int64_t v) {
    neg_ = v < 0;
    uint64_t mag = neg_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    while (mag) {
        mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

Bigint Bigint::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("sign without digits");
    Bigint r;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("non-digit in number");
        r = r * Bigint(10) + Bigint(s[pos] - '0');
    }
    if (!r.mag_.empty()) r.neg_ = neg;
    return r;
}

void Bigint::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int Bigint::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> Bigint::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t k = 0; k < std::max(a.size(), b.size()) || carry; ++k) {
        uint64_t s = carry;
        if (k < a.size()) s += a[k];
        if (k < b.size()) s += b[k];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

std::vector<uint32_t> Bigint::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t k = 0; k < a.size(); ++k) {
        int64_t d = static_cast<int64_t>(a[k]) - borrow - (k < b.size() ? b[k] : 0);
        borrow = d < 0;
        if (d < 0) d += int64_t{1} << 32;
        r.push_back(static_cast<uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Bigint Bigint::operator-() const {
    Bigint r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

Bigint Bigint::operator+(const Bigint& o) const {
    Bigint r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return Bigint();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.neg_ = neg_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

Bigint Bigint::operator-(const Bigint& o) const { return *this + (-o); }

Bigint Bigint::operator*(const Bigint& o) const {
    if (mag_.empty() || o.mag_.empty()) return Bigint();
    Bigint r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size() || carry; ++j) {
            uint64_t cur = r.mag_[i + j] + carry;
            if (j < o.mag_.size())
                cur += static_cast<uint64_t>(mag_[i]) * o.mag_[j];
            r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

int Bigint::cmp(const Bigint& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return neg_ ? -c : c;
}

int64_t Bigint::to_int64() const {
    if (mag_.size() > 2) throw std::overflow_error("bigint does not fit in int64");
    uint64_t mag = 0;
    for (size_t k = mag_.size(); k-- > 0;) mag = (mag << 32) | mag_[k];
    if (neg_) {
        if (mag > static_cast<uint64_t>(INT64_MAX) + 1) throw std::overflow_error("bigint does not fit in int64");
        return static_cast<int64_t>(~mag + 1);
    }
    if (mag > static_cast<uint64_t>(INT64_MAX)) throw std::overflow_error("bigint does not fit in int64");
    return static_cast<int64_t>(mag);
}

std::string Bigint::to_string() const {
    if (mag_.empty()) return "0";
    std::vector<uint32_t> work = mag_;
    std::string digits;
    while (!work.empty()) {
        // Divide the magnitude by 1e9, collecting the remainder.
        uint64_t rem = 0;
        for (size_t k = work.size(); k-- > 0;) {
            uint64_t cur = (rem << 32) | work[k];
            work[k] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace acfg
