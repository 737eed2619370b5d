#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace acfg {

// Arbitrary-precision signed integer. Only what the library needs: addition,
// subtraction, multiplication, comparison, decimal printing. Sign-magnitude
// with 32-bit limbs, little-endian.
class Bigint {
public:
    Bigint() = default;
    Bigint(int64_t v);  // NOLINT: implicit by design

    static Bigint from_string(const std::string& s);

    Bigint operator-() const;
    Bigint operator+(const Bigint& o) const;
    Bigint operator-(const Bigint& o) const;
    Bigint operator*(const Bigint& o) const;
    Bigint& operator+=(const Bigint& o) { return *this = *this + o; }

    // -1, 0, +1
    int cmp(const Bigint& o) const;
    bool operator==(const Bigint& o) const { return cmp(o) == 0; }
    bool operator<(const Bigint& o) const { return cmp(o) < 0; }
    bool operator>(const Bigint& o) const { return cmp(o) > 0; }

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    // Exact value when it fits in int64, else throws std::overflow_error.
    int64_t to_int64() const;

    std::string to_string() const;

private:
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    void trim();

    bool neg_ = false;
    std::vector<uint32_t> mag_;  // empty means zero
};

}  // namespace acfg
