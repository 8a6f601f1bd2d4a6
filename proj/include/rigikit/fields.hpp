#ifndef RIGIKIT_FIELDS_HPP
#define RIGIKIT_FIELDS_HPP

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigikit/rng.hpp"

namespace rigikit {

// Arbitrary-precision integers and rationals for the exact computations
// (standard-basis configurations, small certificates).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Prime field modulo the Mersenne prime 2^61 - 1. A single random evaluation
// bounds a false "rank-deficient" verdict by (total degree)/p, so callers
// repeat with independent seeds.
class Fp61 {
public:
    static constexpr std::uint64_t modulus = (1ull << 61) - 1;

    constexpr Fp61() : v_(0) {}
    constexpr explicit Fp61(std::uint64_t raw) : v_(raw % modulus) {}

    static Fp61 from_int(long long x) {
        long long m = x % static_cast<long long>(modulus);
        if (m < 0) m += static_cast<long long>(modulus);
        return Fp61(static_cast<std::uint64_t>(m));
    }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp61 operator+(Fp61 a, Fp61 b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= modulus) s -= modulus;
        return from_raw(s);
    }
    friend Fp61 operator-(Fp61 a, Fp61 b) {
        std::uint64_t s = a.v_ + modulus - b.v_;
        if (s >= modulus) s -= modulus;
        return from_raw(s);
    }
    friend Fp61 operator*(Fp61 a, Fp61 b) {
        unsigned __int128 z = static_cast<unsigned __int128>(a.v_) * b.v_;
        // Mersenne fold: z = hi*2^61 + lo == hi + lo (mod 2^61-1)
        std::uint64_t lo = static_cast<std::uint64_t>(z) & modulus;
        std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
        std::uint64_t s = lo + hi;
        if (s >= modulus) s -= modulus;
        return from_raw(s);
    }
    Fp61 operator-() const { return v_ == 0 ? *this : from_raw(modulus - v_); }

    Fp61& operator+=(Fp61 b) { return *this = *this + b; }
    Fp61& operator-=(Fp61 b) { return *this = *this - b; }
    Fp61& operator*=(Fp61 b) { return *this = *this * b; }

    Fp61 inverse() const {
        if (v_ == 0) throw std::domain_error("Fp61: inverse of zero");
        return pow(modulus - 2);
    }
    Fp61 pow(std::uint64_t e) const {
        Fp61 base = *this, acc = from_raw(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(Fp61 a, Fp61 b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp61 a, Fp61 b) { return a.v_ != b.v_; }

    static Fp61 random(SplitMix64& rng) { return from_raw(rng.below(modulus)); }
    static Fp61 random_nonzero(SplitMix64& rng) {
        return from_raw(1 + rng.below(modulus - 1));
    }

private:
    static constexpr Fp61 from_raw(std::uint64_t v) {
        Fp61 f;
        f.v_ = v;
        return f;
    }
    std::uint64_t v_;
};

inline bool field_is_zero(const Fp61& x) { return x.is_zero(); }
inline bool field_is_zero(const Rat& x) { return x == 0; }
inline Fp61 field_inverse(const Fp61& x) { return x.inverse(); }
inline Rat field_inverse(const Rat& x) {
    if (x == 0) throw std::domain_error("Rat: inverse of zero");
    return Rat(1) / x;
}

} // namespace rigikit

#endif
