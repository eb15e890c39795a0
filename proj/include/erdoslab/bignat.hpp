#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmp.h>

namespace erdoslab {

// Arbitrary-precision natural number with value semantics. A thin RAII
// wrapper over GMP's mpz so the rest of the code never touches raw mpz_t
// and the big-integer backend stays swappable.
class BigNat {
public:
    BigNat() { mpz_init(v_); }
    explicit BigNat(uint64_t v) { mpz_init_set_ui(v_, v); }
    BigNat(const BigNat& o) { mpz_init_set(v_, o.v_); }
    BigNat(BigNat&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigNat& operator=(const BigNat& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigNat& operator=(BigNat&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigNat() { mpz_clear(v_); }

    // Parses a base-10 numeral; throws std::domain_error on anything else.
    static BigNat from_decimal(std::string_view s);

    static BigNat two_pow(uint64_t k) {
        BigNat r;
        mpz_setbit(r.v_, k);
        return r;
    }

    static BigNat pow(const BigNat& base, uint64_t exp) {
        BigNat r;
        mpz_pow_ui(r.v_, base.v_, exp);
        return r;
    }

    std::string to_decimal() const;

    // Number of bits in the binary representation (1 for value 0).
    size_t bit_count() const { return mpz_sizeinbase(v_, 2); }

    bool fits_u64() const { return mpz_sizeinbase(v_, 2) <= 64; }
    uint64_t to_u64() const;  // throws std::overflow_error if too large

    int cmp(const BigNat& o) const { return mpz_cmp(v_, o.v_); }
    int cmp_u64(uint64_t o) const { return mpz_cmp_ui(v_, o); }
    bool operator==(const BigNat& o) const { return cmp(o) == 0; }
    std::strong_ordering operator<=>(const BigNat& o) const {
        int c = cmp(o);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    BigNat& operator*=(const BigNat& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }
    friend BigNat operator*(BigNat a, const BigNat& b) {
        a *= b;
        return a;
    }
    BigNat& operator+=(const BigNat& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }

    BigNat& mul_u64(uint64_t m) {
        mpz_mul_ui(v_, v_, m);
        return *this;
    }
    // Exact division; quotient must have no remainder.
    BigNat& divexact_u64(uint64_t d);
    BigNat& shl(uint64_t bits) {
        mpz_mul_2exp(v_, v_, bits);
        return *this;
    }

private:
    mpz_t v_;
};

}  // namespace erdoslab
