#include "erdoslab/bignat.hpp"

#include <cassert>
#include <stdexcept>

namespace erdoslab {

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty())
        throw std::domain_error("BigNat::from_decimal: empty string");
    for (char c : s)
        if (c < '0' || c > '9')
            throw std::domain_error("BigNat::from_decimal: not a decimal numeral: '" +
                                    std::string(s) + "'");
    BigNat r;
    std::string buf(s);
    int rc = mpz_set_str(r.v_, buf.c_str(), 10);
    assert(rc == 0);
    (void)rc;
    return r;
}

std::string BigNat::to_decimal() const {
    std::string out(mpz_sizeinbase(v_, 10) + 2, '\0');
    mpz_get_str(out.data(), 10, v_);
    out.resize(out.find('\0'));
    return out;
}

uint64_t BigNat::to_u64() const {
    if (!fits_u64())
        throw std::overflow_error("BigNat::to_u64: value " + to_decimal() +
                                  " does not fit in 64 bits");
    return mpz_get_ui(v_);
}

BigNat& BigNat::divexact_u64(uint64_t d) {
    assert(d != 0);
    assert(mpz_divisible_ui_p(v_, d));
    mpz_divexact_ui(v_, v_, d);
    return *this;
}

}  // namespace erdoslab
