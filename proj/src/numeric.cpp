#include "walklt/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walklt {

double log_of(const BigInt& v) {
    if (sgn(v) <= 0) {
        throw std::domain_error("log_of: argument must be positive");
    }
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

} // namespace walklt
