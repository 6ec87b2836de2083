#pragma once

#include <gmpxx.h>

#include <string>

namespace walklt {

// Exact non-negative path counts and exact probabilities.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline std::string to_string(const Rational& v) {
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

// Natural log of a positive big integer without overflowing a double.
double log_of(const BigInt& v);

} // namespace walklt
