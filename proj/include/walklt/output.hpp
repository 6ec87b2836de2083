#pragma once

#include "walklt/distribution.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace walklt {

inline constexpr std::string_view kCsvHeader = "walk,T,s,q,r,l,count,probability";

/// One support point as written to disk. Numbers that may exceed 64 bits
/// or must stay exact are kept as strings.
struct OutputRecord {
    std::string walk;
    int T = 0;
    int s = 0;
    std::string q;     // "num/den" in rational mode, decimal otherwise
    std::string q_num; // rational mode only
    std::string q_den;
    int r = 0;
    int l = 0;
    std::string count;       // decimal big integer
    std::string probability; // "num/den" in rational mode, %.{digits}g otherwise
};

std::string format_double(double v, int digits = 15);

std::vector<OutputRecord> to_records(const JointPMF& pmf, int digits = 15);

void write_csv(const std::vector<OutputRecord>& records, std::ostream& out);
void write_json(const std::vector<OutputRecord>& records, std::ostream& out);

/// Parses a file produced by write_csv. Throws std::runtime_error on a
/// header or field mismatch.
std::vector<OutputRecord> read_csv(std::istream& in);

/// Total probability of parsed records; exact when every record is a fraction.
Rational exact_mass(const std::vector<OutputRecord>& records);
double float_mass(const std::vector<OutputRecord>& records);

} // namespace walklt
