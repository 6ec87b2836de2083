#pragma once

#include "walklt/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace walklt {

enum class WalkKind { reflected, simple };

std::string_view to_string(WalkKind kind);
// Accepts "rsrw"/"reflected" and "srw"/"simple".
WalkKind parse_walk_kind(std::string_view name);

// Up-step probability in (0,1). Exact when built from a fraction; the
// double value is always available.
class Probability {
public:
    static Probability exact(const Rational& q);
    static Probability exact(long num, long den);
    static Probability approx(double q);
    // "a/b" gives an exact value, anything else is parsed as a decimal.
    static Probability parse(const std::string& text);

    bool is_exact() const { return exact_.has_value(); }
    const Rational& rational() const;
    double value() const { return value_; }
    // Decimal form for output records.
    std::string decimal() const;

private:
    Probability(double v, std::optional<Rational> e) : value_(v), exact_(std::move(e)) {}

    double value_;
    std::optional<Rational> exact_;
};

struct WalkParams {
    int T = 1;
    int s = 0;
    Probability q = Probability::exact(1, 2);

    // Throws std::invalid_argument on T < 1, or s < 0 for the reflected walk.
    void validate(WalkKind kind) const;
};

} // namespace walklt
