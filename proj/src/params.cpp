#include "walklt/params.hpp"

#include <cstdio>
#include <stdexcept>

namespace walklt {

std::string_view to_string(WalkKind kind) {
    return kind == WalkKind::reflected ? "rsrw" : "srw";
}

WalkKind parse_walk_kind(std::string_view name) {
    if (name == "rsrw" || name == "reflected") {
        return WalkKind::reflected;
    }
    if (name == "srw" || name == "simple") {
        return WalkKind::simple;
    }
    throw std::invalid_argument("unknown walk kind: " + std::string(name));
}

Probability Probability::exact(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c <= 0 || c >= 1) {
        throw std::invalid_argument("q must lie strictly between 0 and 1, got " + walklt::to_string(c));
    }
    return Probability(c.get_d(), c);
}

Probability Probability::exact(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("q: zero denominator");
    }
    return exact(Rational(num, den));
}

Probability Probability::approx(double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("q must lie strictly between 0 and 1, got " + std::to_string(q));
    }
    return Probability(q, std::nullopt);
}

Probability Probability::parse(const std::string& text) {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        Rational r;
        try {
            r = Rational(text, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("q: cannot parse fraction '" + text + "'");
        }
        if (r.get_den() == 0) {
            throw std::invalid_argument("q: zero denominator");
        }
        return exact(r);
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("q: cannot parse '" + text + "'");
    }
    if (used != text.size()) {
        throw std::invalid_argument("q: cannot parse '" + text + "'");
    }
    return approx(v);
}

const Rational& Probability::rational() const {
    if (!exact_) {
        throw std::logic_error("probability has no exact value");
    }
    return *exact_;
}

std::string Probability::decimal() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", value_);
    return buf;
}

void WalkParams::validate(WalkKind kind) const {
    if (T < 1) {
        throw std::invalid_argument("T must be at least 1");
    }
    if (kind == WalkKind::reflected && s < 0) {
        throw std::invalid_argument("the reflected walk needs s >= 0");
    }
}

} // namespace walklt
