#include "walklt/output.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace walklt {

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::vector<OutputRecord> to_records(const JointPMF& pmf, int digits) {
    const auto& p = pmf.params();
    OutputRecord base;
    base.walk = std::string(to_string(pmf.kind()));
    base.T = p.T;
    base.s = p.s;
    if (p.q.is_exact()) {
        base.q = to_string(p.q.rational());
        base.q_num = p.q.rational().get_num().get_str(10);
        base.q_den = p.q.rational().get_den().get_str(10);
    } else {
        base.q = format_double(p.q.value(), digits);
    }
    std::vector<OutputRecord> out;
    out.reserve(pmf.size());
    for (const auto& [cell, e] : pmf.entries()) {
        OutputRecord rec = base;
        rec.r = cell.r;
        rec.l = cell.l;
        rec.count = to_string(e.count);
        rec.probability = e.exact ? to_string(*e.exact) : format_double(e.probability, digits);
        out.push_back(std::move(rec));
    }
    return out;
}

void write_csv(const std::vector<OutputRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.walk << ',' << r.T << ',' << r.s << ',' << r.q << ',' << r.r << ',' << r.l << ',' << r.count << ','
            << r.probability << '\n';
    }
}

void write_json(const std::vector<OutputRecord>& records, std::ostream& out) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["walk"] = r.walk;
        j["T"] = r.T;
        j["s"] = r.s;
        j["q"] = r.q;
        if (!r.q_num.empty()) {
            j["q_num"] = r.q_num;
            j["q_den"] = r.q_den;
        }
        j["r"] = r.r;
        j["l"] = r.l;
        j["count"] = r.count;
        j["probability"] = r.probability;
        arr.push_back(std::move(j));
    }
    out << arr.dump(1) << '\n';
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    return out;
}

} // namespace

std::vector<OutputRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("read_csv: unexpected header");
    }
    std::vector<OutputRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line);
        if (f.size() != 8) {
            throw std::runtime_error("read_csv: expected 8 fields in '" + line + "'");
        }
        OutputRecord r;
        r.walk = f[0];
        r.T = std::stoi(f[1]);
        r.s = std::stoi(f[2]);
        r.q = f[3];
        if (const auto slash = r.q.find('/'); slash != std::string::npos) {
            r.q_num = r.q.substr(0, slash);
            r.q_den = r.q.substr(slash + 1);
        }
        r.r = std::stoi(f[4]);
        r.l = std::stoi(f[5]);
        r.count = f[6];
        r.probability = f[7];
        out.push_back(std::move(r));
    }
    return out;
}

Rational exact_mass(const std::vector<OutputRecord>& records) {
    Rational sum = 0;
    for (const auto& r : records) {
        if (r.probability.find('/') == std::string::npos) {
            throw std::runtime_error("exact_mass: record is not in rational form");
        }
        Rational p(r.probability, 10);
        p.canonicalize();
        sum += p;
    }
    return sum;
}

double float_mass(const std::vector<OutputRecord>& records) {
    double sum = 0.0;
    for (const auto& r : records) {
        if (r.probability.find('/') != std::string::npos) {
            Rational p(r.probability, 10);
            p.canonicalize();
            sum += p.get_d();
        } else {
            sum += std::stod(r.probability);
        }
    }
    return sum;
}

} // namespace walklt
