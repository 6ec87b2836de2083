#include "walklt/distribution.hpp"

#include "walklt/combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace walklt {

JointPMF::JointPMF(WalkKind kind, WalkParams params, Entries entries, bool has_counts)
    : kind_(kind), params_(std::move(params)), entries_(std::move(entries)), has_counts_(has_counts) {}

const PmfEntry* JointPMF::find(int r, int l) const {
    const auto it = entries_.find(Cell{r, l});
    return it == entries_.end() ? nullptr : &it->second;
}

double JointPMF::probability(int r, int l) const {
    const auto* e = find(r, l);
    return e ? e->probability : 0.0;
}

double JointPMF::total() const {
    double sum = 0.0;
    for (const auto& [cell, e] : entries_) {
        sum += e.probability;
    }
    return sum;
}

Rational JointPMF::exact_total() const {
    if (!is_exact()) {
        throw std::logic_error("exact_total: pmf is not in rational mode");
    }
    Rational sum = 0;
    for (const auto& [cell, e] : entries_) {
        sum += *e.exact;
    }
    return sum;
}

namespace {

// Powers q^0..q^n and (1-q)^0..(1-q)^n, exact or in log space.
class PowerTable {
public:
    PowerTable(const Probability& q, int n) : exact_(q.is_exact()) {
        log_up_ = std::log(q.value());
        log_down_ = std::log1p(-q.value());
        if (exact_) {
            const Rational up = q.rational();
            const Rational down = 1 - up;
            up_.resize(n + 1);
            down_.resize(n + 1);
            up_[0] = 1;
            down_[0] = 1;
            for (int i = 1; i <= n; ++i) {
                up_[i] = up_[i - 1] * up;
                down_[i] = down_[i - 1] * down;
            }
        }
    }

    PmfEntry entry(BigInt count, int ups, int downs) const {
        PmfEntry e;
        if (exact_) {
            Rational p = Rational(count) * up_.at(ups) * down_.at(downs);
            p.canonicalize();
            e.probability = p.get_d();
            e.exact = std::move(p);
        } else {
            e.probability = std::exp(log_of(count) + ups * log_up_ + downs * log_down_);
        }
        e.count = std::move(count);
        return e;
    }

private:
    bool exact_;
    double log_up_ = 0.0;
    double log_down_ = 0.0;
    std::vector<Rational> up_;
    std::vector<Rational> down_;
};

} // namespace

JointPMF rsrw_joint_pmf(const WalkParams& params) {
    params.validate(WalkKind::reflected);
    const int T = params.T;
    const int s = params.s;
    const PowerTable powers(params.q, T);
    JointPMF::Entries entries;
    for (int r = std::max(0, s - T); r <= s + T; ++r) {
        const int lmax = rsrw_max_local_time(T, s, r);
        for (int l = 0; l <= lmax; ++l) {
            BigInt count = nt_count(T, s, r, l);
            if (sgn(count) == 0) {
                continue;
            }
            // Forced up-steps at zero carry probability 1.
            const int ups = (T + r - s) / 2 - l + (r == 0 ? 1 : 0) - (s == 0 ? 1 : 0);
            const int downs = (T - r + s) / 2;
            entries.emplace(Cell{r, l}, powers.entry(std::move(count), ups, downs));
        }
    }
    return JointPMF(WalkKind::reflected, params, std::move(entries));
}

JointPMF srw_joint_pmf(const WalkParams& params) {
    params.validate(WalkKind::simple);
    const int T = params.T;
    const int s = params.s;
    const PowerTable powers(params.q, T);
    JointPMF::Entries entries;
    for (int r = s - T; r <= s + T; r += 2) {
        const int lmax = srw_max_local_time(T, s, r);
        for (int l = 0; l <= lmax; ++l) {
            BigInt count = mt_count(T, s, r, l);
            if (sgn(count) == 0) {
                continue;
            }
            entries.emplace(Cell{r, l}, powers.entry(std::move(count), (T + r - s) / 2, (T - r + s) / 2));
        }
    }
    return JointPMF(WalkKind::simple, params, std::move(entries));
}

JointPMF joint_pmf(WalkKind kind, const WalkParams& params) {
    return kind == WalkKind::reflected ? rsrw_joint_pmf(params) : srw_joint_pmf(params);
}

namespace {

template <typename Key>
std::map<int, double> marginal(const JointPMF& pmf, Key key) {
    std::map<int, double> out;
    for (const auto& [cell, e] : pmf.entries()) {
        out[key(cell)] += e.probability;
    }
    return out;
}

template <typename Key>
std::map<int, Rational> marginal_exact(const JointPMF& pmf, Key key) {
    if (!pmf.is_exact()) {
        throw std::logic_error("exact marginal requested from a float-mode pmf");
    }
    std::map<int, Rational> out;
    for (const auto& [cell, e] : pmf.entries()) {
        out[key(cell)] += *e.exact;
    }
    return out;
}

// E[other | key] over the support of key.
template <typename Key, typename Other>
std::map<int, double> conditional_mean(const JointPMF& pmf, Key key, Other other) {
    std::map<int, std::pair<double, double>> acc;
    for (const auto& [cell, e] : pmf.entries()) {
        auto& [mass, moment] = acc[key(cell)];
        mass += e.probability;
        moment += other(cell) * e.probability;
    }
    std::map<int, double> out;
    for (const auto& [k, mm] : acc) {
        if (mm.first > 0.0) {
            out.emplace(k, mm.second / mm.first);
        }
    }
    return out;
}

int value_of(const Cell& c) { return c.r; }
int local_time_of(const Cell& c) { return c.l; }

} // namespace

std::map<int, double> value_marginal(const JointPMF& pmf) { return marginal(pmf, value_of); }

std::map<int, double> local_time_marginal(const JointPMF& pmf) { return marginal(pmf, local_time_of); }

std::map<int, Rational> value_marginal_exact(const JointPMF& pmf) { return marginal_exact(pmf, value_of); }

std::map<int, Rational> local_time_marginal_exact(const JointPMF& pmf) {
    return marginal_exact(pmf, local_time_of);
}

std::map<int, double> conditional_expectation_l_given_r(const JointPMF& pmf) {
    return conditional_mean(pmf, value_of, local_time_of);
}

std::map<int, double> conditional_expectation_r_given_l(const JointPMF& pmf) {
    return conditional_mean(pmf, local_time_of, value_of);
}

namespace {

MixtureComponent make_component(const JointPMF& pmf, MixtureLabel label) {
    const bool want_visits = label == MixtureLabel::zero_visiting;
    JointPMF::Entries part;
    double weight = 0.0;
    Rational exact_weight = 0;
    for (const auto& [cell, e] : pmf.entries()) {
        if ((cell.l > 0) != want_visits) {
            continue;
        }
        weight += e.probability;
        if (pmf.is_exact()) {
            exact_weight += *e.exact;
        }
        part.emplace(cell, e);
    }
    for (auto& [cell, e] : part) {
        if (pmf.is_exact()) {
            *e.exact /= exact_weight;
            e.probability = e.exact->get_d();
        } else {
            e.probability /= weight;
        }
    }
    MixtureComponent out{label, weight, std::nullopt,
                         JointPMF(pmf.kind(), pmf.params(), std::move(part), pmf.has_counts())};
    if (pmf.is_exact()) {
        out.weight = exact_weight.get_d();
        out.exact_weight = exact_weight;
    }
    return out;
}

} // namespace

MixtureDecomposition mixture_decompose(const JointPMF& pmf) {
    return MixtureDecomposition{make_component(pmf, MixtureLabel::no_zero_visits),
                                make_component(pmf, MixtureLabel::zero_visiting),
                                pmf.params().s == 0};
}

JointPMF merge(const MixtureDecomposition& parts) {
    const JointPMF& a = parts.no_visits.conditional;
    JointPMF::Entries merged;
    for (const auto* c : {&parts.no_visits, &parts.visits}) {
        for (const auto& [cell, e] : c->conditional.entries()) {
            PmfEntry m = e;
            if (m.exact) {
                *m.exact *= *c->exact_weight;
                m.probability = m.exact->get_d();
            } else {
                m.probability *= c->weight;
            }
            merged.emplace(cell, std::move(m));
        }
    }
    return JointPMF(a.kind(), a.params(), std::move(merged), a.has_counts());
}

} // namespace walklt
