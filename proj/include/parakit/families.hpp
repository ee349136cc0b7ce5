#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parakit/kernel.hpp"
#include "parakit/meter.hpp"
#include "parakit/promise.hpp"
#include "parakit/report.hpp"
#include "parakit/universe.hpp"

namespace parakit {

// An indexed sequence of solvers M_1, M_2, ... produced by a computable
// generator. Generated members are cached so repeated verification passes
// stay cheap.
template <class T>
class AlgorithmFamily {
public:
    AlgorithmFamily() = default;
    AlgorithmFamily(std::string description, std::function<Solver<T>(std::uint64_t)> generator)
        : description_(std::move(description)),
          generator_(std::move(generator)),
          cache_(std::make_shared<std::map<std::uint64_t, Solver<T>>>()) {}

    const std::string& description() const { return description_; }

    const Solver<T>& member(std::uint64_t k) const {
        auto it = cache_->find(k);
        if (it == cache_->end()) it = cache_->emplace(k, generator_(k)).first;
        return it->second;
    }

private:
    std::string description_;
    std::function<Solver<T>(std::uint64_t)> generator_;
    std::shared_ptr<std::map<std::uint64_t, Solver<T>>> cache_;
};

// A family plus the selector parameter that witnesses uniform membership;
// f and budget are carried only for strongly uniform claims.
template <class T>
struct UniformWitness {
    AlgorithmFamily<T> family;
    Parameter<T> selector;
    std::optional<std::function<std::uint64_t(std::uint64_t)>> f;
    std::optional<StepBudget> budget;
};

// Pointwise selector table: kappa(x) = least k <= cap with M_k(x) = L(x).
// Instances with no correct index within the cap are listed as unresolved;
// the table still covers the resolved ones.
template <class T>
struct SelectorTable {
    std::unordered_map<std::string, std::uint64_t> values; // by canonical encoding
    Truncation<T> unresolved;
    std::string name = "selector";

    Parameter<T> as_parameter(const Universe<T>& u) const {
        auto table = values;
        std::string n = name;
        return Parameter<T>{std::move(n), [table, u](const T& x, Meter& m) {
                                const std::string key = u.encode(x);
                                m.tick(key.size());
                                auto it = table.find(key);
                                if (it == table.end())
                                    throw std::out_of_range(
                                        "selector table has no entry for " + key);
                                return it->second;
                            }};
    }
};

template <class T>
SelectorTable<T> selector(const AlgorithmFamily<T>& fam, const Language<T>& lang,
                          const Truncation<T>& u, std::uint64_t cap, const Universe<T>& universe) {
    SelectorTable<T> out;
    for (const auto& x : u) {
        const bool truth = lang(x.value);
        bool found = false;
        for (std::uint64_t k = 1; k <= cap; ++k) {
            if (fam.member(k)(x.value) == truth) {
                out.values.emplace(universe.encode(x.value), k);
                found = true;
                break;
            }
        }
        if (!found) out.unresolved.push_back(x);
    }
    return out;
}

// Strong monotonicity w.r.t. L: once M_{i-1} answers x correctly, M_i does
// too.
template <class T>
VerificationReport check_strong_monotone(const AlgorithmFamily<T>& fam, const Language<T>& lang,
                                         const Truncation<T>& u, std::uint64_t cap,
                                         const Universe<T>& universe,
                                         std::string id = "check-strong-monotone") {
    VerificationReport r;
    r.id = std::move(id);
    for (std::uint64_t i = 2; i <= cap; ++i) {
        for (const auto& x : u) {
            const bool truth = lang(x.value);
            if (fam.member(i - 1)(x.value) == truth && fam.member(i)(x.value) != truth) {
                r.status = Status::fail;
                r.add_witness("monotonicity-broken", universe.encode(x.value),
                              "correct at index " + std::to_string(i - 1) + ", wrong at " +
                                  std::to_string(i));
                return r;
            }
        }
    }
    return r;
}

// One-sidedness: the family never answers yes on a non-member. This is the
// precondition under which or_combine yields a strongly monotone family.
template <class T>
VerificationReport check_one_sided(const AlgorithmFamily<T>& fam, const Language<T>& lang,
                                   const Truncation<T>& u, std::uint64_t cap,
                                   const Universe<T>& universe,
                                   std::string id = "check-one-sided") {
    VerificationReport r;
    r.id = std::move(id);
    for (std::uint64_t k = 1; k <= cap; ++k)
        for (const auto& x : u)
            if (fam.member(k)(x.value) && !lang(x.value)) {
                r.status = Status::fail;
                r.add_witness("false-yes", universe.encode(x.value),
                              "member " + std::to_string(k) + " accepts a non-member");
                return r;
            }
    return r;
}

// M'_k accepts iff some M_i with i <= k accepts. The cost of the combined
// member is at most the sum of the members' costs plus one unit per member
// consulted.
template <class T>
AlgorithmFamily<T> or_combine(const AlgorithmFamily<T>& fam) {
    return AlgorithmFamily<T>(
        "or(" + fam.description() + ")", [fam](std::uint64_t k) {
            return Solver<T>{"or<=" + std::to_string(k), [fam, k](const T& x, Meter& m) {
                                 bool yes = false;
                                 for (std::uint64_t i = 1; i <= k; ++i) {
                                     m.tick();
                                     if (fam.member(i).run(x, m)) {
                                         yes = true;
                                         break;
                                     }
                                 }
                                 return yes;
                             }};
        });
}

// Uniform membership at desk scale: (a) the parameterization is inside
// K(selector), shown by a bounded param_leq table against the
// representative; (b) L agrees with L(M_i) on every selector slice up to
// the cap. A growth trend on (a) is inconclusive, not a failure.
template <class T>
VerificationReport verify_uniform(const Language<T>& lang, const Parameterization<T>& p,
                                  const UniformWitness<T>& w, const Truncation<T>& u,
                                  std::uint64_t index_cap, std::uint64_t param_cap,
                                  const Universe<T>& universe,
                                  std::string id = "verify-uniform") {
    VerificationReport r;
    r.id = std::move(id);

    ParamLeqReport leq = param_leq(w.selector, p.representative, u, param_cap);
    r.tables.push_back(leq.table);
    if (!leq.bounded()) {
        r.status = Status::inconclusive;
        r.add_witness("selector-not-bounded", "",
                      "param_leq(" + w.selector.name + ", " + p.representative.name +
                          ") reports a growth trend");
        return r;
    }

    for (std::uint64_t i = 1; i <= index_cap; ++i) {
        const auto& solver = w.family.member(i);
        for (const auto& x : u) {
            if (w.selector(x.value) > i) continue;
            if (solver(x.value) != lang(x.value)) {
                r.status = Status::fail;
                r.add_witness("slice-disagreement", universe.encode(x.value),
                              "L and L(M_" + std::to_string(i) + ") differ inside slice " +
                                  std::to_string(i));
                return r;
            }
        }
    }
    return r;
}

// Strongly uniform membership: uniform membership plus the budget
// r(f(k), |x|) on every run up to the caps.
template <class T>
VerificationReport verify_strongly_uniform(const Language<T>& lang, const Parameterization<T>& p,
                                           const UniformWitness<T>& w, const Truncation<T>& u,
                                           std::uint64_t index_cap, std::uint64_t param_cap,
                                           const Universe<T>& universe,
                                           std::string id = "verify-strongly-uniform") {
    VerificationReport r = verify_uniform(lang, p, w, u, index_cap, param_cap, universe, id);
    if (r.status != Status::pass) return r;
    if (!w.f || !w.budget) {
        r.status = Status::fail;
        r.add_witness("missing-bound", "", "witness carries no f or budget");
        return r;
    }

    Table budget_table;
    budget_table.name = "max-cost-per-index";
    for (std::uint64_t k = 1; k <= index_cap; ++k) {
        const auto& solver = w.family.member(k);
        std::uint64_t worst = 0;
        for (const auto& x : u) {
            Meter m;
            solver.run(x.value, m);
            const std::uint64_t allowed = w.budget->allowed((*w.f)(k), universe.length(x.value));
            worst = std::max(worst, m.steps);
            if (m.steps > allowed) {
                r.status = Status::fail;
                r.add_witness("budget-violation", universe.encode(x.value),
                              "k=" + std::to_string(k) + " measured " + std::to_string(m.steps) +
                                  " allowed " + std::to_string(allowed));
                r.tables.push_back(budget_table);
                return r;
            }
        }
        budget_table.entries.push_back({k, worst, u.empty(), true});
    }
    r.tables.push_back(budget_table);
    return r;
}

// Fits the multiplicative slack on the enumeration-order calibration
// prefix (the first `calibration_fraction` of the truncation): the least
// integer slack making every calibration run conform.
template <class T>
std::uint64_t calibrate_slack(const AlgorithmFamily<T>& fam,
                              const std::function<std::uint64_t(std::uint64_t)>& f,
                              const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& rule,
                              const Truncation<T>& u, std::uint64_t index_cap,
                              const Universe<T>& universe, double calibration_fraction = 0.2) {
    const std::size_t prefix = std::max<std::size_t>(1, std::size_t(u.size() * calibration_fraction));
    std::uint64_t slack = 1;
    for (std::uint64_t k = 1; k <= index_cap; ++k) {
        const auto& solver = fam.member(k);
        for (std::size_t j = 0; j < prefix && j < u.size(); ++j) {
            Meter m;
            solver.run(u[j].value, m);
            const std::uint64_t base = rule(f(k), universe.length(u[j].value));
            if (base == 0) continue; // unattainable rule, leave slack alone
            const std::uint64_t need = (m.steps + base - 1) / base;
            slack = std::max(slack, need);
        }
    }
    return slack;
}

} // namespace parakit
