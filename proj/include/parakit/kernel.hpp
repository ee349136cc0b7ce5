#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parakit/language.hpp"
#include "parakit/report.hpp"
#include "parakit/universe.hpp"

namespace parakit {

// { x in U : kappa(x) <= c }, in enumeration order.
template <class T>
Truncation<T> slice(const Parameter<T>& kappa, std::uint64_t c, const Truncation<T>& u) {
    Truncation<T> out;
    for (const auto& x : u)
        if (kappa(x.value) <= c) out.push_back(x);
    return out;
}

enum class LeqVerdict { bounded, trend };

// Result of comparing two parameters on a finite truncation. The table is
// f(i) = max{ kappa(x) : tau(x) <= i }; empty slices are marked vacuous.
// A finite truncation can never prove unboundedness, so the verdict only
// reports a growth trend: an entry is unsettled when its value still grew
// within the final quarter of the enumeration, and the verdict is `trend`
// when every non-vacuous entry is unsettled (the profile of a parameter
// that keeps climbing with the universe, like degeneracy against the
// constant-one parameter).
struct ParamLeqReport {
    Table table;                 // entries for i = 0..cap
    LeqVerdict verdict = LeqVerdict::bounded;
    std::string kappa_name, tau_name;

    bool bounded() const { return verdict == LeqVerdict::bounded; }

    VerificationReport to_report(std::string id) const {
        VerificationReport r;
        r.id = std::move(id);
        r.status = bounded() ? Status::pass : Status::inconclusive;
        r.tables.push_back(table);
        if (!bounded())
            r.add_witness("growth-trend", "",
                          kappa_name + " keeps growing against " + tau_name +
                              " on every tested slice");
        return r;
    }
};

template <class T>
ParamLeqReport param_leq(const Parameter<T>& kappa, const Parameter<T>& tau,
                         const Truncation<T>& u, std::uint64_t cap) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> vals; // (kappa, tau)
    vals.reserve(u.size());
    for (const auto& x : u) vals.emplace_back(kappa(x.value), tau(x.value));

    const std::size_t early = (u.size() * 3 + 3) / 4; // first three quarters

    ParamLeqReport rep;
    rep.kappa_name = kappa.name;
    rep.tau_name = tau.name;
    rep.table.name = "f[" + kappa.name + "<=f(" + tau.name + ")]";

    std::size_t unsettled = 0, nonvacuous = 0;
    for (std::uint64_t i = 0; i <= cap; ++i) {
        TableEntry e;
        e.index = i;
        bool any = false, any_early = false;
        std::uint64_t fmax = 0, fmax_early = 0;
        for (std::size_t j = 0; j < vals.size(); ++j) {
            if (vals[j].second > i) continue;
            any = true;
            fmax = std::max(fmax, vals[j].first);
            if (j < early) {
                any_early = true;
                fmax_early = std::max(fmax_early, vals[j].first);
            }
        }
        if (!any) {
            e.vacuous = true;
        } else {
            e.value = fmax;
            e.settled = any_early && fmax_early == fmax;
            ++nonvacuous;
            if (!e.settled) ++unsettled;
        }
        rep.table.entries.push_back(e);
    }
    rep.verdict = (nonvacuous > 0 && unsettled == nonvacuous) ? LeqVerdict::trend
                                                              : LeqVerdict::bounded;
    return rep;
}

enum class CombineMode { sum, product, max };

inline const char* to_string(CombineMode m) {
    switch (m) {
        case CombineMode::sum: return "sum";
        case CombineMode::product: return "product";
        default: return "max";
    }
}

// Pointwise arithmetic combination. Any two modes are mutually bounded in
// the preorder (for values >= 1: sum <= 2 max <= 2 sum, product <= sum^2).
template <class T>
Parameter<T> combine(const Parameter<T>& kappa, const Parameter<T>& tau, CombineMode mode) {
    std::string name = std::string(to_string(mode)) + "(" + kappa.name + "," + tau.name + ")";
    return Parameter<T>{std::move(name), [kappa, tau, mode](const T& x, Meter& m) {
                            const std::uint64_t a = kappa.eval(x, m);
                            const std::uint64_t b = tau.eval(x, m);
                            switch (mode) {
                                case CombineMode::sum: return a + b;
                                case CombineMode::product: return a * b;
                                default: return std::max(a, b);
                            }
                        }};
}

// Lattice operators on parameterizations via their representatives:
// meet (intersection) takes the pointwise max, join the pointwise min.
template <class T>
Parameterization<T> meet(const Parameterization<T>& p, const Parameterization<T>& q) {
    require_same_universe(p, q);
    return {combine(p.representative, q.representative, CombineMode::max), "constructed",
            p.universe_name};
}

template <class T>
Parameterization<T> join(const Parameterization<T>& p, const Parameterization<T>& q) {
    require_same_universe(p, q);
    Parameter<T> a = p.representative, b = q.representative;
    Parameter<T> rep{"min(" + a.name + "," + b.name + ")",
                     [a, b](const T& x, Meter& m) { return std::min(a.eval(x, m), b.eval(x, m)); }};
    return {std::move(rep), "constructed", p.universe_name};
}

// Top of the lattice: every language is bounded by the constant-one
// parameter.
template <class T>
Parameterization<T> canonical_all(const Universe<T>& u) {
    return {constant_parameter<T>(1, "one"), "canonical", u.name};
}

// Bottom of the lattice: exactly the finite languages, represented by the
// enumeration index.
template <class T>
Parameterization<T> canonical_fin(const Universe<T>& u, std::shared_ptr<IndexCache<T>> cache) {
    Parameter<T> rep{"index",
                     [cache, u](const T& x, Meter& m) {
                         m.tick(u.encode(x).size());
                         return cache->index_of(x);
                     }};
    return {std::move(rep), "canonical", u.name};
}

// Componentwise product on a pair universe; representative is the max of
// the component representatives.
template <class A, class B>
Parameterization<std::pair<A, B>> product(const Parameterization<A>& p,
                                          const Parameterization<B>& q,
                                          std::string universe_name = "") {
    Parameter<A> pa = p.representative;
    Parameter<B> pb = q.representative;
    Parameter<std::pair<A, B>> rep{
        "max(" + pa.name + "x" + pb.name + ")", [pa, pb](const std::pair<A, B>& x, Meter& m) {
            return std::max(pa.eval(x.first, m), pb.eval(x.second, m));
        }};
    return {std::move(rep), "constructed", std::move(universe_name)};
}

} // namespace parakit
