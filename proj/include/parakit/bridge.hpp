#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parakit/families.hpp"
#include "parakit/kernel.hpp"
#include "parakit/promise.hpp"
#include "parakit/reductions.hpp"
#include "parakit/report.hpp"
#include "parakit/universe.hpp"

namespace parakit {

// Downey-Fellows style: a decision predicate on (instance, natural) pairs.
template <class T>
struct DFProblem {
    std::function<bool(const T&, std::uint64_t)> pairs;
};

// Flum-Grohe style: a language with a parameter over the same universe.
template <class T>
struct FGProblem {
    Language<T> language;
    Parameter<T> kappa;
};

// '#' is reserved as the pad separator; base encodings must not use it.
inline constexpr char pad_separator = '#';

template <class T>
std::string pad_encode(const Universe<T>& base, const T& x, std::uint64_t k) {
    std::string w = base.encode(x);
    w.push_back(pad_separator);
    w.append(k, '1');
    return w;
}

// Splits a padded word into (base encoding, k); nullopt when malformed.
inline std::optional<std::pair<std::string, std::uint64_t>> pad_split(const std::string& w) {
    const auto sep = w.find(pad_separator);
    if (sep == std::string::npos) return std::nullopt;
    for (std::size_t i = sep + 1; i < w.size(); ++i)
        if (w[i] != '1') return std::nullopt;
    if (w.find(pad_separator, sep + 1) != std::string::npos) return std::nullopt;
    return std::make_pair(w.substr(0, sep), w.size() - sep - 1);
}

// Word universe of padded pairs x#1^k, enumerated through the Cantor
// pairing of (base index, k). Malformed words are valid strings but are
// never enumerated; the derived language and parameter stay total on them.
template <class T>
Universe<std::string> padded_universe(const Universe<T>& base, std::string name = "") {
    Universe<std::string> u;
    u.name = name.empty() ? base.name + "-padded" : std::move(name);
    u.enumerate = [base](std::uint64_t p) {
        auto [a, b] = cantor_unpair(p);
        return pad_encode(base, base.enumerate(a), b - 1);
    };
    u.encode = [](const std::string& w) { return w; };
    u.valid = [](const std::string& w) { return pad_split(w).has_value(); };
    return u;
}

// L' = { x#1^k : (x,k) in D }, with kappa' reading k from the padding and
// falling back to 1 on malformed words (which are non-members).
template <class T>
FGProblem<std::string> df_to_fg(const DFProblem<T>& d, const Universe<T>& base,
                                std::function<std::optional<T>(const std::string&)> decode) {
    Language<std::string> lang{
        "padded", [d, decode](const std::string& w) {
            auto parts = pad_split(w);
            if (!parts) return false;
            auto x = decode(parts->first);
            if (!x) return false;
            return d.pairs(*x, parts->second);
        }};
    Parameter<std::string> kappa{"pad-k", [decode](const std::string& w, Meter& m) {
                                     m.tick(w.size());
                                     auto parts = pad_split(w);
                                     if (!parts) return std::uint64_t(1);
                                     if (!decode(parts->first)) return std::uint64_t(1);
                                     return parts->second;
                                 }};
    return {std::move(lang), std::move(kappa)};
}

// (x,k) is a member iff x is in L and k = kappa(x).
template <class T>
DFProblem<T> fg_to_df(const FGProblem<T>& f) {
    return DFProblem<T>{[f](const T& x, std::uint64_t k) {
        return f.language(x) && f.kappa(x) == k;
    }};
}

// Union solver over the slices 1..c of an FG problem, assembled from
// solvers that decide each slice set { x in L : kappa(x) = i } as a plain
// language. The result solves (L, P) for every promise inside kappa_c; its
// behaviour outside kappa_c is unconstrained.
template <class T>
Solver<T> slice_union(const FGProblem<T>& f, std::uint64_t c,
                      std::function<Solver<T>(std::uint64_t)> slice_solvers) {
    std::vector<Solver<T>> solvers;
    for (std::uint64_t i = 1; i <= c; ++i) solvers.push_back(slice_solvers(i));
    return Solver<T>{"union<=" + std::to_string(c), [solvers](const T& x, Meter& m) {
                         for (const auto& s : solvers) {
                             m.tick();
                             if (s.run(x, m)) return true;
                         }
                         return false;
                     }};
}

// FPT to FPT' at witness level: M_i checks kappa(x) <= i (cost of the
// evaluation is metered) and runs M when it holds, rejecting otherwise.
// The result conforms to the rule (f, n) -> n^d + f * n^c, where d bounds
// the parameter evaluation.
template <class T>
UniformWitness<T> fpt_to_fptprime(const Solver<T>& m_solver, const Parameter<T>& kappa,
                                  std::function<std::uint64_t(std::uint64_t)> f, std::uint64_t c,
                                  std::uint64_t d, std::uint64_t slack = 1) {
    AlgorithmFamily<T> fam("gated(" + m_solver.name + ")", [m_solver, kappa](std::uint64_t i) {
        return Solver<T>{m_solver.name + "<=" + std::to_string(i),
                         [m_solver, kappa, i](const T& x, Meter& m) {
                             if (kappa.eval(x, m) > i) return false;
                             return m_solver.run(x, m);
                         }};
    });
    StepBudget budget;
    budget.rule = [c, d](std::uint64_t fv, std::uint64_t n) {
        std::uint64_t nc = 1, nd = 1;
        for (std::uint64_t i = 0; i < c; ++i) nc *= n;
        for (std::uint64_t i = 0; i < d; ++i) nd *= n;
        return nd + fv * nc;
    };
    budget.slack = slack;
    return UniformWitness<T>{std::move(fam), kappa, std::move(f), std::move(budget)};
}

// Classical fpt-reduction to strongly uniform reduction: r_i translates
// when kappa(x) <= i and otherwise emits the designated padding instance
// (the paper's empty word). Coherence holds by construction and the budget
// is (f(k)+1) * n^c.
template <class S, class D>
UniformReduction<S, D> fptred_to_su(const PromiseReductionFn<S, D>& m,
                                    const Parameter<S>& kappa,
                                    std::function<std::uint64_t(std::uint64_t)> f,
                                    std::uint64_t c, const D& otherwise) {
    UniformReduction<S, D> out(
        "gated(" + m.name + ")",
        [m, kappa, otherwise](std::uint64_t i) {
            return PromiseReductionFn<S, D>{
                m.name + "<=" + std::to_string(i), [m, kappa, otherwise, i](const S& x, Meter& mm) {
                    if (kappa.eval(x, mm) > i) {
                        mm.tick();
                        return otherwise;
                    }
                    return m.translate(x, mm);
                }};
        },
        kappa);
    auto f0 = std::move(f);
    out.f = [f0](std::uint64_t k) { return f0(k) + 1; };
    out.c = c;
    return out;
}

// kappa and tau are equivalent iff each is bounded by a function of the
// other; both tables are recorded and any growth trend makes the verdict
// inconclusive rather than negative.
template <class T>
VerificationReport param_equiv(const Parameter<T>& kappa, const Parameter<T>& tau,
                               const Truncation<T>& u, std::uint64_t cap,
                               std::string id = "param-equiv") {
    VerificationReport r;
    r.id = std::move(id);
    ParamLeqReport a = param_leq(kappa, tau, u, cap);
    ParamLeqReport b = param_leq(tau, kappa, u, cap);
    r.tables.push_back(a.table);
    r.tables.push_back(b.table);
    if (!a.bounded() || !b.bounded()) {
        r.status = Status::inconclusive;
        r.add_witness("growth-trend", "",
                      std::string(!a.bounded() ? kappa.name : tau.name) +
                          " not bounded against the other on this truncation");
    }
    return r;
}

} // namespace parakit
