#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parakit/kernel.hpp"
#include "parakit/language.hpp"
#include "parakit/meter.hpp"
#include "parakit/report.hpp"
#include "parakit/universe.hpp"

namespace parakit {

// A language together with the promise on which it must be decided.
template <class T>
struct PromiseProblem {
    Language<T> language;
    Language<T> promise;
};

template <class T>
Language<T> full_promise(std::string name = "all") {
    return Language<T>{std::move(name), [](const T&) { return true; }};
}

// A metered total decision procedure.
template <class T>
struct Solver {
    std::string name;
    std::function<bool(const T&, Meter&)> decide;

    bool operator()(const T& x) const {
        Meter scratch;
        return decide(x, scratch);
    }

    bool run(const T& x, Meter& m) const { return decide(x, m); }
};

// A metered total translation, possibly across universes.
template <class S, class D>
struct PromiseReductionFn {
    std::string name;
    std::function<D(const S&, Meter&)> translate;

    D operator()(const S& x) const {
        Meter scratch;
        return translate(x, scratch);
    }
};

// Passes iff the solver agrees with the language on every promised
// instance of the truncation; the first counterexample in enumeration
// order is reported.
template <class T>
VerificationReport check_solves(const Solver<T>& s, const PromiseProblem<T>& prob,
                                const Truncation<T>& u, const Universe<T>& universe,
                                std::string id = "check-solves") {
    VerificationReport r;
    r.id = std::move(id);
    for (const auto& x : u) {
        if (!prob.promise(x.value)) continue;
        const bool truth = prob.language(x.value);
        if (s(x.value) != truth) {
            r.status = Status::fail;
            r.add_witness("solver-disagrees", universe.encode(x.value),
                          "truth " + std::string(truth ? "yes" : "no") + ", " + s.name +
                              " answers " + (truth ? "no" : "yes") + " (index " +
                              std::to_string(x.index) + ")");
            return r;
        }
    }
    return r;
}

// Checks the two promise-reduction conditions on every promised source
// instance: membership is preserved, and the image lands in the target
// promise. A translation that leaves the target universe is reported as
// its own witness kind, distinct from a plain condition failure.
template <class S, class D>
VerificationReport check_promise_reduction(const PromiseReductionFn<S, D>& red,
                                           const PromiseProblem<S>& src,
                                           const PromiseProblem<D>& tgt,
                                           const Truncation<S>& u,
                                           const Universe<S>& src_universe,
                                           const Universe<D>& tgt_universe,
                                           std::string id = "check-promise-reduction") {
    VerificationReport r;
    r.id = std::move(id);
    for (const auto& x : u) {
        if (!src.promise(x.value)) continue;
        const D y = red(x.value);
        if (!tgt_universe.valid(y)) {
            r.status = Status::fail;
            r.add_witness("out-of-universe", src_universe.encode(x.value),
                          "translation left universe " + tgt_universe.name);
            return r;
        }
        if (src.language(x.value) != tgt.language(y)) {
            r.status = Status::fail;
            r.add_witness("membership-not-preserved", src_universe.encode(x.value),
                          "r(x) = " + tgt_universe.encode(y));
            return r;
        }
        if (!tgt.promise(y)) {
            r.status = Status::fail;
            r.add_witness("image-outside-promise", src_universe.encode(x.value),
                          "r(x) = " + tgt_universe.encode(y));
            return r;
        }
    }
    return r;
}

// Composition r2 after r1; meters accumulate through both translations.
template <class A, class B, class C>
PromiseReductionFn<A, C> compose_reductions(const PromiseReductionFn<A, B>& r1,
                                            const PromiseReductionFn<B, C>& r2) {
    return PromiseReductionFn<A, C>{r2.name + "∘" + r1.name, [r1, r2](const A& x, Meter& m) {
                                        return r2.translate(r1.translate(x, m), m);
                                    }};
}

// Non-uniform class membership relative to an explicit solver catalog: for
// every slice of the representative up to the cap, some catalog solver must
// agree with the language on the slice. Records the slice -> solver
// assignment as a table (solver entry index, 1-based; vacuous for empty
// slices).
template <class T>
VerificationReport in_class_nonuniform(const Language<T>& lang, const Parameterization<T>& p,
                                       const std::vector<Solver<T>>& catalog,
                                       const Truncation<T>& u, const Universe<T>& universe,
                                       std::uint64_t cap,
                                       std::string id = "in-class-nonuniform") {
    VerificationReport r;
    r.id = std::move(id);
    Table assignment;
    assignment.name = "slice-solver-assignment";
    for (std::uint64_t i = 1; i <= cap; ++i) {
        auto sl = slice(p.representative, i, u);
        TableEntry e;
        e.index = i;
        if (sl.empty()) {
            e.vacuous = true;
            assignment.entries.push_back(e);
            continue;
        }
        bool covered = false;
        for (std::size_t s = 0; s < catalog.size() && !covered; ++s) {
            bool ok = true;
            for (const auto& x : sl)
                if (catalog[s](x.value) != lang(x.value)) {
                    ok = false;
                    break;
                }
            if (ok) {
                covered = true;
                e.value = s + 1;
            }
        }
        assignment.entries.push_back(e);
        if (!covered) {
            r.status = Status::fail;
            const auto& w = sl.front();
            // report the first instance of the slice no catalog member handles
            std::string inst = universe.encode(w.value);
            for (const auto& x : sl) {
                bool all_wrong_somewhere = true;
                for (const auto& s : catalog)
                    if (s(x.value) == lang(x.value)) all_wrong_somewhere = false;
                if (all_wrong_somewhere) {
                    inst = universe.encode(x.value);
                    break;
                }
            }
            r.add_witness("slice-uncovered", inst, "slice " + std::to_string(i));
            r.tables.push_back(assignment);
            return r;
        }
    }
    r.tables.push_back(assignment);
    return r;
}

// Lookup solvers: solver i answers by table lookup on the first i
// instances and rejects beyond. A catalog of these covers any language
// with the finite parameterization.
template <class T>
std::vector<Solver<T>> lookup_catalog(const Language<T>& lang, const Truncation<T>& u,
                                      std::uint64_t cap, const Universe<T>& universe) {
    std::vector<Solver<T>> out;
    for (std::uint64_t i = 1; i <= cap; ++i) {
        std::unordered_map<std::string, bool> table;
        for (const auto& x : u)
            if (x.index <= i) table.emplace(universe.encode(x.value), lang(x.value));
        out.push_back(Solver<T>{"lookup-" + std::to_string(i),
                                [table, universe](const T& x, Meter& m) {
                                    m.tick(table.size() ? table.size() : 1);
                                    auto it = table.find(universe.encode(x));
                                    return it != table.end() && it->second;
                                }});
    }
    return out;
}

} // namespace parakit
