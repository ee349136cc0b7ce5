#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parakit/families.hpp"
#include "parakit/kernel.hpp"
#include "parakit/promise.hpp"
#include "parakit/report.hpp"
#include "parakit/universe.hpp"

namespace parakit {

// An indexed family of translation functions r_k with the selector that
// tells which index is guaranteed to translate an instance; f and c are
// carried only for strongly uniform budgets (f(k) * |x|^c).
template <class S, class D>
class UniformReduction {
public:
    UniformReduction() = default;
    UniformReduction(std::string description,
                     std::function<PromiseReductionFn<S, D>(std::uint64_t)> generator,
                     Parameter<S> selector)
        : description_(std::move(description)),
          generator_(std::move(generator)),
          selector_(std::move(selector)),
          cache_(std::make_shared<std::map<std::uint64_t, PromiseReductionFn<S, D>>>()) {}

    const std::string& description() const { return description_; }
    const Parameter<S>& selector() const { return selector_; }

    const PromiseReductionFn<S, D>& member(std::uint64_t k) const {
        auto it = cache_->find(k);
        if (it == cache_->end()) it = cache_->emplace(k, generator_(k)).first;
        return it->second;
    }

    std::optional<std::function<std::uint64_t(std::uint64_t)>> f;
    std::optional<std::uint64_t> c; // budget exponent

private:
    std::string description_;
    std::function<PromiseReductionFn<S, D>(std::uint64_t)> generator_;
    Parameter<S> selector_;
    std::shared_ptr<std::map<std::uint64_t, PromiseReductionFn<S, D>>> cache_;
};

struct ReductionCaps {
    std::uint64_t index_cap = 4; // i ranges over 1..index_cap
    std::uint64_t param_cap = 5; // cap for the selector-vs-representative table
    std::uint64_t image_cap = 16; // largest admissible target slice index
};

// Checks the three conditions of a uniform reduction on a truncation:
//   1. the source parameterization is inside K(selector) (bounded table);
//   2. every r_i translates its selector slice correctly and maps it into
//      some slice j <= image_cap of the target representative (the i -> j
//      table is recorded);
//   3. coherence: kappa(x) <= i implies r_{kappa(x)}(x) = r_i(x).
// Each condition failure carries its own witness kind.
template <class S, class D>
VerificationReport verify_uniform_reduction(const UniformReduction<S, D>& red,
                                            const Language<S>& src_lang,
                                            const Parameterization<S>& src_p,
                                            const Language<D>& tgt_lang,
                                            const Parameterization<D>& tgt_p,
                                            const Truncation<S>& u,
                                            const Universe<S>& src_u, const Universe<D>& tgt_u,
                                            const ReductionCaps& caps,
                                            std::string id = "verify-uniform-reduction") {
    VerificationReport r;
    r.id = std::move(id);

    ParamLeqReport leq = param_leq(red.selector(), src_p.representative, u, caps.param_cap);
    r.tables.push_back(leq.table);
    if (!leq.bounded()) {
        r.status = Status::inconclusive;
        r.add_witness("selector-not-bounded", "", "condition 1 reports a growth trend");
        return r;
    }

    std::vector<std::uint64_t> sel(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) sel[j] = red.selector()(u[j].value);

    Table image;
    image.name = "image-slice";
    for (std::uint64_t i = 1; i <= caps.index_cap; ++i) {
        const auto& ri = red.member(i);
        TableEntry e;
        e.index = i;
        bool any = false;
        std::uint64_t j_max = 0;
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (sel[j] > i) continue;
            any = true;
            const D y = ri(u[j].value);
            if (!tgt_u.valid(y)) {
                r.status = Status::fail;
                r.add_witness("out-of-universe", src_u.encode(u[j].value),
                              "condition 2: r_" + std::to_string(i) + " left the target universe");
                return r;
            }
            if (src_lang(u[j].value) != tgt_lang(y)) {
                r.status = Status::fail;
                r.add_witness("membership-not-preserved", src_u.encode(u[j].value),
                              "condition 2 at index " + std::to_string(i) +
                                  ", r(x) = " + tgt_u.encode(y));
                return r;
            }
            j_max = std::max(j_max, tgt_p.representative(y));
        }
        if (!any) {
            e.vacuous = true;
        } else if (j_max > caps.image_cap) {
            r.status = Status::fail;
            r.add_witness("image-outside-slices", "",
                          "condition 2: image of slice " + std::to_string(i) +
                              " needs target slice " + std::to_string(j_max) + " > cap " +
                              std::to_string(caps.image_cap));
            return r;
        } else {
            e.value = j_max;
        }
        image.entries.push_back(e);
    }
    r.tables.push_back(image);

    for (std::uint64_t i = 1; i <= caps.index_cap; ++i) {
        const auto& ri = red.member(i);
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (sel[j] > i) continue;
            const auto& rk = red.member(sel[j]);
            if (tgt_u.encode(rk(u[j].value)) != tgt_u.encode(ri(u[j].value))) {
                r.status = Status::fail;
                r.add_witness("coherence-broken", src_u.encode(u[j].value),
                              "condition 3: r_" + std::to_string(sel[j]) + "(x) != r_" +
                                  std::to_string(i) + "(x)");
                return r;
            }
        }
    }
    return r;
}

// Lemma 2 construction: r''_i = r'_i o r_i, and the composite selector is
// max(kappa(x), kappa'(r_{kappa(x)}(x))).
template <class A, class B, class C>
UniformReduction<A, C> compose(const UniformReduction<A, B>& r1, const UniformReduction<B, C>& r2) {
    Parameter<A> k1 = r1.selector();
    Parameter<B> k2 = r2.selector();
    Parameter<A> sel{"max(" + k1.name + "," + k2.name + "∘r)",
                     [r1, k1, k2](const A& x, Meter& m) {
                         const std::uint64_t a = k1.eval(x, m);
                         const B y = r1.member(a).translate(x, m);
                         return std::max(a, k2.eval(y, m));
                     }};
    UniformReduction<A, C> out(
        r2.description() + "∘" + r1.description(),
        [r1, r2](std::uint64_t i) { return compose_reductions(r1.member(i), r2.member(i)); },
        std::move(sel));
    if (r1.f && r2.f && r1.c && r2.c) {
        auto f1 = *r1.f, f2 = *r2.f;
        out.f = [f1, f2](std::uint64_t k) { return f1(k) * f2(k); };
        out.c = *r1.c + *r2.c;
    }
    return out;
}

// Lemma 3 construction: pull a witness for the target problem back along a
// reduction. M*_k runs M'_k on r_k(x), accumulating both costs plus one
// overhead unit into the same meter; the selector is the same maximum as in
// composition. When both sides carry an f the result carries the product
// f * f'. The budget rule for the combined witness (exponent c + d) is
// attached by the caller, which knows both shapes.
template <class S, class D>
UniformWitness<S> pullback_solver(const UniformReduction<S, D>& red, const UniformWitness<D>& w) {
    AlgorithmFamily<S> fam(
        "pullback", [red, w](std::uint64_t k) {
            const auto& r_k = red.member(k);
            const auto& m_k = w.family.member(k);
            return Solver<S>{"pullback-" + std::to_string(k), [r_k, m_k](const S& x, Meter& m) {
                                 m.tick();
                                 return m_k.run(r_k.translate(x, m), m);
                             }};
        });
    Parameter<S> k1 = red.selector();
    Parameter<D> k2 = w.selector;
    Parameter<S> sel{"max(" + k1.name + "," + k2.name + "∘r)",
                     [red, k1, k2](const S& x, Meter& m) {
                         const std::uint64_t a = k1.eval(x, m);
                         const D y = red.member(a).translate(x, m);
                         return std::max(a, k2.eval(y, m));
                     }};
    UniformWitness<S> out{std::move(fam), std::move(sel), std::nullopt, std::nullopt};
    if (red.f && w.f) {
        auto f1 = *red.f, f2 = *w.f;
        out.f = [f1, f2](std::uint64_t k) { return f1(k) * f2(k); };
    }
    return out;
}

// Strongly uniform reduction: the uniform conditions plus the translation
// budget slack * f(k) * |x|^c on every instance of the truncation.
template <class S, class D>
VerificationReport verify_su_reduction(const UniformReduction<S, D>& red,
                                       const Language<S>& src_lang,
                                       const Parameterization<S>& src_p,
                                       const Language<D>& tgt_lang,
                                       const Parameterization<D>& tgt_p, const Truncation<S>& u,
                                       const Universe<S>& src_u, const Universe<D>& tgt_u,
                                       const ReductionCaps& caps, std::uint64_t slack,
                                       std::string id = "verify-su-reduction") {
    VerificationReport r = verify_uniform_reduction(red, src_lang, src_p, tgt_lang, tgt_p, u,
                                                    src_u, tgt_u, caps, id);
    if (r.status != Status::pass) return r;
    if (!red.f || !red.c) {
        r.status = Status::fail;
        r.add_witness("missing-bound", "", "reduction carries no f or exponent");
        return r;
    }
    auto powc = [](std::uint64_t n, std::uint64_t c) {
        std::uint64_t p = 1;
        for (std::uint64_t i = 0; i < c; ++i) p *= n;
        return p;
    };
    for (std::uint64_t k = 1; k <= caps.index_cap; ++k) {
        const auto& rk = red.member(k);
        for (const auto& x : u) {
            Meter m;
            rk.translate(x.value, m);
            const std::uint64_t allowed =
                slack * (*red.f)(k) * powc(src_u.length(x.value), *red.c);
            if (m.steps > allowed) {
                r.status = Status::fail;
                r.add_witness("budget-violation", src_u.encode(x.value),
                              "k=" + std::to_string(k) + " measured " + std::to_string(m.steps) +
                                  " allowed " + std::to_string(allowed));
                return r;
            }
        }
    }
    return r;
}

} // namespace parakit
