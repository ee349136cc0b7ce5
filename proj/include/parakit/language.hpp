#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "parakit/meter.hpp"
#include "parakit/universe.hpp"

namespace parakit {

// A total decision predicate on instances. Languages are semantic objects
// and are not metered; metered decision procedures are Solvers.
template <class T>
struct Language {
    std::string name;
    std::function<bool(const T&)> member;

    bool operator()(const T& x) const { return member(x); }
};

// A total function from instances to naturals, evaluated inside a cost
// context. Values used as family indices or selectors are always >= 1;
// raw graph parameters may take the value 0 (an edgeless graph has
// degeneracy 0), which slice() and the tables handle directly.
template <class T>
struct Parameter {
    std::string name;
    std::function<std::uint64_t(const T&, Meter&)> eval_fn;

    std::uint64_t eval(const T& x, Meter& m) const { return eval_fn(x, m); }

    std::uint64_t operator()(const T& x) const {
        Meter scratch;
        return eval_fn(x, scratch);
    }
};

template <class T>
Parameter<T> make_parameter(std::string name, std::function<std::uint64_t(const T&)> f) {
    return Parameter<T>{std::move(name), [f = std::move(f)](const T& x, Meter& m) {
                            m.tick();
                            return f(x);
                        }};
}

template <class T>
Parameter<T> constant_parameter(std::uint64_t v, std::string name = "") {
    if (name.empty()) name = "const-" + std::to_string(v);
    return Parameter<T>{std::move(name), [v](const T&, Meter& m) {
                            m.tick();
                            return v;
                        }};
}

// Post-composition with a value rescaling, e.g. kappa -> 2^kappa.
template <class T>
Parameter<T> rescale(const Parameter<T>& p, std::function<std::uint64_t(std::uint64_t)> f,
                     std::string name) {
    return Parameter<T>{std::move(name), [p, f = std::move(f)](const T& x, Meter& m) {
                            return f(p.eval(x, m));
                        }};
}

// Memoizes evaluations by canonical encoding; used for expensive graph
// parameters scanned repeatedly by the suites.
template <class T>
Parameter<T> memoized(const Parameter<T>& p, const Universe<T>& u) {
    auto cache = std::make_shared<std::unordered_map<std::string, std::uint64_t>>();
    return Parameter<T>{p.name, [p, u, cache](const T& x, Meter& m) {
                            const std::string key = u.encode(x);
                            auto it = cache->find(key);
                            if (it != cache->end()) {
                                m.tick();
                                return it->second;
                            }
                            const std::uint64_t v = p.eval(x, m);
                            cache->emplace(key, v);
                            return v;
                        }};
}

// A parameterization is represented intensionally by a single parameter;
// the set it denotes is the family of languages bounded by some slice of
// the representative.
template <class T>
struct Parameterization {
    Parameter<T> representative;
    std::string provenance; // "canonical" or "constructed"
    std::string universe_name;
};

template <class T>
void require_same_universe(const Parameterization<T>& a, const Parameterization<T>& b) {
    if (!a.universe_name.empty() && !b.universe_name.empty() &&
        a.universe_name != b.universe_name) {
        throw std::invalid_argument("universe mismatch: " + a.universe_name + " vs " +
                                    b.universe_name);
    }
}

} // namespace parakit
