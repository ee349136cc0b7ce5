#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace parakit {

// An instance paired with its 1-based enumeration index in its universe.
// All set-valued results are kept in index order for determinism.
template <class T>
struct Indexed {
    std::uint64_t index = 0;
    T value{};
};

template <class T>
using Truncation = std::vector<Indexed<T>>;

// A countable domain with an injective enumerator and a canonical word
// encoding. The encoding doubles as the equality key and as the input
// length |x| for budget rules.
template <class T>
struct Universe {
    std::string name;
    std::function<T(std::uint64_t)> enumerate;         // 1-based
    std::function<std::string(const T&)> encode;       // canonical word
    std::function<bool(const T&)> valid = [](const T&) { return true; };

    std::uint64_t length(const T& x) const { return encode(x).size(); }
};

template <class T>
Truncation<T> truncate(const Universe<T>& u, std::uint64_t n) {
    Truncation<T> out;
    out.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) out.push_back({i, u.enumerate(i)});
    return out;
}

// Scans indices 1..scan_limit keeping instances satisfying pred; universe
// indices are preserved so witness order stays enumeration order.
template <class T, class Pred>
Truncation<T> truncate_where(const Universe<T>& u, std::uint64_t scan_limit, Pred pred) {
    Truncation<T> out;
    for (std::uint64_t i = 1; i <= scan_limit; ++i) {
        T x = u.enumerate(i);
        if (pred(x)) out.push_back({i, std::move(x)});
    }
    return out;
}

// 1-based Cantor diagonal pairing: (1,1) -> 1, (1,2) -> 2, (2,1) -> 3, ...
inline std::uint64_t cantor_index(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t d = a + b;
    return (d - 1) * (d - 2) / 2 + a;
}

inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t p) {
    std::uint64_t d = 2;
    while ((d - 1) * (d - 2) / 2 + (d - 1) < p) ++d;
    const std::uint64_t a = p - (d - 1) * (d - 2) / 2;
    return {a, d - a};
}

template <class A, class B>
Universe<std::pair<A, B>> product_universe(std::string name, Universe<A> ua, Universe<B> ub,
                                           std::string sep = "|") {
    Universe<std::pair<A, B>> u;
    u.name = std::move(name);
    u.enumerate = [ua, ub](std::uint64_t p) {
        auto [a, b] = cantor_unpair(p);
        return std::make_pair(ua.enumerate(a), ub.enumerate(b));
    };
    u.encode = [ua, ub, sep](const std::pair<A, B>& x) {
        return ua.encode(x.first) + sep + ub.encode(x.second);
    };
    u.valid = [ua, ub](const std::pair<A, B>& x) {
        return ua.valid(x.first) && ub.valid(x.second);
    };
    return u;
}

// Natural numbers 0,1,2,... (value k has index k+1).
inline Universe<std::uint64_t> naturals_universe() {
    Universe<std::uint64_t> u;
    u.name = "naturals";
    u.enumerate = [](std::uint64_t i) { return i - 1; };
    u.encode = [](const std::uint64_t& k) { return std::to_string(k); };
    return u;
}

// Inverts a universe enumerator by scanning; used for enumeration-index
// parameters. Lookup extends the scan lazily and is capped to catch
// instances that were never enumerated.
template <class T>
class IndexCache {
public:
    explicit IndexCache(Universe<T> u, std::uint64_t scan_cap = 1u << 22)
        : u_(std::move(u)), scan_cap_(scan_cap) {}

    std::uint64_t index_of(const T& x) {
        const std::string key = u_.encode(x);
        auto it = idx_.find(key);
        if (it != idx_.end()) return it->second;
        while (scanned_ < scan_cap_) {
            ++scanned_;
            std::string k = u_.encode(u_.enumerate(scanned_));
            idx_.emplace(k, scanned_);
            if (k == key) return scanned_;
        }
        throw std::runtime_error("IndexCache: instance not found within scan cap: " + key);
    }

private:
    Universe<T> u_;
    std::uint64_t scan_cap_;
    std::uint64_t scanned_ = 0;
    std::unordered_map<std::string, std::uint64_t> idx_;
};

} // namespace parakit
