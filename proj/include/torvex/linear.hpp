#pragma once

#include "torvex/rational.hpp"

#include <algorithm>
#include <functional>
#include <vector>
#include <optional>

namespace torvex {

// Sparse linear combination over an ordered key type, stored as a sorted
// vector of (key, coefficient) pairs. Zero coefficients are never stored, so
// operator== is exact structural equality.
template <class Key>
class LinComb {
  public:
    using map_type = std::vector<std::pair<Key, Rat>>;

    LinComb() = default;
    explicit LinComb(const Key& k, Rat c = Rat(1))
    {
        if (c != 0)
            terms_.emplace_back(k, std::move(c));
    }

    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rat coeff(const Key& k) const
    {
        auto it = find(k);
        return it == terms_.end() || it->first != k ? Rat(0) : it->second;
    }

    void add(const Key& k, const Rat& c)
    {
        if (c == 0)
            return;
        auto it = find(k);
        if (it != terms_.end() && it->first == k) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        } else {
            terms_.emplace(it, k, c);
        }
    }

    // Builds a combination from terms already sorted by key with no
    // duplicates; zero coefficients are dropped.
    static LinComb from_sorted(map_type v)
    {
        LinComb out;
        out.terms_ = std::move(v);
        std::erase_if(out.terms_, [](const auto& p) { return p.second == 0; });
        return out;
    }

    LinComb& operator+=(const LinComb& o) { return merge(o, false); }
    LinComb& operator-=(const LinComb& o) { return merge(o, true); }

    // this += s * o without materializing a scaled copy of o.
    LinComb& add_scaled(const LinComb& o, const Rat& s)
    {
        if (s == 0 || o.terms_.empty())
            return *this;
        map_type merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), ae = terms_.end();
        auto b = o.terms_.begin(), be = o.terms_.end();
        while (a != ae && b != be) {
            if (a->first < b->first) {
                merged.push_back(std::move(*a++));
            } else if (b->first < a->first) {
                merged.emplace_back(b->first, s * b->second);
                ++b;
            } else {
                Rat c = a->second + s * b->second;
                if (c != 0)
                    merged.emplace_back(std::move(a->first), std::move(c));
                ++a;
                ++b;
            }
        }
        for (; a != ae; ++a)
            merged.push_back(std::move(*a));
        for (; b != be; ++b)
            merged.emplace_back(b->first, s * b->second);
        terms_ = std::move(merged);
        return *this;
    }
    LinComb& operator*=(const Rat& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a)
    {
        for (auto& [k, c] : a.terms_)
            c = -c;
        return a;
    }

    bool operator==(const LinComb&) const = default;

    // Rebuilds the combination under a key-wise linear map.
    template <class F>
    auto map_terms(F&& f) const
    {
        using Out = decltype(f(std::declval<const Key&>()));
        Out out;
        for (auto& [k, c] : terms_) {
            Out img = f(k);
            img *= c;
            out += img;
        }
        return out;
    }

  private:
    LinComb& merge(const LinComb& o, bool negate)
    {
        if (o.terms_.empty())
            return *this;
        map_type merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), ae = terms_.end();
        auto b = o.terms_.begin(), be = o.terms_.end();
        while (a != ae && b != be) {
            if (a->first < b->first) {
                merged.push_back(std::move(*a++));
            } else if (b->first < a->first) {
                merged.emplace_back(b->first, negate ? -b->second : b->second);
                ++b;
            } else {
                Rat c = negate ? a->second - b->second : a->second + b->second;
                if (c != 0)
                    merged.emplace_back(std::move(a->first), std::move(c));
                ++a;
                ++b;
            }
        }
        for (; a != ae; ++a)
            merged.push_back(std::move(*a));
        for (; b != be; ++b)
            merged.emplace_back(b->first, negate ? -b->second : b->second);
        terms_ = std::move(merged);
        return *this;
    }

    typename map_type::iterator find(const Key& k)
    {
        return std::lower_bound(terms_.begin(), terms_.end(), k,
                                [](const auto& p, const Key& key) { return p.first < key; });
    }
    typename map_type::const_iterator find(const Key& k) const
    {
        return std::lower_bound(terms_.begin(), terms_.end(), k,
                                [](const auto& p, const Key& key) { return p.first < key; });
    }

    map_type terms_;
};

} // namespace torvex
