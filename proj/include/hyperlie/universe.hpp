#pragma once

#include "hyperlie/rational.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

namespace hyperlie {

/// Ordered set of parameter names shared by a family of polynomials.
/// The declaration order fixes the lexicographic part of the term order.
class Universe {
public:
    explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw error("duplicate parameter name: " + names_[i]);
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::size_t index(const std::string& n) const {
        auto it = std::find(names_.begin(), names_.end(), n);
        if (it == names_.end()) throw error("unknown parameter: " + n);
        return static_cast<std::size_t>(it - names_.begin());
    }

    bool has(const std::string& n) const {
        return std::find(names_.begin(), names_.end(), n) != names_.end();
    }

    friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> names) {
    return std::make_shared<const Universe>(std::move(names));
}

inline UniversePtr empty_universe() {
    static const UniversePtr u = make_universe({});
    return u;
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace hyperlie
