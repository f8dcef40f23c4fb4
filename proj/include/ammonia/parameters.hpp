#pragma once

// Keyed parameter values with unit strings and provenance. Files are parsed
// in data_io; the models only read from a ParameterSet.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "ammonia/error.hpp"

namespace ammonia {

struct Parameter {
    std::string key;
    double value = 0.0;
    std::string unit;
    std::string provenance;
};

class ParameterSet {
public:
    ParameterSet() = default;
    explicit ParameterSet(std::string name_space, std::string version = {})
        : namespace_(std::move(name_space)), version_(std::move(version))
    {
    }

    const std::string& name_space() const { return namespace_; }
    const std::string& version() const { return version_; }
    void set_version(std::string v) { version_ = std::move(v); }

    /// Comment lines kept verbatim so serialization round-trips.
    const std::vector<std::string>& preamble() const { return preamble_; }
    void add_preamble(std::string line) { preamble_.push_back(std::move(line)); }

    const std::vector<Parameter>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    const Parameter* find(std::string_view key) const
    {
        auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Parameter& p) { return p.key == key; });
        return it == entries_.end() ? nullptr : &*it;
    }

    bool contains(std::string_view key) const { return find(key) != nullptr; }

    const Parameter& at(std::string_view key) const
    {
        if (const auto* p = find(key)) return *p;
        throw InputError("missing parameter '" + qualified(key) + "'");
    }

    double value(std::string_view key) const { return at(key).value; }

    /// Insert, or replace the value/unit/provenance of an existing key in place.
    void set(Parameter p)
    {
        detail::require(!p.key.empty(), "parameter key must not be empty");
        detail::require(std::isfinite(p.value), "parameter '" + qualified(p.key) + "' is not finite");
        for (auto& e : entries_)
            if (e.key == p.key) {
                e = std::move(p);
                return;
            }
        entries_.push_back(std::move(p));
    }

    /// Layer `top` over this set: matching keys take top's entry.
    void overlay(const ParameterSet& top)
    {
        for (const auto& p : top.entries()) set(p);
    }

    std::string qualified(std::string_view key) const
    {
        return namespace_.empty() ? std::string(key) : namespace_ + "." + std::string(key);
    }

private:
    std::string namespace_;
    std::string version_;
    std::vector<std::string> preamble_;
    std::vector<Parameter> entries_;
};

} // namespace ammonia
