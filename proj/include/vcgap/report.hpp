#pragma once

#include <string>
#include <vector>

namespace vcgap {

/// Result of an independent verification pass: one entry per check,
/// failures carry a detail naming the offending constraint/vertex/value.
struct Report {
    struct Entry {
        std::string check;
        bool pass = false;
        std::string detail;
    };

    std::vector<Entry> entries;

    void add(std::string check, bool pass, std::string detail = "") {
        entries.push_back({std::move(check), pass, std::move(detail)});
    }

    bool ok() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    const Entry* find(const std::string& check) const {
        for (const auto& e : entries)
            if (e.check == check) return &e;
        return nullptr;
    }
};

}  // namespace vcgap
