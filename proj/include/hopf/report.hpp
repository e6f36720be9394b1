#pragma once

#include <string>
#include <vector>

namespace hopf {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing
};

struct Report {
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        items.push_back({name, pass, witness});
    }
    void merge(const Report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return &it;
        return nullptr;
    }
};

}  // namespace hopf
