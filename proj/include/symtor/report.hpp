#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace symtor {

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct CheckItem {
    std::string check;
    Verdict verdict = Verdict::pass;
    nlohmann::json detail;
};

/// Accumulates per-check verdicts with witnesses. Merging is associative, so
/// partitioned sweeps can combine their pieces in any order.
class Report {
public:
    void add(std::string check, Verdict v, nlohmann::json detail = {}) {
        items_.push_back({std::move(check), v, std::move(detail)});
    }

    void add_pass(std::string check) { add(std::move(check), Verdict::pass); }

    void merge(const Report& o) {
        items_.insert(items_.end(), o.items_.begin(), o.items_.end());
    }

    const std::vector<CheckItem>& items() const { return items_; }

    bool all_pass(bool allow_inconclusive = false) const {
        for (const auto& it : items_) {
            if (it.verdict == Verdict::fail) return false;
            if (it.verdict == Verdict::inconclusive && !allow_inconclusive) return false;
        }
        return true;
    }

    bool has_fail() const {
        for (const auto& it : items_)
            if (it.verdict == Verdict::fail) return true;
        return false;
    }

    const CheckItem* find(const std::string& name) const {
        for (const auto& it : items_)
            if (it.check == name) return &it;
        return nullptr;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& it : items_) {
            nlohmann::json j;
            j["check"] = it.check;
            j["verdict"] = to_string(it.verdict);
            if (!it.detail.is_null()) j["detail"] = it.detail;
            arr.push_back(j);
        }
        return arr;
    }

    std::string summary() const {
        std::string out;
        for (const auto& it : items_) {
            out += it.check;
            out += ": ";
            out += to_string(it.verdict);
            if (!it.detail.is_null() && it.verdict != Verdict::pass) {
                out += " ";
                out += it.detail.dump();
            }
            out += "\n";
        }
        return out;
    }

private:
    std::vector<CheckItem> items_;
};

} // namespace symtor
