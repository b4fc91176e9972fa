#include "skewhopf/check.hpp"

namespace skewhopf {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::unresolved: return "unresolved";
    }
    return "unknown";
}

void CheckList::pass(std::string name, std::string law) {
    items.push_back({std::move(name), std::move(law), Status::pass, ""});
}

void CheckList::fail(std::string name, std::string law, std::string witness) {
    items.push_back({std::move(name), std::move(law), Status::fail, std::move(witness)});
}

void CheckList::unresolved(std::string name, std::string law, std::string note) {
    items.push_back({std::move(name), std::move(law), Status::unresolved, std::move(note)});
}

void CheckList::append(const CheckList& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
}

bool CheckList::all_pass() const {
    for (const auto& c : items)
        if (c.status != Status::pass) return false;
    return true;
}

std::size_t CheckList::count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : items)
        if (c.status == s) ++n;
    return n;
}

const Check* CheckList::first_failure() const {
    for (const auto& c : items)
        if (c.status == Status::fail) return &c;
    return nullptr;
}

}  // namespace skewhopf
