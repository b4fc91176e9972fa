#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace skewhopf {

enum class Status { pass, fail, unresolved };

std::string to_string(Status s);

// One named verification with the identity it tests and, on failure, the
// nonzero residual in canonical text form.
struct Check {
    std::string name;
    std::string law;
    Status status = Status::pass;
    std::string witness;  // empty on pass
};

struct CheckList {
    std::vector<Check> items;

    void pass(std::string name, std::string law);
    void fail(std::string name, std::string law, std::string witness);
    void unresolved(std::string name, std::string law, std::string note);
    void append(const CheckList& other);

    bool all_pass() const;
    std::size_t count(Status s) const;
    const Check* first_failure() const;
};

}  // namespace skewhopf
