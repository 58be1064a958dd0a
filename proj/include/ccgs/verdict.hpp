#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccgs/lasso.hpp"
#include "ccgs/strategy.hpp"

namespace ccgs {

enum class Status { Holds, Fails, BoundLimited };

struct CoalitionStrategies {
    std::vector<int> coalition;           // 0-based agent ids, sorted
    std::vector<Strategy> strategies;     // aligned with coalition
};

// Three-valued answer. HOLDS/FAILS carry a checkable witness whenever the
// underlying claim is existential; BOUND_LIMITED(k) only arises from
// operations documented as bounded strategy searches.
struct Verdict {
    Status status = Status::Fails;
    std::optional<Lasso> lasso;
    std::optional<CoalitionStrategies> deviation;
    std::optional<int> agent;  // violated loser-condition agent, when relevant
    int bound = 0;
    std::string note;

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }
    bool bound_limited() const { return status == Status::BoundLimited; }
};

const char* status_name(Status s);

}  // namespace ccgs
