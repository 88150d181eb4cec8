#pragma once

// Golden replays of the published numeric examples, shared by the
// `verify-paper` subcommand and the acceptance suite.

#include <functional>
#include <string>
#include <vector>

namespace dedekind {

struct ReplayResult {
    bool pass = false;
    std::string detail;  // exact expected-vs-actual diff on failure
};

struct ReplayItem {
    std::string id;
    std::string group;
    std::string description;
    std::function<ReplayResult()> run;
};

const std::vector<ReplayItem>& replay_items();

}  // namespace dedekind
