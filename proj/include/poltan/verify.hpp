#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace poltan {

enum class Profile { Quick, Full };

struct CheckRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool match = false;
    double millis = 0.0;
};

struct RunReport {
    std::string command;
    std::string profile;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::vector<CheckRow> rows;
    bool pass = false;  // true iff every row matches
};

// Runs the verification suite. Quick keeps tree sweeps at n <= 5 and the
// power-ideal checks at (n,d) in {(2,2),(3,2),(2,3)}; Full adds the n = 6
// exhaustive sweep, the sampled n = 7 sweep, (4,2) and (3,3). Rows are
// sorted by name; any internal error marks its row failed and the run
// continues. exhaustive7 additionally sweeps all 16807 trees on 7 vertices.
RunReport verify_all(Profile profile, std::uint64_t seed, int jobs, bool exhaustive7 = false);

// Worker count: `requested` if positive, else the POLTAN_JOBS environment
// variable, else the hardware concurrency.
int default_jobs(int requested = 0);

// Runs fn(0..count-1) across `jobs` threads; order of completion is
// unspecified, so fn must write only to its own slot.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace poltan
