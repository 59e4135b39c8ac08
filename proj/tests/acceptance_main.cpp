#include <cstdio>

#include "toric/selftest.hpp"

int main() {
    int failures = 0;
    for (const auto& c : toric::run_acceptance()) {
        std::printf("criterion %d: %s - %s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str());
        if (c.pass) continue;
        ++failures;
        for (const auto& row : c.checks)
            if (!row.pass)
                std::printf("  failed: %s (%s)\n", row.name.c_str(), row.details.c_str());
    }
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
