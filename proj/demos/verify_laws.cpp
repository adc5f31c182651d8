// Runs the law checker against the discrete fuzzy-set instance and prints a
// one-line summary per law.

#include <cstdio>

#include "mnesor/instances.hpp"
#include "mnesor/laws.hpp"

int main() {
    using namespace mnesor;
    const CheckReport report = check(discrete_instance(), CheckOptions{500, 42, 1e-9});
    for (const auto& lr : report.laws) {
        const Law* law = find_law(lr.id);
        std::printf("%-4s %-9s failures=%d  %s\n", lr.id.c_str(), lr.status.c_str(), lr.failures,
                    law->statement.c_str());
    }
    std::printf("verdict: %s\n", report.pass ? "pass" : "fail");
    return report.pass ? 0 : 1;
}
