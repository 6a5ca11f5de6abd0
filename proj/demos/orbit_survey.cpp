// Survey: every type-A orbit with total at most 10 whose closure passes the
// boundary-depth test, with its component group and zero-parameter counts,
// followed by the catalog of exceptional boundary orbits.

#include <iomanip>
#include <iostream>
#include <vector>

#include <hcmod/classifier.hpp>
#include <hcmod/root_system.hpp>

using namespace hcmod;

namespace {

std::vector<Partition> valid_partitions_up_to(int max_n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            Partition tau(current);
            if (boundary_codim_at_least_4(tau)) out.push_back(tau);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    for (int n = 1; n <= max_n; ++n) rec(rec, n, n);
    return out;
}

} // namespace

int main() {
    std::cout << std::left << std::setw(22) << "partition" << std::setw(10) << "group"
              << std::setw(12) << "model" << std::setw(8) << "systems"
              << "admitted\n";
    for (const Partition& tau : valid_partitions_up_to(10)) {
        const ClassificationReport r = classify_canonical(tau);
        std::cout << std::left << std::setw(22) << tau.to_string() << std::setw(10)
                  << r.group_descriptor << std::setw(12) << r.model << std::setw(8)
                  << r.local_systems << r.hc_modules << "\n";
    }

    std::cout << "\nexceptional boundary orbits:\n";
    for (const ExceptionalEntry& e : exceptional_catalog()) {
        const ExceptionalVerdict v = exceptional_verdict(e);
        std::cout << "  " << std::left << std::setw(9) << e.real_form << "#" << std::setw(4)
                  << e.orbit_number << std::setw(9) << e.g_orbit;
        if (v.local_systems > 0)
            std::cout << v.local_systems << " systems, " << v.hc_modules << " quantize";
        else if (v.verdict.rfind("equivalence", 0) == 0)
            std::cout << "equivalence at every parameter";
        else
            std::cout << "at least one rank-1 system fails (counts unstated)";
        std::cout << "\n";
    }
    return 0;
}
