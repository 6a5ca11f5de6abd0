// Walkthrough of the smallest two-fold-cover classification: the partition
// (2,1), whose component group is cyclic of order 4.  Shows the group
// elements, the character table degrees, the monodromy scalars, and how the
// verdict changes between the zero parameter and a half-integral one.

#include <iostream>

#include <hcmod/classifier.hpp>

using namespace hcmod;

namespace {

void show(const ClassificationReport& r, const std::string& title) {
    std::cout << "--- " << title << " ---\n";
    std::cout << "component group: " << r.group_descriptor << " (order " << r.group_order
              << ", " << r.model << " model)\n";
    for (const IrreducibleRow& row : r.rows) {
        std::cout << "  row " << row.id << ": degree " << row.degree;
        for (const auto& [part, s] : row.scalars)
            std::cout << ", scalar at part " << part << " = " << to_string(s);
        std::cout << (row.admitted ? "  -> admitted" : "  -> excluded") << "\n";
        std::cout << "      " << row.rule << "\n";
    }
    std::cout << "counts: " << r.local_systems << " local systems, " << r.hc_modules
              << " admitted\n\n";
}

} // namespace

int main() {
    const Partition tau(std::vector<int>{2, 1});

    std::cout << "partition: " << tau.to_string() << "\n";
    const ComponentGroup comp = component_group(tau);
    std::cout << "group elements:";
    for (int a = 0; a < comp.group.order(); ++a) std::cout << " " << comp.group.label(a);
    std::cout << "\n";
    std::cout << "distinguished element at part 1: "
              << comp.group.label(comp.distinguished.at(1)) << " (order "
              << comp.group.element_order(comp.distinguished.at(1)) << ")\n\n";

    show(classify_canonical(tau), "zero parameter");

    QuantizationParameterA half({Rational(1, 2), Rational(0)});
    show(classify_spin(tau, half), "parameter (1/2, 0): non-integral period");

    QuantizationParameterA odd({Rational(1), Rational(0)});
    show(classify_spin(tau, odd), "parameter (1, 0): the excluded scalar flips");
    return 0;
}
