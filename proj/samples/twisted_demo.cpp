// Builds a twisted code, checks it is MRD, and finds the monomial map
// between its Delsarte dual and the predicted partner code.
#include "mrdkit/mrdkit.hpp"

#include <iostream>

int main() {
    using namespace mrdkit;
    const auto F = FieldCtx::build(3, 1, 4);
    const Elem eta = F->pow(F->generator(), 7);
    const auto params = FamilyParams::twisted(F, 2, 1, 1, eta);
    const auto code = gtg_construct(params);

    std::cout << text::format_field(*F) << "\n" << text::format_code(params) << "\n";
    const auto mrd = is_mrd(code);
    std::cout << "MRD: " << (mrd.mrd ? "true" : "false") << ", d = " << mrd.min_dist << "\n";
    for (const auto& [rank, count] : rank_distribution(code)) std::cout << "rank " << rank << ": " << count << "\n";

    const auto dual = delsarte_dual(code);
    const auto partner = dual_partner(params);
    std::cout << "dual partner: " << text::format_code(partner) << "\n";
    if (const auto w = monomial_search(dual, construct(partner))) {
        std::cout << "witness c=" << text::format_elem(w->c) << " d=" << text::format_elem(w->d) << " r=" << w->r
                  << " rho=" << w->rho << " shift=" << w->shift << "\n";
        std::cout << "verified: " << (verify_witness(dual, construct(partner), to_equiv(F, *w)) ? "yes" : "no") << "\n";
    }
    return 0;
}
