#include "commring/claims.hpp"

namespace commring {

// Throughout: R is a finite non-commutative ring of order n, G = Gamma(R) is
// its commuting graph on the m = n - |Z(R)| non-central elements, Gbar the
// complement of G. E and F are the two order-p^2 presentations.

const std::vector<ClaimInfo>& claim_catalog() {
    static const std::vector<ClaimInfo> catalog = {
        // structural preliminaries
        {"Lem3", "prelim",
         "if Z(R)={0}, every vertex degree k in Gbar satisfies k > (n-1)/2",
         "non-commutative rings with zero center"},
        {"Lem30", "prelim",
         "if Z(R)={0}, G is not a cycle and has no C4 component",
         "non-commutative rings with zero center"},
        {"Lem40", "prelim",
         "if Z(R)={0}, G does not contain both an isolated vertex and a "
         "vertex of degree one",
         "non-commutative rings with zero center"},
        {"Thm17", "prelim",
         "any two vertices of Gbar are joined by a path of length at most 2",
         "non-commutative rings"},
        {"Thm20", "prelim", "diam(Gbar) = 2 whenever n > 4",
         "non-commutative rings of order > 4"},
        {"Thm18", "prelim", "diam(Gbar) = 1 implies R is of type E or F",
         "non-commutative rings with diam(Gbar) = 1"},
        {"Thm21", "prelim", "Gbar is not a complete bipartite graph",
         "non-commutative rings"},
        {"Lem10", "prelim",
         "a non-commutative ring of order p^2 has Z(R) = {0}",
         "non-commutative rings of prime-square order"},
        {"Lem8", "prelim",
         "for non-central x, y with commutative centralizers, y in C(x) "
         "implies C(x) = C(y)",
         "non-commutative rings"},
        // general degree and domination bounds, checked on G and Gbar
        {"Thm13", "prelim",
         "ceil(m/(1+max_deg)) <= gamma <= m - max_deg for any graph",
         "non-commutative rings"},
        {"Thm14", "prelim",
         "gamma <= (m + 2 - min_deg)/2 for graphs without isolated vertices",
         "corpus graphs without isolated vertices"},
        {"Thm39", "prelim",
         "gamma <= m/2 for graphs without isolated vertices",
         "corpus graphs without isolated vertices"},
        {"Lem19", "prelim", "gamma = 1 iff max_deg = m - 1",
         "non-commutative rings"},
        {"ThmGbar", "prelim",
         "gamma(G) + gamma(Gbar) <= m + 1 and gamma(G)*gamma(Gbar) <= m",
         "non-commutative rings"},
        {"Thmc4", "prelim",
         "for even m without isolated vertices, gamma = m/2 iff every "
         "component is C4 or a corona H o K1",
         "corpus graphs of even order without isolated vertices"},
        {"Lem1", "prelim",
         "gamma_s = m iff every vertex is isolated, an endvertex, or "
         "adjacent to an endvertex",
         "non-commutative rings"},
        {"LemParity", "prelim", "gamma_s has the same parity as m",
         "non-commutative rings"},
        {"Lem5", "prelim", "min_deg >= 6 forces |V-| >= 3",
         "corpus graphs with minimum degree at least 6"},
        // order exclusions
        {"Lem6", "exclusions", "every ring of prime order is commutative",
         "prime orders within the enumeration range"},
        {"Lem16", "exclusions",
         "there is no non-commutative ring of order 6 with zero center",
         "order 6"},
        {"Cor4", "exclusions",
         "a non-commutative ring with zero center has order 4 or >= 8",
         "non-commutative rings with zero center"},
        // complement-sum characterisation
        {"ThmA.i", "theoremA",
         "gamma(G) + gamma(Gbar) = n iff R is isomorphic to E4 or F4",
         "non-commutative rings with zero center"},
        {"ThmA.ii", "theoremA", "gamma(G) + gamma(Gbar) != n - 1",
         "non-commutative rings with zero center"},
        {"ThmA.iii", "theoremA",
         "gamma(G) + gamma(Gbar) = n - 2 iff n is even and G = K3 + (n-4)K1",
         "non-commutative rings with zero center"},
        // prime-square orders
        {"Thm2", "p2",
         "the non-commutative rings of order p^2 are exactly E and F",
         "orders p^2 within the enumeration range"},
        {"ThmP2.gamma", "p2", "gamma(G) = p + 1 for order-p^2 rings E and F",
         "rings E_p, F_p for p in {2, 3, 5}"},
        {"Lem37", "p2", "if Z(R)={0} then gamma(G) >= 3",
         "non-commutative rings with zero center"},
        {"Lem38", "p2",
         "if Z(R)={0}, gamma(G) = 3 iff R is isomorphic to E4 or F4",
         "non-commutative rings with zero center"},
        // cube orders
        {"ThmB.shape", "theoremB",
         "for |R| = p^3 with Z(R)={0}, every component of G is complete of "
         "size p-1 or p^2-1",
         "non-commutative rings of order p^3 with zero center"},
        {"ThmB.gamma", "theoremB",
         "gamma(G) = l1 + l2 where l1 + (p+1) l2 = p^2 + p + 1 counts the "
         "complete components by size",
         "non-commutative rings of order p^3 with zero center"},
        {"Lem11", "theoremB",
         "for |R| = p^3 with Z(R)={0}, non-commuting x, y have "
         "C(x) inter C(y) = {0}",
         "non-commutative rings of order p^3 with zero center"},
        {"ThmB.signed", "theoremB", "gamma_s(G) = 2(l1 + l2)",
         "non-commutative rings of order p^3 with zero center"},
        // products
        {"ThmC", "products",
         "gamma of the commuting graph of a product of zero-center rings is "
         "the minimum of the factors' gammas",
         "products of non-commutative zero-center rings"},
        {"ThmSP", "products",
         "for commutative R2, Gamma(R1 x R2) is Gamma(R1) boxtimes K_{n2} "
         "and gamma equals gamma(Gamma(R1))",
         "pairs (zero-center R1, commutative R2)"},
        {"ThmE.bound", "products",
         "gamma_s(Gamma(prod R_i)) <= prod n_i - prod(delta_i + 2) + 2 when "
         "all delta_i odd, else + 1",
         "products of non-commutative zero-center rings"},
        // signed characterisations
        {"ThmD.i", "signed",
         "for even n with Z(R)={0}, gamma_s(G) = n - 1 iff R is isomorphic "
         "to E4 or F4",
         "non-commutative zero-center rings of even order"},
        {"ThmD.ii", "signed",
         "for odd n with Z(R)={0}, gamma_s(G) = n - 1 iff G is a union of "
         "(n-1)/2 copies of P2",
         "non-commutative zero-center rings of odd order"},
        {"Thm32", "signed",
         "for odd n with |Z(R)| = c, gamma_s(G) = n - 1 iff G is a union "
         "of (n-c)/2 copies of P2",
         "non-commutative rings of odd order"},
        {"Thm3k", "signed",
         "for odd n with Z(R)={0}, gamma(G) = (n-1)/2 iff G is a union of "
         "(n-1)/2 copies of P2, and then n = 3^k with k > 1",
         "non-commutative zero-center rings of odd order"},
        {"Lem26", "signed",
         "for |R| = 8 with Z(R)={0}, gamma_s(Gbar) = 1",
         "non-commutative zero-center rings of order 8"},
        {"Lem24", "signed",
         "for |R| = 2p (p an odd prime) with Z(R)={0}, gamma_s(Gbar) = 2",
         "non-commutative zero-center rings of order 2p, p an odd prime"},
        {"Thm22", "signed",
         "gamma_s(Gbar) = n - 3 iff R is isomorphic to E4 or F4",
         "non-commutative rings with zero center"},
        {"Thm23", "signed", "gamma_s(Gbar) is neither n - 1 nor n - 5",
         "non-commutative rings with zero center"},
        {"Lem42", "signed",
         "for odd n with 3 not dividing n and Z(R)={0}, "
         "3 < gamma(G) < (n-1)/2",
         "non-commutative zero-center rings of odd order not divisible by 3"},
        {"Lem43", "signed", "if Z(R)={0} then gamma(Gbar) < (n-1)/2",
         "non-commutative rings with zero center"},
        {"Lem2t", "signed",
         "if Z(R)={0} and gamma(Gbar) = 1 then n is a power of 2",
         "non-commutative zero-center rings with gamma(Gbar) = 1"},
        {"Lem15", "signed",
         "if Z(R)={0} and t = |V-(Gbar)| > 0 then min_deg(Gbar) <= 2t + 1 "
         "and n <= 4t + 2",
         "non-commutative rings with zero center"},
        {"ThmZbar2", "signed", "if Z(R) != {0} then gamma(Gbar) >= 2",
         "non-commutative rings with nonzero center"},
        {"Thm9", "signed",
         "gamma_s(K_n) = 2 for even n and 1 for odd n",
         "complete graphs K_2 .. K_10"},
    };
    return catalog;
}

const ClaimInfo* find_claim(std::string_view id) {
    for (const auto& c : claim_catalog())
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace commring
