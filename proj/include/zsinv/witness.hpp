#pragma once

#include "zsinv/product.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zsinv {

enum class WitnessName { dihedral_main, dihedral_coprime, dihedral_nN, metacyclic, generic_identity_pad, inverse_family };

std::string_view witness_name(WitnessName n);
WitnessName parse_witness_name(std::string_view s);

struct WitnessSpec {
    WitnessName name = WitnessName::dihedral_main;
    std::vector<int> params;
    int expected_length = 0;
    ProductQuery predicate;
};

struct Witness {
    WitnessSpec spec;
    Sequence sequence;
    bool free = false;  ///< re-checked by the product engine
};

// Every constructor checks its own output against the stated predicate and
// throws std::logic_error if the construction is not free.

/// x^[2d-1] * y * y^2 * ... * y^(2^(floor log2 n - 1)) over D_2n; d odd, n | d.
Witness dihedral_main_witness(int n, int d);
/// x * y^[nd-1] over D_2n; gcd(n, d) = 1.
Witness dihedral_coprime_witness(int n, int d);
/// dihedral_main_witness(n, n) for odd n.
Witness dihedral_nN_witness(int n);
/// kpN-free sequence of length p + d - 2, d = lcm(kp, q) + gcd(kp, q) - 1,
/// over C_p x| C_q. When q does not divide k this is x^[p-1] y^[d-1]; when
/// q | k that sequence contains y^[kp] and is replaced by
/// x^[p-1] 1^[kp-1] y^[q-1], which has the same length.
Witness metacyclic_witness(int p, int q, int s, int k);
/// The literal x^[p-1] y^[d-1] without the correction above.
Sequence metacyclic_literal_sequence(int p, int q, int s, int k);
/// 1^[d-1] S1 for a product-free S1.
Witness generic_identity_pad(const Sequence& s1, int d);
/// variant 1: (y^t)^[n-1] xy^s over D_2n, n >= 4, gcd(t, n) = 1.
/// variant 2: n = 3, params {t, nu}: (y^t, y^t, xy^nu), or params {} for
/// (x, xy, xy^2). variant 2 is built as written, even when it fails
/// (t = 3 gives y^3 = 1); check `free`.
Witness inverse_family(int n, int variant, const std::vector<int>& params);

}  // namespace zsinv
